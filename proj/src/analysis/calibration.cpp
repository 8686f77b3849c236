#include "pairshaper/analysis/calibration.hpp"

#include <boost/math/tools/roots.hpp>
#include <cstdint>

#include "pairshaper/analysis/schmidt.hpp"
#include "pairshaper/core/errors.hpp"

namespace pairshaper::analysis {

double schmidt_number_for(const core::DeviceSpec& device, const core::PumpSpec& pump, const pdc::GridOptions& grid) {
  return schmidt_number(pdc::assemble_jsa(device, pump, pdc::suggest_grid(device, pump, grid)).values);
}

double calibrate_group_velocity(const core::DeviceSpec& device, const core::PumpSpec& pump, double target_k,
                                const pdc::GridOptions& grid) {
  core::require_valid(device);
  core::require_valid(pump);
  const double sigma_q = pdc::phase_match_sigma(device, pump) / device.group_velocity;
  const double v_separable = pdc::spectral_sigma(pump) / sigma_q;

  auto f = [&](double vg) {
    core::DeviceSpec d = device;
    d.group_velocity = vg;
    return schmidt_number_for(d, pump, grid) - target_k;
  };
  const double lo = 0.25 * v_separable;
  const double hi = v_separable;
  if (!(f(lo) > 0.0 && f(hi) < 0.0)) throw NumericalError("group-velocity calibration target is not bracketed");
  std::uintmax_t iterations = 60;
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(30),
                                                        iterations);
  return 0.5 * (a + b);
}

}  // namespace pairshaper::analysis
