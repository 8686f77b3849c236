#include "pairshaper/pdc/jsa.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"
#include "pairshaper/core/units.hpp"
#include "pairshaper/pdc/cavity.hpp"

namespace pairshaper::pdc {

using cplx = std::complex<double>;

double JointAmplitude::norm_squared() const {
  const double d = grid.spacing();
  return values.squaredNorm() * d * d;
}

void normalize(JointAmplitude& jsa) {
  const double n2 = jsa.norm_squared();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw NumericalError("joint amplitude has zero or non-finite norm");
  jsa.values /= std::sqrt(n2);
  jsa.normalized = true;
}

PhaseMatchFunction jsa_phase_match(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                   const core::FrequencyGrid& grid) {
  const int n = grid.n_points();
  const double d = grid.spacing();
  const double base = grid.center_signal() - grid.center_idler();
  Eigen::VectorXd omega_minus(2 * n - 1);
  for (int k = -(n - 1); k <= n - 1; ++k) omega_minus[k + n - 1] = base + k * d;
  return sample_phase_match(pump.profile, device, pump, omega_minus);
}

JointAmplitude assemble_jsa(const core::DeviceSpec& device, const core::PumpSpec& pump,
                            const core::FrequencyGrid& grid) {
  core::require_valid(device);
  core::require_valid(pump);
  const int n = grid.n_points();
  const double d = grid.spacing();

  const PhaseMatchFunction pm = jsa_phase_match(device, pump, grid);

  // omega_+ depends on i + j only.
  std::vector<double> envelope(2 * n - 1);
  const double sum_center = grid.center_signal() + grid.center_idler();
  for (int k = 0; k < 2 * n - 1; ++k) envelope[k] = spectral_envelope(pump, sum_center + (k - (n - 1)) * d);

  std::vector<cplx> t_signal(n, 1.0);
  std::vector<cplx> t_idler(n, 1.0);
  if (device.cavity_enabled) {
    for (int i = 0; i < n; ++i) {
      t_signal[i] = fabry_perot_amplitude(device, grid.signal(i), Polarization::tm);
      t_idler[i] = fabry_perot_amplitude(device, grid.idler(i), Polarization::te);
    }
  }

  JointAmplitude jsa{grid, Eigen::MatrixXcd(n, n), false};
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const int i = static_cast<int>(row);
    for (int j = 0; j < n; ++j) {
      jsa.values(i, j) = envelope[i + j] * pm.values[i - j + n - 1] * t_signal[i] * t_idler[j];
    }
  });
  normalize(jsa);
  return jsa;
}

double phase_match_sigma(const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto& p = pump.profile;
  const double half = 0.5 * device.length_mm;
  if (p.kind == pump::ProfileKind::gaussian || p.kind == pump::ProfileKind::phase_step) {
    const double w = std::min(p.waist_mm, half);
    const double step = p.kind == pump::ProfileKind::phase_step ? std::abs(std::sin(0.5 * p.phase_step_rad)) : 0.0;
    return device.group_velocity * (1.0 + step) / w;
  }
  // rms spatial frequency of the truncated profile, from finite differences.
  const int m = 4096;
  const double h = device.length_mm / (m - 1);
  double power = 0.0, grad = 0.0, mom = 0.0;
  cplx prev = pump::evaluate_profile(p, -half);
  for (int k = 1; k < m; ++k) {
    const cplx cur = pump::evaluate_profile(p, -half + k * h);
    const cplx mid = 0.5 * (cur + prev);
    const cplx der = (cur - prev) / h;
    power += std::norm(mid) * h;
    grad += std::norm(der) * h;
    mom += (std::conj(mid) * der).imag() * h;
    prev = cur;
  }
  if (!(power > 0.0)) throw NumericalError("pump profile has no power inside the waveguide");
  const double mean = mom / power;
  const double var = std::max(grad / power - mean * mean, 1.0 / (half * half));
  return device.group_velocity * std::sqrt(var);
}

core::FrequencyGrid suggest_grid(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                 const GridOptions& options) {
  const double sigma_p = spectral_sigma(pump);
  const double sigma_m = phase_match_sigma(device, pump);
  const double shift = device.group_velocity * core::wavevector_offset(device, pump);
  const double half_span = options.n_sigma * (sigma_p + sigma_m) / 2.0 + std::abs(shift) / 2.0;

  double points = 2.0 * half_span / (std::min(sigma_p, sigma_m) / 3.0) + 1.0;
  if (device.cavity_enabled) {
    const double fsr = core::units::pi * core::units::c_mm_per_ps / (device.effective_group_index() * device.length_mm);
    points = std::max(points, options.points_per_fringe * 2.0 * half_span / fsr + 1.0);
  }
  const int n = std::clamp(static_cast<int>(std::ceil(points)), options.min_points,
                           std::max(options.min_points, options.max_points));
  const double center = 0.5 * pump.omega();
  return core::make_grid(center, center, half_span, n);
}

}  // namespace pairshaper::pdc
