#include "pairshaper/pdc/phase_matching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pairshaper/core/parallel.hpp"
#include "pairshaper/core/quadrature.hpp"
#include "pairshaper/core/units.hpp"
#include "pairshaper/special/faddeeva.hpp"

namespace pairshaper::pdc {

using cplx = std::complex<double>;

PhaseMatchIntegrator::PhaseMatchIntegrator(const pump::PumpProfile& profile, const core::DeviceSpec& device,
                                           const core::PumpSpec& pump, double omega_max)
    : inv_vg_(1.0 / device.group_velocity) {
  core::require_valid(device);
  const double half = 0.5 * device.length_mm;
  const double dk = core::wavevector_offset(device, pump);
  const double rate = std::abs(omega_max) * inv_vg_ + std::abs(dk) + profile.max_phase_rate(half);

  double width = device.length_mm / 8.0;
  if (rate > 0.0) width = std::min(width, 2.0 * core::units::pi / rate);  // 20 nodes per period
  if (profile.kind == pump::ProfileKind::gaussian || profile.kind == pump::ProfileKind::phase_step ||
      profile.kind == pump::ProfileKind::quadratic_phase) {
    width = std::min(width, 0.5 * profile.waist_mm);
  }

  const auto rule = core::composite_gauss_legendre(-half, half, profile.breakpoints(), width);
  z_ = rule.nodes;
  weighted_.resize(z_.size());
  for (std::size_t k = 0; k < z_.size(); ++k) {
    cplx f = pump::evaluate_profile(profile, z_[k]) * rule.weights[k];
    if (dk != 0.0) f *= std::polar(1.0, dk * z_[k]);
    weighted_[k] = f;
  }
}

cplx PhaseMatchIntegrator::operator()(double omega_minus) const {
  const double q = omega_minus * inv_vg_;
  cplx acc = 0.0;
  for (std::size_t k = 0; k < z_.size(); ++k) acc += weighted_[k] * std::polar(1.0, -q * z_[k]);
  return acc;
}

cplx phase_match_quadrature(const pump::PumpProfile& profile, const core::DeviceSpec& device,
                            const core::PumpSpec& pump, double omega_minus) {
  return PhaseMatchIntegrator(profile, device, pump, omega_minus)(omega_minus);
}

PhaseMatchFunction sample_phase_match(const pump::PumpProfile& profile, const core::DeviceSpec& device,
                                      const core::PumpSpec& pump, const Eigen::VectorXd& omega_minus) {
  const double omega_max = omega_minus.size() ? omega_minus.cwiseAbs().maxCoeff() : 0.0;
  const PhaseMatchIntegrator integrate(profile, device, pump, omega_max);
  PhaseMatchFunction out{omega_minus, Eigen::VectorXcd(omega_minus.size())};
  parallel_for(static_cast<std::size_t>(omega_minus.size()),
               [&](std::size_t k) { out.values[k] = integrate(omega_minus[k]); });
  return out;
}

cplx phase_match_closed_form(double waist_mm, double delta_phi, const core::DeviceSpec& device,
                             double omega_minus) {
  if (!(waist_mm > 0.0)) throw std::invalid_argument("closed-form phase matching needs waist > 0");
  const double x = omega_minus * waist_mm / device.group_velocity;
  return waist_mm * (special::faddeeva(cplx(0.5 * x, 0.0)) +
                     std::polar(1.0, delta_phi) * special::faddeeva(cplx(-0.5 * x, 0.0)));
}

double spectral_sigma(const core::PumpSpec& pump) {
  if (!(pump.pulse_fwhm_ps > 0.0)) throw std::invalid_argument("pulse_fwhm_ps must be > 0");
  return std::sqrt(2.0 * std::numbers::ln2) / pump.pulse_fwhm_ps;
}

double spectral_envelope(const core::PumpSpec& pump, double omega_plus) {
  const double sigma = spectral_sigma(pump);
  const double d = omega_plus - pump.omega();
  return std::exp(-d * d / (4.0 * sigma * sigma));
}

}  // namespace pairshaper::pdc
