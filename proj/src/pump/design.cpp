#include "pairshaper/pump/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"
#include "pairshaper/core/quadrature.hpp"
#include "pairshaper/core/units.hpp"

namespace pairshaper::pump {

using cplx = std::complex<double>;

std::complex<double> anyonic_target(const AnyonicTarget& target, double omega_minus) {
  if (!(target.alpha >= 0.0 && target.alpha <= 2.0)) throw std::invalid_argument("anyonic alpha must lie in [0, 2]");
  if (!(target.beta > 0.0)) throw std::invalid_argument("anyonic beta must be > 0");
  const double mag = std::pow(std::abs(omega_minus), target.alpha) * std::exp(-omega_minus * omega_minus / target.beta);
  return omega_minus < 0.0 ? std::polar(mag, target.exchange_phase) : cplx(mag, 0.0);
}

PumpProfile design_anyonic_profile(const AnyonicTarget& target, const core::DeviceSpec& device,
                                   const core::PumpSpec& pump, int n_samples) {
  core::require_valid(device);
  anyonic_target(target, 0.0);
  if (n_samples < 2) throw std::invalid_argument("design needs at least 2 samples");

  const double vg = device.group_velocity;
  const double half = 0.5 * device.length_mm;
  const double dk = core::wavevector_offset(device, pump);

  // exp(-2 w^2 / beta) < 1e-13 beyond |w| = 4 sqrt(beta).
  const double omega_max = 4.0 * std::sqrt(target.beta);
  const double z_reach = std::max(half, 1.0);
  const double rate = z_reach / vg;
  const auto rule = core::composite_gauss_legendre(-omega_max, omega_max, {0.0},
                                                   std::min(omega_max / 8.0, 2.0 * core::units::pi / rate));
  std::vector<cplx> weighted(rule.nodes.size());
  double total_energy = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const cplx phi = anyonic_target(target, rule.nodes[k]);
    weighted[k] = phi * rule.weights[k] / (2.0 * core::units::pi * vg);
    total_energy += std::norm(phi) * rule.weights[k];
  }
  total_energy /= 2.0 * core::units::pi * vg;  // Parseval

  auto inverse = [&](double z) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += weighted[k] * std::polar(1.0, rule.nodes[k] * z / vg);
    return acc;
  };

  const auto zrule = core::composite_gauss_legendre(-half, half, {0.0}, std::min(half / 8.0, vg / std::sqrt(target.beta)));
  std::vector<double> inside_terms(zrule.nodes.size());
  parallel_for(zrule.nodes.size(),
               [&](std::size_t k) { inside_terms[k] = std::norm(inverse(zrule.nodes[k])) * zrule.weights[k]; });
  double inside = 0.0;
  for (double t : inside_terms) inside += t;
  const double outside_fraction = 1.0 - inside / total_energy;
  if (outside_fraction > 0.01) {
    throw DesignInfeasible("designed pump leaves " + std::to_string(100.0 * outside_fraction) +
                           "% of its energy outside the waveguide");
  }

  std::vector<cplx> values(static_cast<std::size_t>(n_samples));
  std::vector<double> z(values.size());
  for (int k = 0; k < n_samples; ++k) z[k] = -half + device.length_mm * k / (n_samples - 1);
  parallel_for(values.size(), [&](std::size_t k) {
    cplx v = inverse(z[k]);
    if (dk != 0.0) v *= std::polar(1.0, -dk * z[k]);
    values[k] = v;
  });

  double peak = 0.0;
  for (const auto& v : values) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw NumericalError("designed pump vanishes on the sample grid");

  PumpProfile profile;
  profile.kind = ProfileKind::designed;
  profile.wavelength_nm = pump.wavelength_nm;
  profile.samples.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    profile.samples.push_back({z[k], std::abs(values[k]) / peak, std::arg(values[k])});
  }
  return profile;
}

}  // namespace pairshaper::pump
