#pragma once

#include <complex>

#include "pairshaper/core/spec.hpp"
#include "pairshaper/pump/profile.hpp"

namespace pairshaper::pump {

/// Target phase matching |omega_-|^alpha exp(-omega_-^2 / beta), multiplied by
/// exp(i delta_phi) for omega_- < 0.
struct AnyonicTarget {
  double exchange_phase = 0.0;
  double alpha = 0.0;
  /// rad^2 / ps^2
  double beta = 1.0;
};

/// Target value at omega_- (rad/ps). Throws std::invalid_argument if alpha is
/// outside [0, 2] or beta <= 0.
std::complex<double> anyonic_target(const AnyonicTarget& target, double omega_minus);

/// Inverse-Fourier pump design: F(z) = 1/(2 pi v_g) int phi(w) exp(i w z / v_g) dw,
/// times exp(-i (k - k_deg) z) so the forward integral with this pump returns
/// the target. Returns n_samples uniform samples over the waveguide, amplitude
/// scaled to peak 1. Throws DesignInfeasible when more than 1% of the profile
/// energy lies outside |z| <= L/2.
PumpProfile design_anyonic_profile(const AnyonicTarget& target, const core::DeviceSpec& device,
                                   const core::PumpSpec& pump, int n_samples = 1024);

}  // namespace pairshaper::pump
