#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pairshaper/core/spec.hpp"
#include "pairshaper/pump/profile.hpp"

namespace pairshaper::pdc {

/// Phase-matching function sampled on an omega_- axis (rad/ps).
struct PhaseMatchFunction {
  Eigen::VectorXd omega_minus;
  Eigen::VectorXcd values;
};

/// Pre-tabulated quadrature for
///   phi(omega_-) = int_{-L/2}^{L/2} F(z) exp(i (k - k_deg) z) exp(-i omega_- z / v_g) dz.
/// The rule keeps at least 20 nodes per period of the fastest phase term for
/// |omega_-| <= omega_max.
class PhaseMatchIntegrator {
 public:
  PhaseMatchIntegrator(const pump::PumpProfile& profile, const core::DeviceSpec& device, const core::PumpSpec& pump,
                       double omega_max);

  std::complex<double> operator()(double omega_minus) const;
  std::size_t node_count() const { return z_.size(); }

 private:
  std::vector<double> z_;
  std::vector<std::complex<double>> weighted_;
  double inv_vg_;
};

/// Single-point quadrature of the phase-matching integral.
std::complex<double> phase_match_quadrature(const pump::PumpProfile& profile, const core::DeviceSpec& device,
                                            const core::PumpSpec& pump, double omega_minus);

/// Samples the phase-matching function on the given axis (parallel over points).
PhaseMatchFunction sample_phase_match(const pump::PumpProfile& profile, const core::DeviceSpec& device,
                                      const core::PumpSpec& pump, const Eigen::VectorXd& omega_minus);

/// Infinite-length form for a Gaussian pump of waist w with a phase step at z = 0:
///   w [fadf(x/2) + exp(i delta_phi) fadf(-x/2)],  x = omega_- w / v_g.
/// It equals 2w at omega_- = 0 for delta_phi = 0 and is 2/sqrt(pi) times the
/// quadrature value when L >> w.
std::complex<double> phase_match_closed_form(double waist_mm, double delta_phi, const core::DeviceSpec& device,
                                             double omega_minus);

/// Ratio quadrature / closed form in the L >> w limit.
inline constexpr double closed_form_scale = 0.88622692545275801365;  // sqrt(pi) / 2

/// Real Gaussian pump spectrum exp(-(omega_+ - omega_p)^2 / (4 sigma^2)) with
/// sigma = sqrt(2 ln 2) / tau_fwhm. With this width the pulse intensity has
/// FWHM tau_fwhm in time and the spectral intensity has FWHM 4 ln 2 / tau_fwhm.
double spectral_envelope(const core::PumpSpec& pump, double omega_plus);
double spectral_sigma(const core::PumpSpec& pump);

}  // namespace pairshaper::pdc
