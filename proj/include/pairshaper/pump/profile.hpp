#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace pairshaper::pump {

enum class ProfileKind { gaussian, phase_step, quadratic_phase, sampled, designed };

std::string to_string(ProfileKind kind);
/// Accepts the snake_case names produced by to_string; throws std::invalid_argument otherwise.
ProfileKind profile_kind_from_string(const std::string& name);

struct ProfileSample {
  double z_mm = 0.0;
  double amplitude = 0.0;
  double phase_rad = 0.0;
};

/// Carrier-free spatial pump amplitude along the waveguide.
///
/// Parametric kinds share the Gaussian envelope exp(-(z - z0)^2 / w^2), where
/// z0 is center_offset_mm. phase_step multiplies the half z > z0 by
/// exp(i phase_step_rad); quadratic_phase adds pi (z - z0)^2 / (lambda_p R_c).
/// Sampled and designed kinds interpolate the complex value
/// amplitude * exp(i phase) linearly between samples (shifted by z0) and are
/// zero outside the sampled range.
struct PumpProfile {
  ProfileKind kind = ProfileKind::gaussian;
  double waist_mm = 0.6;
  double phase_step_rad = 0.0;
  double curvature_radius_mm = std::numeric_limits<double>::infinity();
  /// Pump wavelength entering the quadratic phase.
  double wavelength_nm = 773.0;
  std::vector<ProfileSample> samples;
  double center_offset_mm = 0.0;

  /// Human-readable list of violated invariants; empty when valid.
  std::vector<std::string> validate() const;

  /// Positions where the profile is not smooth (phase step, sample knots).
  std::vector<double> breakpoints() const;

  /// Upper bound on |d arg F / dz| over |z| <= half_length, in rad/mm.
  double max_phase_rate(double half_length_mm) const;
};

PumpProfile gaussian(double waist_mm, double center_offset_mm = 0.0);
PumpProfile phase_step(double waist_mm, double delta_phi, double center_offset_mm = 0.0);
PumpProfile quadratic_phase(double waist_mm, double curvature_radius_mm, double wavelength_nm = 773.0,
                            double center_offset_mm = 0.0);

/// Complex profile value at z (mm), excluding the exp(ikz) carrier.
std::complex<double> evaluate_profile(const PumpProfile& profile, double z_mm);

}  // namespace pairshaper::pump
