#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairshaper/pump/profile.hpp"

namespace pairshaper::core {

/// Group velocity (mm/ps) that gives K = 1.01 for the 0.6 mm / 6 ps pump on
/// the default device. Obtained with analysis::calibrate_group_velocity.
inline constexpr double calibrated_group_velocity = 0.10230;

/// Waveguide and facet-cavity parameters.
struct DeviceSpec {
  double length_mm = 2.0;
  /// Harmonic mean of the signal and idler group velocities, mm/ps.
  double group_velocity = calibrated_group_velocity;
  /// Group index for the Fabry-Perot free spectral range; c / group_velocity when unset.
  std::optional<double> group_index;
  double reflectivity_te = 0.267;
  double reflectivity_tm = 0.247;
  /// Wavelength offset of the TE comb relative to the TM comb, nm.
  double comb_shift_nm = 0.015;
  /// A TM cavity resonance sits at this wavelength, nm.
  double comb_anchor_nm = 1546.0;
  bool cavity_enabled = false;
  /// Modal index difference between signal and idler. The default is a
  /// fitted value that puts the degeneracy angle at 0.5 degrees.
  double index_mismatch = 0.01745307099674787;
  /// Explicit propagation-constant mismatch (1/mm); overrides index_mismatch.
  std::optional<double> propagation_mismatch_per_mm;

  std::vector<std::string> validate() const;

  double effective_group_index() const;
  /// Delta beta in 1/mm for a pump of angular frequency omega_p.
  double propagation_mismatch(double omega_p) const;
};

/// Pump beam. An unset incidence angle means "at the degeneracy angle".
struct PumpSpec {
  double wavelength_nm = 773.0;
  std::optional<double> incidence_angle_rad;
  /// Intensity FWHM of a transform-limited Gaussian pulse, ps.
  double pulse_fwhm_ps = 6.0;
  pump::PumpProfile profile;

  std::vector<std::string> validate() const;

  double omega() const;
};

/// Throws std::invalid_argument listing every problem when the spec is invalid.
void require_valid(const DeviceSpec& device);
void require_valid(const PumpSpec& pump);

/// Pump incidence angle producing degenerate pairs at omega_p / 2:
/// sin(theta_deg) = c * delta_beta / omega_p.
double degeneracy_angle(const DeviceSpec& device, const PumpSpec& pump);

/// Incidence angle actually used by a pump spec (explicit or degenerate).
double incidence_angle(const DeviceSpec& device, const PumpSpec& pump);

/// Wavevector offset k - k_deg (1/mm) along the waveguide.
double wavevector_offset(const DeviceSpec& device, const PumpSpec& pump);

/// Incidence angle whose JSA is centred at lambda_s - lambda_i = offset_nm.
double wavelength_offset_to_angle(const DeviceSpec& device, const PumpSpec& pump, double offset_nm);

}  // namespace pairshaper::core
