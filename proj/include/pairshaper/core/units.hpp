#pragma once

#include <numbers>

/// Internal unit system: length in mm, time in ps, angular frequency in
/// rad/ps. Wavelengths cross the public boundary in nm.
namespace pairshaper::core::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c_mm_per_ps = 0.299792458;
inline constexpr double mm_per_nm = 1e-6;

/// Vacuum wavelength (nm) to angular frequency (rad/ps).
constexpr double omega_from_wavelength_nm(double wavelength_nm) {
  return 2.0 * pi * c_mm_per_ps / (wavelength_nm * mm_per_nm);
}

/// Angular frequency (rad/ps) to vacuum wavelength (nm).
constexpr double wavelength_nm_from_omega(double omega) {
  return 2.0 * pi * c_mm_per_ps / omega / mm_per_nm;
}

constexpr double degrees(double deg) { return deg * pi / 180.0; }

}  // namespace pairshaper::core::units
