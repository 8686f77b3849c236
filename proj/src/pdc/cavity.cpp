#include "pairshaper/pdc/cavity.hpp"

#include <cmath>

#include "pairshaper/core/units.hpp"

namespace pairshaper::pdc {
namespace {

double reflectivity(const core::DeviceSpec& device, Polarization pol) {
  return pol == Polarization::te ? device.reflectivity_te : device.reflectivity_tm;
}

}  // namespace

double cavity_round_trip_phase(const core::DeviceSpec& device, double omega, Polarization pol) {
  const double anchor_nm = device.comb_anchor_nm + (pol == Polarization::te ? device.comb_shift_nm : 0.0);
  const double omega_res = core::units::omega_from_wavelength_nm(anchor_nm);
  return 2.0 * (omega - omega_res) * device.effective_group_index() * device.length_mm / core::units::c_mm_per_ps;
}

double fabry_perot_factor(const core::DeviceSpec& device, double omega, Polarization pol) {
  const double r = reflectivity(device, pol);
  const double phi = cavity_round_trip_phase(device, omega, pol);
  return (1.0 - r) * (1.0 - r) / (1.0 + r * r - 2.0 * r * std::cos(phi));
}

std::complex<double> fabry_perot_amplitude(const core::DeviceSpec& device, double omega, Polarization pol) {
  const double r = reflectivity(device, pol);
  const double phi = cavity_round_trip_phase(device, omega, pol);
  return (1.0 - r) / (1.0 - r * std::polar(1.0, phi));
}

}  // namespace pairshaper::pdc
