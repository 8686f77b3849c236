#include "pairshaper/core/spec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairshaper/core/units.hpp"

namespace pairshaper::core {
namespace {

void throw_if_any(const std::vector<std::string>& problems, const char* what) {
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << what << ":";
  for (const auto& p : problems) msg << " " << p << ";";
  throw std::invalid_argument(msg.str());
}

}  // namespace

std::vector<std::string> DeviceSpec::validate() const {
  std::vector<std::string> out;
  if (!(length_mm > 0.0) || !std::isfinite(length_mm)) out.push_back("device.length_mm must be > 0");
  if (!(group_velocity > 0.0 && group_velocity < units::c_mm_per_ps)) {
    out.push_back("device.group_velocity must lie in (0, c)");
  }
  if (group_index && !(*group_index > 0.0)) out.push_back("device.group_index must be > 0");
  if (!(reflectivity_te >= 0.0 && reflectivity_te < 1.0)) out.push_back("device.reflectivity_te must lie in [0, 1)");
  if (!(reflectivity_tm >= 0.0 && reflectivity_tm < 1.0)) out.push_back("device.reflectivity_tm must lie in [0, 1)");
  if (!std::isfinite(comb_shift_nm)) out.push_back("device.comb_shift_nm must be finite");
  if (!(comb_anchor_nm > 0.0)) out.push_back("device.comb_anchor_nm must be > 0");
  if (!std::isfinite(index_mismatch)) out.push_back("device.index_mismatch must be finite");
  if (propagation_mismatch_per_mm && !std::isfinite(*propagation_mismatch_per_mm)) {
    out.push_back("device.propagation_mismatch_per_mm must be finite");
  }
  return out;
}

double DeviceSpec::effective_group_index() const {
  return group_index ? *group_index : units::c_mm_per_ps / group_velocity;
}

double DeviceSpec::propagation_mismatch(double omega_p) const {
  if (propagation_mismatch_per_mm) return *propagation_mismatch_per_mm;
  return omega_p * index_mismatch / (2.0 * units::c_mm_per_ps);
}

std::vector<std::string> PumpSpec::validate() const {
  std::vector<std::string> out;
  if (!(wavelength_nm > 0.0) || !std::isfinite(wavelength_nm)) out.push_back("pump.wavelength_nm must be > 0");
  if (!(pulse_fwhm_ps > 0.0) || !std::isfinite(pulse_fwhm_ps)) out.push_back("pump.pulse_fwhm_ps must be > 0");
  if (incidence_angle_rad && !(std::abs(*incidence_angle_rad) < units::pi / 2)) {
    out.push_back("pump.incidence_angle_rad must lie in (-pi/2, pi/2)");
  }
  for (auto& p : profile.validate()) out.push_back("pump.profile." + p);
  return out;
}

double PumpSpec::omega() const { return units::omega_from_wavelength_nm(wavelength_nm); }

void require_valid(const DeviceSpec& device) { throw_if_any(device.validate(), "invalid device"); }

void require_valid(const PumpSpec& pump) { throw_if_any(pump.validate(), "invalid pump"); }

double degeneracy_angle(const DeviceSpec& device, const PumpSpec& pump) {
  const double omega_p = pump.omega();
  const double s = units::c_mm_per_ps * device.propagation_mismatch(omega_p) / omega_p;
  if (!(std::abs(s) <= 1.0)) throw std::invalid_argument("degeneracy angle: |c * delta_beta / omega_p| > 1");
  return std::asin(s);
}

double incidence_angle(const DeviceSpec& device, const PumpSpec& pump) {
  return pump.incidence_angle_rad ? *pump.incidence_angle_rad : degeneracy_angle(device, pump);
}

double wavevector_offset(const DeviceSpec& device, const PumpSpec& pump) {
  if (!pump.incidence_angle_rad) return 0.0;
  const double omega_p = pump.omega();
  return omega_p * (std::sin(*pump.incidence_angle_rad) - std::sin(degeneracy_angle(device, pump))) /
         units::c_mm_per_ps;
}

double wavelength_offset_to_angle(const DeviceSpec& device, const PumpSpec& pump, double offset_nm) {
  const double c = units::c_mm_per_ps;
  const double omega_p = pump.omega();
  const double dl = offset_nm * units::mm_per_nm;
  // Signal and idler share omega_p; lambda_s - lambda_i = dl fixes omega_s - omega_i.
  const double two_pi_c = 2.0 * units::pi * c;
  const double delta =
      -2.0 * dl * omega_p * omega_p / (4.0 * two_pi_c + std::sqrt(16.0 * two_pi_c * two_pi_c + 4.0 * dl * dl * omega_p * omega_p));
  // The JSA translates along omega_- by v_g (k - k_deg).
  const double s = std::sin(degeneracy_angle(device, pump)) + c * delta / (device.group_velocity * omega_p);
  if (!(std::abs(s) <= 1.0)) throw std::invalid_argument("wavelength offset needs |sin(theta)| > 1");
  return std::asin(s);
}

}  // namespace pairshaper::core
