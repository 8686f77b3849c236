#pragma once

#include <complex>

#include "pairshaper/core/spec.hpp"

namespace pairshaper::pdc {

enum class Polarization { te, tm };

/// Round-trip phase 2 (omega - omega_res) n_g L / c. TM resonances include
/// the comb anchor; the TE comb is displaced by comb_shift_nm in wavelength.
double cavity_round_trip_phase(const core::DeviceSpec& device, double omega, Polarization pol);

/// Airy transmission (1-R)^2 / (1 + R^2 - 2R cos phi); equals 1 on resonance.
double fabry_perot_factor(const core::DeviceSpec& device, double omega, Polarization pol);

/// Complex single-photon transmission amplitude (1-R) / (1 - R exp(i phi)),
/// whose squared modulus is fabry_perot_factor.
std::complex<double> fabry_perot_amplitude(const core::DeviceSpec& device, double omega, Polarization pol);

}  // namespace pairshaper::pdc
