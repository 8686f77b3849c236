#pragma once

#include <Eigen/Dense>

#include "pairshaper/core/grid.hpp"
#include "pairshaper/core/spec.hpp"
#include "pairshaper/pdc/phase_matching.hpp"

namespace pairshaper::pdc {

/// Joint spectral amplitude; row index = signal, column index = idler.
struct JointAmplitude {
  core::FrequencyGrid grid;
  Eigen::MatrixXcd values;
  bool normalized = false;

  /// sum |J|^2 d omega_s d omega_i
  double norm_squared() const;
};

/// JSA = S(omega_s + omega_i) phi_PM(omega_s - omega_i) t_TM(omega_s) t_TE(omega_i),
/// L2-normalized. The cavity factors t are the complex Airy amplitudes and are
/// applied only when device.cavity_enabled is set. phi_PM is evaluated once per
/// distinct omega_- and rows are filled in parallel.
/// Throws NumericalError if the assembled matrix vanishes.
JointAmplitude assemble_jsa(const core::DeviceSpec& device, const core::PumpSpec& pump,
                            const core::FrequencyGrid& grid);

/// The phase-matching samples assemble_jsa uses: omega_-(k) = (c_s - c_i) + k d,
/// k = -(n-1) .. n-1.
PhaseMatchFunction jsa_phase_match(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                   const core::FrequencyGrid& grid);

/// Rescales to unit L2 norm. Throws NumericalError on a zero matrix.
void normalize(JointAmplitude& jsa);

/// Width of |phi_PM|^2 in omega_- (rms, rad/ps) for the pump profile.
double phase_match_sigma(const core::DeviceSpec& device, const core::PumpSpec& pump);

struct GridOptions {
  double n_sigma = 7.0;
  int min_points = 512;
  int max_points = 2048;
  /// Minimum samples per free spectral range when the cavity is on.
  double points_per_fringe = 8.0;
};

/// Grid centred at omega_p / 2 spanning n_sigma (sigma_+ + sigma_-) / 2 either side.
core::FrequencyGrid suggest_grid(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                 const GridOptions& options = {});

}  // namespace pairshaper::pdc
