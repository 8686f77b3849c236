#pragma once

#include <Eigen/Dense>

#include "pairshaper/core/spec.hpp"
#include "pairshaper/pdc/jsa.hpp"

namespace pairshaper::analysis {

struct SchmidtResult {
  /// Normalized singular values, descending, sum of squares 1.
  Eigen::VectorXd singular_values;
  double schmidt_number = 1.0;
  /// Leading orthonormal mode vectors as columns (signal: left, idler: right).
  Eigen::MatrixXcd signal_modes;
  Eigen::MatrixXcd idler_modes;
};

/// SVD-based decomposition; K = 1 / sum lambda_n^4. Keeps at most max_modes
/// mode vectors (all when negative). Throws NumericalError if the SVD fails.
SchmidtResult schmidt_decompose(const pdc::JointAmplitude& jsa, int max_modes = 16);

/// K from the purity of the reduced state, (tr rho)^2 / tr rho^2 with rho = J J^H.
/// Equal to the SVD value without computing singular vectors.
double schmidt_number(const Eigen::MatrixXcd& amplitude);

/// K of the flat-phase amplitude sqrt(jsi). Throws std::invalid_argument for
/// negative entries.
double schmidt_number_flat_phase(const Eigen::MatrixXd& jsi);

struct NarrowbandOptions {
  double n_sigma = 7.0;
  /// Grid points per spectral sigma_+.
  double points_per_sigma = 4.0;
  /// Band half-width in units of sigma_+.
  double band_sigmas = 10.0;
};

/// K for pumps whose spectrum is much narrower than the phase matching. The
/// idler axis is mirrored (omega_i -> omega_p - omega_i), which leaves K
/// unchanged and turns the JSA into a band along the diagonal; only the band
/// is stored and K follows from the banded reduced-state purity.
double schmidt_number_narrowband(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                 const NarrowbandOptions& options = {});

}  // namespace pairshaper::analysis
