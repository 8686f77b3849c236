#pragma once

#include <Eigen/Dense>

#include "pairshaper/pdc/jsa.hpp"

namespace pairshaper::analysis {

/// |JSA|^2 scaled to a maximum of 1. Throws NumericalError for an all-zero JSA.
Eigen::MatrixXd jsi(const pdc::JointAmplitude& jsa);

/// ||J - exp(i phase) J^T|| / ||J|| (Frobenius). Zero when
/// JSA(w_s, w_i) = exp(i phase) JSA(w_i, w_s) holds on the whole grid.
/// Throws std::invalid_argument unless the grid is exchange-compatible.
double symmetry_defect(const pdc::JointAmplitude& jsa, double exchange_phase);

/// One-sided exchange relation of a phase-matching function sampled on a
/// symmetric axis: max over omega <= 0 of |phi(omega) - exp(i phase) phi(-omega)| / max |phi|.
double exchange_residual(const pdc::PhaseMatchFunction& pm, double exchange_phase);

/// Same relation checked on both half-axes.
double exchange_residual_two_sided(const pdc::PhaseMatchFunction& pm, double exchange_phase);

}  // namespace pairshaper::analysis
