#include "pairshaper/analysis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairshaper/core/errors.hpp"

namespace pairshaper::analysis {

Eigen::MatrixXd jsi(const pdc::JointAmplitude& jsa) {
  Eigen::MatrixXd out = jsa.values.cwiseAbs2();
  const double peak = out.size() ? out.maxCoeff() : 0.0;
  if (!(peak > 0.0)) throw NumericalError("joint spectral intensity is zero everywhere");
  return out / peak;
}

double symmetry_defect(const pdc::JointAmplitude& jsa, double exchange_phase) {
  if (!jsa.grid.exchange_compatible() || jsa.values.rows() != jsa.values.cols()) {
    throw std::invalid_argument("symmetry_defect needs a square grid with equal signal and idler centers");
  }
  const double norm = jsa.values.norm();
  if (!(norm > 0.0)) throw NumericalError("joint amplitude is zero");
  const std::complex<double> phase = std::polar(1.0, exchange_phase);
  return (jsa.values - phase * jsa.values.transpose()).norm() / norm;
}

namespace {

void require_symmetric_axis(const Eigen::VectorXd& omega) {
  const auto n = omega.size();
  if (n < 1) throw std::invalid_argument("phase-matching axis is empty");
  const double scale = omega.cwiseAbs().maxCoeff() + 1e-300;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(omega[k] + omega[n - 1 - k]) > 1e-9 * scale) {
      throw std::invalid_argument("phase-matching axis is not symmetric about zero");
    }
  }
}

double residual(const pdc::PhaseMatchFunction& pm, double exchange_phase, bool both_sides) {
  require_symmetric_axis(pm.omega_minus);
  const auto n = pm.values.size();
  const double peak = pm.values.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) throw NumericalError("phase-matching function is zero");
  const std::complex<double> phase = std::polar(1.0, exchange_phase);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!both_sides && pm.omega_minus[k] > 0.0) continue;
    worst = std::max(worst, std::abs(pm.values[k] - phase * pm.values[n - 1 - k]));
  }
  return worst / peak;
}

}  // namespace

double exchange_residual(const pdc::PhaseMatchFunction& pm, double exchange_phase) {
  return residual(pm, exchange_phase, false);
}

double exchange_residual_two_sided(const pdc::PhaseMatchFunction& pm, double exchange_phase) {
  return residual(pm, exchange_phase, true);
}

}  // namespace pairshaper::analysis
