#pragma once

#include <Eigen/Dense>
#include <limits>

#include "pairshaper/analysis/hom.hpp"
#include "pairshaper/pdc/phase_matching.hpp"

namespace pairshaper::analysis {

/// W_-(omega_-, t_-); rows follow omega_minus, columns follow t_minus.
struct WignerSlice {
  Eigen::VectorXd omega_minus;  ///< rad/ps
  Eigen::VectorXd t_minus;      ///< ps
  Eigen::MatrixXd values;
};

struct WignerOptions {
  /// Evaluate every stride-th omega sample of the input axis.
  int omega_stride = 1;
  /// Skip omega rows with |omega| above this bound.
  double omega_max = std::numeric_limits<double>::infinity();
};

/// W_-(w, t) = sum_{w'} phi(w + w') conj(phi(w - w')) exp(2 i w' t) dw' / sum |phi|^2 dw
/// by direct quadrature on the input samples. Paired terms are complex
/// conjugates, so the result is real. A real even phi gives W(0, 0) = 1 and an
/// odd one gives -1. The input axis must be uniform, symmetric and of odd
/// length (so that it contains omega = 0); otherwise std::invalid_argument.
WignerSlice wigner_minus(const pdc::PhaseMatchFunction& pm, const Eigen::VectorXd& t_minus,
                         const WignerOptions& options = {});

/// HOM trace from the omega_- = 0 row: P(tau) = (1 -/+ W(0, tau / 2)) / 2 at tau = 2 t_-.
/// Throws std::invalid_argument when the slice has no omega_- = 0 row.
HomTrace hom_from_wigner(const WignerSlice& slice, ExchangeConvention convention = ExchangeConvention::boson);

}  // namespace pairshaper::analysis
