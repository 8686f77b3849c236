#include "pairshaper/analysis/wigner.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"

namespace pairshaper::analysis {

using cplx = std::complex<double>;

WignerSlice wigner_minus(const pdc::PhaseMatchFunction& pm, const Eigen::VectorXd& t_minus,
                         const WignerOptions& options) {
  const auto& om = pm.omega_minus;
  const auto n = om.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("wigner_minus needs an odd number (>= 3) of omega samples");
  if (pm.values.size() != n) throw std::invalid_argument("phase-matching values and axis differ in length");
  if (options.omega_stride < 1) throw std::invalid_argument("omega_stride must be >= 1");
  const double d = (om[n - 1] - om[0]) / static_cast<double>(n - 1);
  if (!(d > 0.0)) throw std::invalid_argument("omega axis must be increasing");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(om[k] + om[n - 1 - k]) > 1e-9 * om[n - 1] ||
        std::abs(om[k] - (om[0] + k * d)) > 1e-9 * om[n - 1]) {
      throw std::invalid_argument("omega axis must be uniform and symmetric about zero");
    }
  }
  const Eigen::Index c0 = (n - 1) / 2;
  const double norm = pm.values.squaredNorm() * d;
  if (!(norm > 0.0)) throw NumericalError("phase-matching function is zero");

  std::vector<Eigen::Index> rows;
  for (Eigen::Index k = -c0; k <= c0; ++k) {
    if (k % options.omega_stride != 0) continue;
    if (std::abs(k * d) > options.omega_max) continue;
    rows.push_back(k);
  }

  WignerSlice out;
  out.t_minus = t_minus;
  out.omega_minus.resize(static_cast<Eigen::Index>(rows.size()));
  out.values.resize(static_cast<Eigen::Index>(rows.size()), t_minus.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out.omega_minus[static_cast<Eigen::Index>(r)] = rows[r] * d;

  parallel_for(rows.size(), [&](std::size_t r) {
    const Eigen::Index k = rows[r];
    const Eigen::Index m = c0 - std::abs(k);
    // j = 0 term is real; j and -j terms are conjugate, so sum 2 Re over j > 0.
    std::vector<cplx> prod(static_cast<std::size_t>(m + 1));
    for (Eigen::Index j = 0; j <= m; ++j) prod[j] = pm.values[c0 + k + j] * std::conj(pm.values[c0 + k - j]);
    for (Eigen::Index c = 0; c < t_minus.size(); ++c) {
      const cplx step = std::polar(1.0, 2.0 * d * t_minus[c]);
      cplx rot = step;
      double acc = prod[0].real();
      for (Eigen::Index j = 1; j <= m; ++j, rot *= step) acc += 2.0 * (prod[j] * rot).real();
      out.values(static_cast<Eigen::Index>(r), c) = acc * d / norm;
    }
  });
  return out;
}

HomTrace hom_from_wigner(const WignerSlice& slice, ExchangeConvention convention) {
  Eigen::Index zero = -1;
  const double scale = slice.omega_minus.size() ? slice.omega_minus.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index r = 0; r < slice.omega_minus.size(); ++r) {
    if (std::abs(slice.omega_minus[r]) <= 1e-12 * (scale + 1.0)) zero = r;
  }
  if (zero < 0) throw std::invalid_argument("wigner slice has no omega_- = 0 row");
  const double sign = convention == ExchangeConvention::boson ? 1.0 : -1.0;

  HomTrace out;
  out.convention = convention;
  out.delays = 2.0 * slice.t_minus;
  out.probability = (0.5 * (1.0 - sign * slice.values.row(zero).array())).transpose();
  Eigen::Index origin = 0;
  out.delays.cwiseAbs().minCoeff(&origin);
  out.visibility = visibility(plateau(out.delays, out.probability), out.probability[origin]);
  return out;
}

}  // namespace pairshaper::analysis
