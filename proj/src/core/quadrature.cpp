#include "pairshaper/core/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <stdexcept>

namespace pairshaper::core {

QuadratureRule composite_gauss_legendre(double a, double b, std::vector<double> breakpoints,
                                        double max_panel_width) {
  if (!(b > a)) throw std::invalid_argument("quadrature interval must have b > a");
  if (!(max_panel_width > 0.0)) throw std::invalid_argument("quadrature panel width must be positive");

  using rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();

  std::vector<double> edges{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double p : breakpoints) {
    if (p > edges.back() && p < b) edges.push_back(p);
  }
  edges.push_back(b);

  QuadratureRule out;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double lo = edges[s];
    const double hi = edges[s + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel_width)));
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      // Centre from the nearer segment end keeps mirrored segments bit-symmetric.
      const double mid = (2 * p + 1 < panels) ? lo + (p + 0.5) * h : hi - (panels - p - 0.5) * h;
      const double half = 0.5 * h;
      for (std::size_t k = x.size(); k-- > 0;) {
        if (x[k] == 0.0) continue;
        out.nodes.push_back(mid - half * x[k]);
        out.weights.push_back(half * w[k]);
      }
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0.0) {
          out.nodes.push_back(mid);
          out.weights.push_back(half * w[k]);
          continue;
        }
        out.nodes.push_back(mid + half * x[k]);
        out.weights.push_back(half * w[k]);
      }
    }
  }
  return out;
}

}  // namespace pairshaper::core
