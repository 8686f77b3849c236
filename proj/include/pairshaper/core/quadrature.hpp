#pragma once

#include <vector>

namespace pairshaper::core {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite 20-point Gauss-Legendre rule on [a, b]. Panels never straddle a
/// breakpoint and are no wider than max_panel_width. A segment is split into
/// equal panels, so a rule on [-h, h] with breakpoints symmetric about 0 has
/// mirror-symmetric nodes.
QuadratureRule composite_gauss_legendre(double a, double b, std::vector<double> breakpoints,
                                        double max_panel_width);

}  // namespace pairshaper::core
