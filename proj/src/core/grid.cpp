#include "pairshaper/core/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace pairshaper::core {

FrequencyGrid::FrequencyGrid(double center_signal, double center_idler, double half_span, int n_points)
    : center_signal_(center_signal), center_idler_(center_idler), half_span_(half_span), n_points_(n_points) {
  if (n_points < 2) throw std::invalid_argument("frequency grid needs at least 2 points per axis");
  if (!(half_span > 0.0) || !std::isfinite(half_span)) {
    throw std::invalid_argument("frequency grid half_span must be positive");
  }
  if (!std::isfinite(center_signal) || !std::isfinite(center_idler)) {
    throw std::invalid_argument("frequency grid centers must be finite");
  }
}

Eigen::VectorXd FrequencyGrid::signal_axis() const {
  Eigen::VectorXd axis(n_points_);
  for (int i = 0; i < n_points_; ++i) axis[i] = signal(i);
  return axis;
}

Eigen::VectorXd FrequencyGrid::idler_axis() const {
  Eigen::VectorXd axis(n_points_);
  for (int j = 0; j < n_points_; ++j) axis[j] = idler(j);
  return axis;
}

FrequencyGrid make_grid(double center_signal, double center_idler, double half_span, int n_points) {
  return FrequencyGrid(center_signal, center_idler, half_span, n_points);
}

}  // namespace pairshaper::core
