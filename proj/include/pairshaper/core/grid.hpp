#pragma once

#include <Eigen/Dense>

namespace pairshaper::core {

/// Square signal x idler frequency grid. Both axes share one spacing and are
/// symmetric about their centers, so offset(i) == -offset(n-1-i) exactly.
class FrequencyGrid {
 public:
  FrequencyGrid(double center_signal, double center_idler, double half_span, int n_points);

  double center_signal() const { return center_signal_; }
  double center_idler() const { return center_idler_; }
  double half_span() const { return half_span_; }
  int n_points() const { return n_points_; }
  double spacing() const { return 2.0 * half_span_ / (n_points_ - 1); }

  /// Offset of index i from the axis center.
  double offset(int i) const { return half_span_ * (2.0 * i - (n_points_ - 1)) / (n_points_ - 1); }
  double signal(int i) const { return center_signal_ + offset(i); }
  double idler(int j) const { return center_idler_ + offset(j); }

  Eigen::VectorXd signal_axis() const;
  Eigen::VectorXd idler_axis() const;

  /// Index transposition maps signal frequencies onto idler frequencies.
  bool exchange_compatible() const { return center_signal_ == center_idler_; }

 private:
  double center_signal_;
  double center_idler_;
  double half_span_;
  int n_points_;
};

/// Throws std::invalid_argument for n_points < 2 or a non-positive span.
FrequencyGrid make_grid(double center_signal, double center_idler, double half_span, int n_points);

}  // namespace pairshaper::core
