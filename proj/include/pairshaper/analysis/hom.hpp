#pragma once

#include <Eigen/Dense>
#include <string>

#include "pairshaper/pdc/jsa.hpp"

namespace pairshaper::analysis {

/// boson: P = (1 - I)/2, fermion: P = (1 + I)/2, with I the interference term.
enum class ExchangeConvention { boson, fermion };

std::string to_string(ExchangeConvention convention);
ExchangeConvention exchange_convention_from_string(const std::string& name);

struct HomTrace {
  Eigen::VectorXd delays;       ///< ps
  Eigen::VectorXd probability;  ///< coincidence probability per delay
  double visibility = 0.0;
  ExchangeConvention convention = ExchangeConvention::boson;
};

/// P(tau) = (1 -/+ Re sum J(w_s, w_i) J*(w_i, w_s) exp(i w_- tau) dw_s dw_i) / 2.
/// The double sum is grouped by the index difference, so each delay costs O(n).
/// visibility is (N_inf - N_0) / N_inf with N_0 = P(0) and N_inf the mean over
/// the outer 10% of the delay window.
HomTrace hom_trace(const pdc::JointAmplitude& jsa, const Eigen::VectorXd& delays,
                   ExchangeConvention convention = ExchangeConvention::boson);

/// rms width of the JSI along omega_- (rad/ps).
double omega_minus_width(const pdc::JointAmplitude& jsa);

/// sqrt(2) x rms duration of the HOM interference term, ps. Falls back to
/// 1 / omega_minus_width when the two photons do not interfere.
double coherence_time(const pdc::JointAmplitude& jsa);

/// n_points symmetric delays spanning +-window_factor coherence times.
Eigen::VectorXd default_delays(const pdc::JointAmplitude& jsa, int n_points = 401, double window_factor = 5.0);

/// Mean of p over the outer 10% of the delay window.
double plateau(const Eigen::VectorXd& delays, const Eigen::VectorXd& p);

/// (N_inf - N_0) / N_inf.
double visibility(double plateau_value, double p0);

}  // namespace pairshaper::analysis
