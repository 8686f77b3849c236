#include "pairshaper/analysis/hom.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"

namespace pairshaper::analysis {

using cplx = std::complex<double>;

std::string to_string(ExchangeConvention convention) {
  return convention == ExchangeConvention::boson ? "boson" : "fermion";
}

ExchangeConvention exchange_convention_from_string(const std::string& name) {
  if (name == "boson") return ExchangeConvention::boson;
  if (name == "fermion") return ExchangeConvention::fermion;
  throw std::invalid_argument("unknown exchange convention '" + name + "'");
}

namespace {

// c[k + n - 1] = sum_{i - j = k} J(i, j) conj(J(j, i)) d^2
std::vector<cplx> exchange_overlap(const pdc::JointAmplitude& jsa) {
  if (!jsa.grid.exchange_compatible()) {
    throw std::invalid_argument("HOM interference needs equal signal and idler grid centers");
  }
  const int n = jsa.grid.n_points();
  const double d = jsa.grid.spacing();
  std::vector<cplx> c(2 * n - 1);
  parallel_for(c.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) - (n - 1);
    cplx acc = 0.0;
    for (int j = std::max(0, -k); j < std::min(n, n - k); ++j) {
      acc += jsa.values(j + k, j) * std::conj(jsa.values(j, j + k));
    }
    c[idx] = acc * d * d;
  });
  return c;
}

double probability(const std::vector<cplx>& c, double d, double tau, double sign) {
  const int n = static_cast<int>(c.size() + 1) / 2;
  double re = 0.0;
  for (int k = -(n - 1); k <= n - 1; ++k) re += (c[k + n - 1] * std::polar(1.0, k * d * tau)).real();
  return 0.5 * (1.0 - sign * re);
}

}  // namespace

HomTrace hom_trace(const pdc::JointAmplitude& jsa, const Eigen::VectorXd& delays, ExchangeConvention convention) {
  if (delays.size() < 1) throw std::invalid_argument("hom_trace needs at least one delay");
  const auto c = exchange_overlap(jsa);
  const double d = jsa.grid.spacing();
  const double sign = convention == ExchangeConvention::boson ? 1.0 : -1.0;

  HomTrace out;
  out.delays = delays;
  out.convention = convention;
  out.probability.resize(delays.size());
  parallel_for(static_cast<std::size_t>(delays.size()),
               [&](std::size_t k) { out.probability[k] = probability(c, d, delays[k], sign); });
  out.visibility = visibility(plateau(delays, out.probability), probability(c, d, 0.0, sign));
  return out;
}

double omega_minus_width(const pdc::JointAmplitude& jsa) {
  const int n = jsa.grid.n_points();
  const double d = jsa.grid.spacing();
  const Eigen::MatrixXd intensity = jsa.values.cwiseAbs2();
  double w0 = 0.0, w1 = 0.0, w2 = 0.0;
  for (int k = -(n - 1); k <= n - 1; ++k) {
    double m = 0.0;
    for (int j = std::max(0, -k); j < std::min(n, n - k); ++j) m += intensity(j + k, j);
    const double om = k * d;
    w0 += m;
    w1 += m * om;
    w2 += m * om * om;
  }
  if (!(w0 > 0.0)) throw NumericalError("joint amplitude is zero");
  const double mean = w1 / w0;
  return std::sqrt(std::max(w2 / w0 - mean * mean, d * d));
}

double coherence_time(const pdc::JointAmplitude& jsa) {
  // sqrt(2) times the rms duration of the interference term, via Parseval on
  // the omega_- overlap; equals 1 / sigma for a Gaussian JSI of rms width sigma.
  const auto c = exchange_overlap(jsa);
  const double d = jsa.grid.spacing();
  double power = 0.0, slope = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    power += std::norm(c[k]);
    if (k > 0) slope += std::norm(c[k] - c[k - 1]) / (d * d);
  }
  if (!(power > 1e-12 * d * d)) return 1.0 / omega_minus_width(jsa);
  return std::sqrt(2.0 * slope / power);
}

Eigen::VectorXd default_delays(const pdc::JointAmplitude& jsa, int n_points, double window_factor) {
  if (n_points < 2) throw std::invalid_argument("default_delays needs at least 2 points");
  const double t = window_factor * coherence_time(jsa);
  return Eigen::VectorXd::LinSpaced(n_points, -t, t);
}

double plateau(const Eigen::VectorXd& delays, const Eigen::VectorXd& p) {
  const double t_max = delays.cwiseAbs().maxCoeff();
  double sum = 0.0;
  int count = 0;
  for (Eigen::Index k = 0; k < delays.size(); ++k) {
    if (std::abs(delays[k]) >= 0.9 * t_max) {
      sum += p[k];
      ++count;
    }
  }
  return count ? sum / count : 0.5;
}

double visibility(double plateau_value, double p0) {
  if (plateau_value == 0.0) throw NumericalError("HOM plateau is zero");
  return (plateau_value - p0) / plateau_value;
}

}  // namespace pairshaper::analysis
