#include "pairshaper/analysis/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"
#include "pairshaper/pdc/cavity.hpp"

namespace pairshaper::analysis {

using cplx = std::complex<double>;

SchmidtResult schmidt_decompose(const pdc::JointAmplitude& jsa, int max_modes) {
  if (!jsa.values.allFinite()) throw NumericalError("joint amplitude has non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(jsa.values, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("singular value decomposition failed");

  SchmidtResult out;
  const Eigen::VectorXd s = svd.singularValues();
  const double norm = s.norm();
  if (!(norm > 0.0)) throw NumericalError("joint amplitude is zero");
  out.singular_values = s / norm;
  out.schmidt_number = 1.0 / out.singular_values.array().pow(4).sum();
  const int keep = max_modes < 0 ? static_cast<int>(s.size()) : std::min<int>(max_modes, static_cast<int>(s.size()));
  out.signal_modes = svd.matrixU().leftCols(keep);
  out.idler_modes = svd.matrixV().leftCols(keep).conjugate();
  return out;
}

double schmidt_number(const Eigen::MatrixXcd& amplitude) {
  const double trace = amplitude.squaredNorm();
  if (!(trace > 0.0)) throw NumericalError("joint amplitude is zero");
  const Eigen::MatrixXcd rho = amplitude.rows() <= amplitude.cols() ? Eigen::MatrixXcd(amplitude * amplitude.adjoint())
                                                                  : Eigen::MatrixXcd(amplitude.adjoint() * amplitude);
  return trace * trace / rho.squaredNorm();
}

double schmidt_number_flat_phase(const Eigen::MatrixXd& jsi) {
  if ((jsi.array() < 0.0).any()) throw std::invalid_argument("joint spectral intensity has negative entries");
  return schmidt_number(jsi.cwiseSqrt().cast<cplx>());
}

double schmidt_number_narrowband(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                 const NarrowbandOptions& options) {
  core::require_valid(device);
  core::require_valid(pump);
  const double sigma_p = pdc::spectral_sigma(pump);
  const double sigma_m = pdc::phase_match_sigma(device, pump);
  const double d = sigma_p / options.points_per_sigma;
  const double half_span = options.n_sigma * (sigma_p + sigma_m) / 2.0;
  const int n = static_cast<int>(std::ceil(2.0 * half_span / d)) + 1;
  const int band = static_cast<int>(std::ceil(options.band_sigmas * sigma_p / d));
  const double center = 0.5 * pump.omega();
  auto x = [&](int i) { return (i - 0.5 * (n - 1)) * d; };

  // omega_- = x_i + x_t depends on i + t only.
  Eigen::VectorXd omega_minus(2 * n - 1);
  for (int k = 0; k < 2 * n - 1; ++k) omega_minus[k] = (k - (n - 1)) * d;
  const pdc::PhaseMatchFunction pm = pdc::sample_phase_match(pump.profile, device, pump, omega_minus);

  std::vector<cplx> t_signal(n, 1.0), t_idler(n, 1.0);
  if (device.cavity_enabled) {
    for (int i = 0; i < n; ++i) {
      t_signal[i] = pdc::fabry_perot_amplitude(device, center + x(i), pdc::Polarization::tm);
      t_idler[i] = pdc::fabry_perot_amplitude(device, center - x(i), pdc::Polarization::te);
    }
  }

  const int width = 2 * band + 1;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, width);  // j(i, t - i + band)
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const int i = static_cast<int>(row);
    for (int t = std::max(0, i - band); t <= std::min(n - 1, i + band); ++t) {
      const double env = std::exp(-(x(i) - x(t)) * (x(i) - x(t)) / (4.0 * sigma_p * sigma_p));
      j(i, t - i + band) = env * pm.values[i + t] * t_signal[i] * t_idler[t];
    }
  });

  // tr rho^2 with rho(i, i') = sum_t j(i, t) conj(j(i', t)), |i - i'| <= 2 band.
  std::vector<double> row_sums(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const int i = static_cast<int>(row);
    double acc = 0.0;
    for (int ip = std::max(0, i - 2 * band); ip <= std::min(n - 1, i + 2 * band); ++ip) {
      const int t_lo = std::max({0, i - band, ip - band});
      const int t_hi = std::min({n - 1, i + band, ip + band});
      cplx rho = 0.0;
      for (int t = t_lo; t <= t_hi; ++t) rho += j(i, t - i + band) * std::conj(j(ip, t - ip + band));
      acc += std::norm(rho);
    }
    row_sums[row] = acc;
  });
  double purity = 0.0;
  for (double v : row_sums) purity += v;
  const double trace = j.squaredNorm();
  if (!(purity > 0.0)) throw NumericalError("narrowband joint amplitude is zero");
  return trace * trace / purity;
}

}  // namespace pairshaper::analysis
