#include "pairshaper/special/faddeeva.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairshaper::special {
namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;
constexpr double kSeriesRadius = 1.0;
constexpr double kAsymptoticRadius = 4.0;

// Power series w(z) = sum_n (iz)^n / Gamma(n/2 + 1). Even terms sum to
// exp(-z^2); odd terms give the Dawson-type part. Used for |z| < 1 where all
// terms are O(1) and no cancellation occurs.
cplx series(cplx z) {
  const cplx mz2 = -z * z;
  cplx even = 1.0;
  cplx odd = 2.0 * kInvSqrtPi;  // 1 / Gamma(3/2)
  cplx even_sum = even;
  cplx odd_sum = odd;
  for (int k = 1; k < 60; ++k) {
    even *= mz2 / double(k);
    odd *= mz2 / (k + 0.5);
    even_sum += even;
    odd_sum += odd;
    if (std::abs(even) + std::abs(odd) < 1e-18 * (std::abs(even_sum) + std::abs(odd_sum))) break;
  }
  return even_sum + cplx(0.0, 1.0) * z * odd_sum;
}

// Weideman's rational approximation (SIAM J. Numer. Anal. 31, 1994) with
// N = 64 terms, valid in the closed upper half-plane. Coefficients are the
// discrete Fourier coefficients of exp(-t^2)(L^2 + t^2) on the mapped grid.
struct Weideman {
  static constexpr int N = 64;
  double L;
  std::array<double, N> coef{};

  Weideman() : L(std::sqrt(N / std::numbers::sqrt2)) {
    constexpr int M = 2 * N;
    constexpr int M2 = 2 * M;
    // f_k on k = -M+1 .. M-1, theta_k = k pi / M; f at k = -M is zero.
    std::array<long double, M2> f{};
    for (int k = -M + 1; k <= M - 1; ++k) {
      const long double theta = static_cast<long double>(k) * std::numbers::pi_v<long double> / M;
      const long double t = static_cast<long double>(L) * std::tan(theta / 2);
      f[k + M] = std::exp(-t * t) * (static_cast<long double>(L) * L + t * t);
    }
    // a_n = Re(fft(fftshift(f))) / M2 for n = 1..N; direct DFT in long double.
    for (int n = 1; n <= N; ++n) {
      long double acc = 0;
      for (int j = 0; j < M2; ++j) {
        // fftshift moves index M to 0.
        const int src = (j + M) % M2;
        const long double ang = -2 * std::numbers::pi_v<long double> * n * j / M2;
        acc += f[src] * std::cos(ang);
      }
      // Coefficients are used in reverse order in the polynomial.
      coef[N - n] = static_cast<double>(acc / M2);
    }
  }

  cplx operator()(cplx z) const {
    const cplx iz(-z.imag(), z.real());
    const cplx denom = L - iz;
    const cplx zz = (L + iz) / denom;
    cplx p = coef[0];
    for (int n = 1; n < N; ++n) p = p * zz + coef[n];
    return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
  }
};

const Weideman& weideman() {
  static const Weideman instance;
  return instance;
}

// Laplace continued fraction w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
// evaluated bottom-up, Im z >= 0 and |z| > 4.
cplx continued_fraction(cplx z) {
  const double r = std::abs(z);
  const int terms = r > 40.0 ? 12 : (r > 12.0 ? 40 : 160);
  cplx tail = z;
  for (int k = terms; k >= 1; --k) tail = z - (0.5 * k) / tail;
  return cplx(0.0, kInvSqrtPi) / tail;
}

cplx upper_half_plane(cplx z) {
  const double r = std::abs(z);
  if (r < kSeriesRadius) return series(z);
  if (r <= kAsymptoticRadius) return weideman()(z);
  // Near the real axis the continued fraction converges slowly until |z| is
  // well above 4; the rational approximation is still accurate there.
  if (r < 8.0 && z.imag() < 1.0) return weideman()(z);
  return continued_fraction(z);
}

}  // namespace

cplx faddeeva(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("faddeeva: non-finite argument");
  }
  if (z.imag() < 0.0) {
    // w(z) = 2 exp(-z^2) - w(-z)
    return 2.0 * std::exp(-z * z) - upper_half_plane(-z);
  }
  return upper_half_plane(z);
}

cplx erfc_complex(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("erfc_complex: non-finite argument");
  }
  return std::exp(-z * z) * faddeeva(cplx(-z.imag(), z.real()));
}

}  // namespace pairshaper::special
