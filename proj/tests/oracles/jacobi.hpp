#pragma once

#include <cmath>
#include <vector>

/// Test-only cyclic Jacobi eigenvalue iteration for real symmetric matrices
/// stored row-major. Independent of Eigen so it can cross-check the SVD path.
namespace oracle {

inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-15, int max_sweeps = 100) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= tol * tol * diag) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

/// K = (tr rho)^2 / sum eig(rho)^2 with rho = M M^T for a real matrix M (rows x cols, row-major).
inline double schmidt_number_jacobi(const std::vector<double>& m, int rows, int cols) {
  std::vector<double> rho(static_cast<std::size_t>(rows) * rows, 0.0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) {
      double acc = 0.0;
      for (int k = 0; k < cols; ++k) acc += m[static_cast<std::size_t>(i) * cols + k] * m[static_cast<std::size_t>(j) * cols + k];
      rho[static_cast<std::size_t>(i) * rows + j] = acc;
    }
  const auto ev = jacobi_eigenvalues(rho, rows);
  double tr = 0.0, tr2 = 0.0;
  for (double e : ev) {
    tr += e;
    tr2 += e * e;
  }
  return tr * tr / tr2;
}

}  // namespace oracle
