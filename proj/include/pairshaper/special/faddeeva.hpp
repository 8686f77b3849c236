#pragma once

#include <complex>

namespace pairshaper::special {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Relative accuracy is better than 1e-12 for |z| <= 4 and better than 1e-10
/// elsewhere in the finite plane (away from overflow of exp(-z^2) deep in the
/// lower half-plane). Throws std::invalid_argument for non-finite input.
std::complex<double> faddeeva(std::complex<double> z);

/// Complementary error function of a complex argument, erfc(z) = exp(-z^2) w(iz).
std::complex<double> erfc_complex(std::complex<double> z);

}  // namespace pairshaper::special
