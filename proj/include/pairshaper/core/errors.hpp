#pragma once

#include <stdexcept>
#include <string>

namespace pairshaper {

// Invalid arguments are reported with std::invalid_argument.

/// Malformed external data (profile CSV rows, config values).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine did not produce a usable result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An inverse pump design needs more room than the waveguide offers.
class DesignInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pairshaper
