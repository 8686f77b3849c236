#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairshaper/analysis/hom.hpp"
#include "pairshaper/analysis/study.hpp"
#include "pairshaper/core/spec.hpp"
#include "pairshaper/pump/design.hpp"

namespace pairshaper::cli {

inline constexpr int config_format_version = 1;
inline constexpr const char* tool_name = "pairshaper";
inline constexpr const char* tool_version = "0.1.0";

struct Diagnostic {
  int line = 0;  ///< 1-based; 0 when not tied to a source line
  std::string field;
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

/// Thrown when a config cannot be read or parsed.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct GridConfig {
  std::optional<double> half_span;  ///< rad/ps
  std::optional<int> n_points;
  double n_sigma = 7.0;
  int min_points = 512;
  int max_points = 2048;
};

struct SchmidtConfig {
  std::string method = "auto";  ///< auto | dense | narrowband
  int n_singular = 64;
};

struct HomConfig {
  std::optional<double> tau_max;  ///< ps; default window from the coherence time
  int n_points = 401;
  double window_factor = 5.0;
  analysis::ExchangeConvention convention = analysis::ExchangeConvention::boson;
};

struct WignerConfig {
  double omega_max = 4.0;  ///< rad/ps, half-width of the phase-matching axis
  int n_omega = 801;       ///< odd
  double t_max = 15.0;     ///< ps
  int n_t = 301;
  int omega_stride = 4;
};

struct DesignConfig {
  pump::AnyonicTarget target;
  int n_samples = 1024;
};

struct SweepConfig {
  std::string parameter = "phase_step_rad";
  std::vector<double> values;
};

struct RunConfig {
  core::DeviceSpec device;
  core::PumpSpec pump;
  /// Central signal - idler wavelength offset; sets the incidence angle when present.
  std::optional<double> signal_idler_offset_nm;
  /// Path of the sampled-profile CSV as written in the config.
  std::string profile_csv;
  GridConfig grid;
  SchmidtConfig schmidt;
  HomConfig hom;
  WignerConfig wigner;
  DesignConfig design;
  SweepConfig sweep;
  std::vector<analysis::Perturbation> perturbations;
  std::vector<std::string> perturbation_csv;  ///< per perturbation; empty unless sampled
  std::string output_directory = "out";
  std::vector<std::string> formats{"csv", "json"};
};

struct ParseResult {
  RunConfig config;
  std::vector<Diagnostic> diagnostics;
};

/// Parses YAML text. Relative CSV paths resolve against base_dir. Every
/// problem found is reported; a YAML syntax error throws ConfigError.
ParseResult parse_config(const std::string& text, const std::string& base_dir = ".");

/// Reads and parses a file; throws ConfigError if it cannot be read.
ParseResult load_config(const std::string& path);

/// Range checks on every numeric field plus the output formats.
std::vector<Diagnostic> validate_config(const RunConfig& config);

/// Applies the optional signal-idler offset to pump.incidence_angle_rad.
core::PumpSpec resolved_pump(const RunConfig& config);

/// Fully resolved config, suitable for re-running the job.
nlohmann::ordered_json to_json(const RunConfig& config);

bool has_format(const RunConfig& config, const std::string& format);

}  // namespace pairshaper::cli
