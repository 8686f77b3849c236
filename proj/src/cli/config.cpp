#include "pairshaper/cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/pump/import.hpp"

namespace pairshaper::cli {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  if (d.line > 0) out << "line " << d.line << ": ";
  if (!d.field.empty()) out << d.field << ": ";
  out << d.message;
  return out.str();
}

namespace {

std::string join(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "; ";
    out += format_diagnostic(d);
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

bool parse_plain_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

/// Accepts plain numbers and the forms pi, -pi, a*pi, pi/b, a*pi/b.
bool parse_number(std::string text, double& out) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (parse_plain_double(text, out)) return true;
  const auto at = text.find("pi");
  if (at == std::string::npos) return false;
  double factor = 1.0;
  std::string head = text.substr(0, at);
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*' || !parse_plain_double(head.substr(0, head.size() - 1), factor)) return false;
  }
  double divisor = 1.0;
  const std::string tail = text.substr(at + 2);
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_plain_double(tail.substr(1), divisor) || divisor == 0.0) return false;
  }
  out = factor * std::numbers::pi / divisor;
  return true;
}

class Reader {
 public:
  Reader(std::vector<Diagnostic>& diags, std::string base_dir) : diags_(diags), base_dir_(std::move(base_dir)) {}

  void error(const YAML::Node& node, const std::string& field, const std::string& message) {
    diags_.push_back({node ? line_of(node) : 0, field, message});
  }

  /// Returns the mapping at key, reporting unknown children against `allowed`.
  YAML::Node section(const YAML::Node& parent, const std::string& key, const std::string& path,
                     const std::set<std::string>& allowed) {
    const YAML::Node node = parent[key];
    if (!node) return node;
    if (!node.IsMap()) {
      error(node, path, "expected a mapping");
      return YAML::Node();
    }
    check_keys(node, path, allowed);
    return node;
  }

  void check_keys(const YAML::Node& node, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& kv : node) {
      const std::string key = kv.first.as<std::string>();
      if (!allowed.count(key)) error(kv.first, path.empty() ? key : path + "." + key, "unknown key");
    }
  }

  /// Source line of every scalar read, keyed by dotted field path.
  std::map<std::string, int> lines;

  void note(const YAML::Node& node, const std::string& field) { lines[field] = line_of(node); }

  void number(const YAML::Node& parent, const std::string& key, const std::string& path, double& out) {
    const YAML::Node node = parent[key];
    if (!node) return;
    note(node, path + "." + key);
    double v = 0.0;
    if (!node.IsScalar() || !parse_number(node.Scalar(), v)) {
      error(node, path + "." + key, "expected a number");
      return;
    }
    out = v;
  }

  void number(const YAML::Node& parent, const std::string& key, const std::string& path, std::optional<double>& out) {
    if (!parent[key]) return;
    double v = 0.0;
    const std::size_t before = diags_.size();
    number(parent, key, path, v);
    if (diags_.size() == before) out = v;
  }

  void integer(const YAML::Node& parent, const std::string& key, const std::string& path, int& out) {
    const YAML::Node node = parent[key];
    if (!node) return;
    note(node, path.empty() ? key : path + "." + key);
    double v = 0.0;
    if (!node.IsScalar() || !parse_plain_double(node.Scalar(), v) || v != std::floor(v) || std::abs(v) > 1e9) {
      error(node, path + "." + key, "expected an integer");
      return;
    }
    out = static_cast<int>(v);
  }

  void integer(const YAML::Node& parent, const std::string& key, const std::string& path, std::optional<int>& out) {
    if (!parent[key]) return;
    int v = 0;
    const std::size_t before = diags_.size();
    integer(parent, key, path, v);
    if (diags_.size() == before) out = v;
  }

  void boolean(const YAML::Node& parent, const std::string& key, const std::string& path, bool& out) {
    const YAML::Node node = parent[key];
    if (!node) return;
    note(node, path + "." + key);
    bool v = false;
    if (!node.IsScalar() || !YAML::convert<bool>::decode(node, v)) {
      error(node, path + "." + key, "expected true or false");
      return;
    }
    out = v;
  }

  void text(const YAML::Node& parent, const std::string& key, const std::string& path, std::string& out) {
    const YAML::Node node = parent[key];
    if (!node) return;
    note(node, path + "." + key);
    if (!node.IsScalar()) {
      error(node, path + "." + key, "expected a string");
      return;
    }
    out = node.Scalar();
  }

  std::vector<double> number_list(const YAML::Node& node, const std::string& path) {
    std::vector<double> out;
    if (!node) return out;
    if (!node.IsSequence()) {
      error(node, path, "expected a list of numbers");
      return out;
    }
    for (std::size_t k = 0; k < node.size(); ++k) {
      double v = 0.0;
      if (!node[k].IsScalar() || !parse_number(node[k].Scalar(), v)) {
        error(node[k], path + "[" + std::to_string(k) + "]", "expected a number");
        continue;
      }
      out.push_back(v);
    }
    return out;
  }

  std::string resolve(const std::string& path) const {
    std::filesystem::path p(path);
    if (p.is_relative()) p = std::filesystem::path(base_dir_) / p;
    return p.lexically_normal().string();
  }

  /// Loads a profile CSV. Intensity columns go through the sampled importer;
  /// amplitude columns (designed profiles) are taken as is.
  std::optional<pump::PumpProfile> load_profile(const YAML::Node& node, const std::string& field,
                                                const std::string& path, bool amplitude_columns) {
    try {
      const auto rows = pump::read_profile_csv_file(resolve(path));
      if (!amplitude_columns) return pump::import_sampled_profile(rows);
      std::vector<pump::IntensityRow> squared = rows;
      for (auto& r : squared) r.intensity = r.intensity * r.intensity;
      for (const auto& r : rows) {
        if (r.intensity < 0.0) throw FormatError("negative amplitude in designed profile");
      }
      auto profile = pump::import_sampled_profile(squared);
      profile.kind = pump::ProfileKind::designed;
      return profile;
    } catch (const FormatError& e) {
      error(node, field, std::string("format error: ") + e.what());
    }
    return std::nullopt;
  }

  /// Inline rows [z_mm, amplitude, phase_rad], as written back by to_json.
  std::optional<pump::PumpProfile> inline_profile(const YAML::Node& node, const std::string& field) {
    if (!node.IsSequence()) {
      error(node, field, "expected a list of [z_mm, amplitude, phase_rad] rows");
      return std::nullopt;
    }
    pump::PumpProfile profile;
    profile.kind = pump::ProfileKind::sampled;
    for (std::size_t k = 0; k < node.size(); ++k) {
      const auto row = number_list(node[k], field + "[" + std::to_string(k) + "]");
      if (row.size() != 3) {
        error(node[k], field + "[" + std::to_string(k) + "]", "expected three numbers");
        return std::nullopt;
      }
      profile.samples.push_back({row[0], row[1], row[2]});
    }
    if (auto problems = profile.validate(); !problems.empty()) {
      error(node, field, "format error: " + problems.front());
      return std::nullopt;
    }
    return profile;
  }

  /// A tabulated profile from either `csv` or `samples` under parent.
  std::optional<pump::PumpProfile> tabulated_profile(const YAML::Node& parent, const std::string& path, bool designed,
                                                     std::string& csv) {
    text(parent, "csv", path, csv);
    const bool has_samples = static_cast<bool>(parent["samples"]);
    if (csv.empty() == !has_samples) {
      error(parent, path, "give exactly one of csv or samples for a tabulated profile");
      return std::nullopt;
    }
    auto profile = has_samples ? inline_profile(parent["samples"], path + ".samples")
                               : load_profile(parent["csv"], path + ".csv", csv, designed);
    if (profile && designed) profile->kind = pump::ProfileKind::designed;
    return profile;
  }

 private:
  std::vector<Diagnostic>& diags_;
  std::string base_dir_;
};

const std::set<std::string> kTopKeys{"format_version", "device", "pump", "grid", "schmidt", "hom", "wigner", "design",
                                     "sweep", "visibility_study", "output"};
const std::set<std::string> kDeviceKeys{"length_mm",      "group_velocity", "group_index",   "reflectivity_te",
                                        "reflectivity_tm", "comb_shift_nm",  "comb_anchor_nm", "cavity_enabled",
                                        "index_mismatch", "propagation_mismatch_per_mm"};
const std::set<std::string> kPumpKeys{"wavelength_nm", "incidence_angle_rad", "signal_idler_offset_nm", "pulse_fwhm_ps",
                                      "profile"};
const std::set<std::string> kProfileKeys{"kind",          "waist_mm", "phase_step_rad", "curvature_radius_mm",
                                         "center_offset_mm", "csv", "samples"};
const std::set<std::string> kGridKeys{"half_span", "n_points", "n_sigma", "min_points", "max_points"};
const std::set<std::string> kSweepParameters{"phase_step_rad", "waist_mm",        "pulse_fwhm_ps",
                                             "signal_idler_offset_nm", "curvature_radius_mm", "center_offset_mm"};

}  // namespace

ParseResult parse_config(const std::string& text, const std::string& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError({{e.mark.line >= 0 ? e.mark.line + 1 : 0, "", "YAML syntax error: " + e.msg}});
  }
  ParseResult result;
  RunConfig& cfg = result.config;
  Reader r(result.diagnostics, base_dir);
  if (!root || root.IsNull()) return result;
  if (!root.IsMap()) {
    r.error(root, "", "config must be a mapping");
    return result;
  }
  r.check_keys(root, "", kTopKeys);

  if (root["format_version"]) {
    int version = 0;
    r.integer(root, "format_version", "", version);
    if (version != config_format_version) {
      r.error(root["format_version"], "format_version", "unsupported version (expected 1)");
    }
  }

  if (auto d = r.section(root, "device", "device", kDeviceKeys)) {
    auto& dev = cfg.device;
    r.number(d, "length_mm", "device", dev.length_mm);
    r.number(d, "group_velocity", "device", dev.group_velocity);
    r.number(d, "group_index", "device", dev.group_index);
    r.number(d, "reflectivity_te", "device", dev.reflectivity_te);
    r.number(d, "reflectivity_tm", "device", dev.reflectivity_tm);
    r.number(d, "comb_shift_nm", "device", dev.comb_shift_nm);
    r.number(d, "comb_anchor_nm", "device", dev.comb_anchor_nm);
    r.boolean(d, "cavity_enabled", "device", dev.cavity_enabled);
    r.number(d, "index_mismatch", "device", dev.index_mismatch);
    r.number(d, "propagation_mismatch_per_mm", "device", dev.propagation_mismatch_per_mm);
  }

  if (auto p = r.section(root, "pump", "pump", kPumpKeys)) {
    auto& pump = cfg.pump;
    r.number(p, "wavelength_nm", "pump", pump.wavelength_nm);
    r.number(p, "incidence_angle_rad", "pump", pump.incidence_angle_rad);
    r.number(p, "signal_idler_offset_nm", "pump", cfg.signal_idler_offset_nm);
    r.number(p, "pulse_fwhm_ps", "pump", pump.pulse_fwhm_ps);
    if (pump.incidence_angle_rad && cfg.signal_idler_offset_nm) {
      r.error(p["signal_idler_offset_nm"], "pump.signal_idler_offset_nm",
              "give either incidence_angle_rad or signal_idler_offset_nm, not both");
    }
    if (auto prof = r.section(p, "profile", "pump.profile", kProfileKeys)) {
      std::string kind = "gaussian";
      r.text(prof, "kind", "pump.profile", kind);
      try {
        pump.profile.kind = pump::profile_kind_from_string(kind);
      } catch (const std::invalid_argument&) {
        r.error(prof["kind"], "pump.profile.kind",
                "unknown kind '" + kind + "' (gaussian, phase_step, quadratic_phase, sampled, designed)");
      }
      r.number(prof, "waist_mm", "pump.profile", pump.profile.waist_mm);
      r.number(prof, "phase_step_rad", "pump.profile", pump.profile.phase_step_rad);
      r.number(prof, "curvature_radius_mm", "pump.profile", pump.profile.curvature_radius_mm);
      r.number(prof, "center_offset_mm", "pump.profile", pump.profile.center_offset_mm);
      const bool tabulated =
          pump.profile.kind == pump::ProfileKind::sampled || pump.profile.kind == pump::ProfileKind::designed;
      if (tabulated) {
        if (auto loaded = r.tabulated_profile(prof, "pump.profile", pump.profile.kind == pump::ProfileKind::designed,
                                              cfg.profile_csv)) {
          const double offset = pump.profile.center_offset_mm;
          pump.profile = *loaded;
          pump.profile.center_offset_mm = offset;
        } else {
          pump.profile.kind = pump::ProfileKind::gaussian;
        }
      }
    }
    pump.profile.wavelength_nm = pump.wavelength_nm;
  }

  if (auto g = r.section(root, "grid", "grid", kGridKeys)) {
    r.number(g, "half_span", "grid", cfg.grid.half_span);
    r.integer(g, "n_points", "grid", cfg.grid.n_points);
    r.number(g, "n_sigma", "grid", cfg.grid.n_sigma);
    r.integer(g, "min_points", "grid", cfg.grid.min_points);
    r.integer(g, "max_points", "grid", cfg.grid.max_points);
  }

  if (auto s = r.section(root, "schmidt", "schmidt", {"method", "n_singular"})) {
    r.text(s, "method", "schmidt", cfg.schmidt.method);
    r.integer(s, "n_singular", "schmidt", cfg.schmidt.n_singular);
  }

  if (auto h = r.section(root, "hom", "hom", {"tau_max", "n_points", "window_factor", "convention"})) {
    r.number(h, "tau_max", "hom", cfg.hom.tau_max);
    r.integer(h, "n_points", "hom", cfg.hom.n_points);
    r.number(h, "window_factor", "hom", cfg.hom.window_factor);
    std::string conv = analysis::to_string(cfg.hom.convention);
    r.text(h, "convention", "hom", conv);
    try {
      cfg.hom.convention = analysis::exchange_convention_from_string(conv);
    } catch (const std::invalid_argument&) {
      r.error(h["convention"], "hom.convention", "expected boson or fermion");
    }
  }

  if (auto w = r.section(root, "wigner", "wigner", {"omega_max", "n_omega", "t_max", "n_t", "omega_stride"})) {
    r.number(w, "omega_max", "wigner", cfg.wigner.omega_max);
    r.integer(w, "n_omega", "wigner", cfg.wigner.n_omega);
    r.number(w, "t_max", "wigner", cfg.wigner.t_max);
    r.integer(w, "n_t", "wigner", cfg.wigner.n_t);
    r.integer(w, "omega_stride", "wigner", cfg.wigner.omega_stride);
  }

  if (auto d = r.section(root, "design", "design", {"exchange_phase", "alpha", "beta", "n_samples"})) {
    r.number(d, "exchange_phase", "design", cfg.design.target.exchange_phase);
    r.number(d, "alpha", "design", cfg.design.target.alpha);
    r.number(d, "beta", "design", cfg.design.target.beta);
    r.integer(d, "n_samples", "design", cfg.design.n_samples);
  }

  if (auto s = r.section(root, "sweep", "sweep", {"parameter", "values"})) {
    r.text(s, "parameter", "sweep", cfg.sweep.parameter);
    if (!kSweepParameters.count(cfg.sweep.parameter)) r.error(s["parameter"], "sweep.parameter", "unknown parameter");
    cfg.sweep.values = r.number_list(s["values"], "sweep.values");
  }

  if (auto v = r.section(root, "visibility_study", "visibility_study", {"perturbations"})) {
    const YAML::Node list = v["perturbations"];
    if (list && !list.IsSequence()) r.error(list, "visibility_study.perturbations", "expected a list");
    for (std::size_t k = 0; list && list.IsSequence() && k < list.size(); ++k) {
      const std::string path = "visibility_study.perturbations[" + std::to_string(k) + "]";
      const YAML::Node item = list[k];
      if (!item.IsMap()) {
        r.error(item, path, "expected a mapping");
        continue;
      }
      r.check_keys(item, path, {"kind", "value", "label", "csv", "samples"});
      analysis::Perturbation pert;
      std::string kind = "none", csv;
      r.text(item, "kind", path, kind);
      try {
        pert.kind = analysis::perturbation_kind_from_string(kind);
      } catch (const std::invalid_argument&) {
        r.error(item["kind"], path + ".kind", "unknown perturbation kind '" + kind + "'");
      }
      r.number(item, "value", path, pert.value);
      r.text(item, "label", path, pert.label);
      if (pert.kind == analysis::PerturbationKind::sampled_profile) {
        if (auto loaded = r.tabulated_profile(item, path, false, csv)) pert.profile = *loaded;
      }
      cfg.perturbations.push_back(pert);
      cfg.perturbation_csv.push_back(csv);
    }
  }

  if (auto o = r.section(root, "output", "output", {"directory", "formats"})) {
    r.text(o, "directory", "output", cfg.output_directory);
    const YAML::Node f = o["formats"];
    if (f) {
      if (!f.IsSequence()) {
        r.error(f, "output.formats", "expected a list");
      } else {
        cfg.formats.clear();
        for (std::size_t k = 0; k < f.size(); ++k) cfg.formats.push_back(f[k].as<std::string>());
      }
    }
  }

  for (auto d : validate_config(cfg)) {
    if (d.line == 0) {
      const auto it = r.lines.find(d.field);
      if (it != r.lines.end()) d.line = it->second;
    }
    result.diagnostics.push_back(d);
  }
  return result;
}

ParseResult load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({{0, "", "cannot read config file '" + path + "'"}});
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_config(buffer.str(), dir.empty() ? "." : dir.string());
}

namespace {

/// Spec messages read "<field> <text>"; split them so the field can be located.
Diagnostic from_message(const std::string& m) {
  const auto space = m.find(' ');
  if (space == std::string::npos) return {0, "", m};
  return {0, m.substr(0, space), m.substr(space + 1)};
}

}  // namespace

std::vector<Diagnostic> validate_config(const RunConfig& cfg) {
  std::vector<Diagnostic> out;
  for (auto& m : cfg.device.validate()) out.push_back(from_message(m));
  for (auto& m : cfg.pump.validate()) out.push_back(from_message(m));
  if (cfg.signal_idler_offset_nm && !(std::abs(*cfg.signal_idler_offset_nm) < 1.0)) {
    out.push_back({0, "pump.signal_idler_offset_nm", "must lie in (-1, 1) nm"});
  }
  if (cfg.grid.half_span && !(*cfg.grid.half_span > 0.0)) out.push_back({0, "grid.half_span", "must be > 0"});
  if (cfg.grid.n_points && *cfg.grid.n_points < 2) out.push_back({0, "grid.n_points", "must be >= 2"});
  if (!(cfg.grid.n_sigma > 0.0)) out.push_back({0, "grid.n_sigma", "must be > 0"});
  if (cfg.grid.min_points < 2) out.push_back({0, "grid.min_points", "must be >= 2"});
  if (cfg.schmidt.method != "auto" && cfg.schmidt.method != "dense" && cfg.schmidt.method != "narrowband") {
    out.push_back({0, "schmidt.method", "expected auto, dense or narrowband"});
  }
  if (cfg.schmidt.n_singular < 1) out.push_back({0, "schmidt.n_singular", "must be >= 1"});
  if (cfg.hom.tau_max && !(*cfg.hom.tau_max > 0.0)) out.push_back({0, "hom.tau_max", "must be > 0"});
  if (cfg.hom.n_points < 2) out.push_back({0, "hom.n_points", "must be >= 2"});
  if (!(cfg.hom.window_factor > 0.0)) out.push_back({0, "hom.window_factor", "must be > 0"});
  if (!(cfg.wigner.omega_max > 0.0)) out.push_back({0, "wigner.omega_max", "must be > 0"});
  if (cfg.wigner.n_omega < 3 || cfg.wigner.n_omega % 2 == 0) out.push_back({0, "wigner.n_omega", "must be odd and >= 3"});
  if (!(cfg.wigner.t_max > 0.0)) out.push_back({0, "wigner.t_max", "must be > 0"});
  if (cfg.wigner.n_t < 1) out.push_back({0, "wigner.n_t", "must be >= 1"});
  if (cfg.wigner.omega_stride < 1) out.push_back({0, "wigner.omega_stride", "must be >= 1"});
  if (!(cfg.design.target.alpha >= 0.0 && cfg.design.target.alpha <= 2.0)) {
    out.push_back({0, "design.alpha", "must lie in [0, 2]"});
  }
  if (!(cfg.design.target.beta > 0.0)) out.push_back({0, "design.beta", "must be > 0"});
  if (cfg.design.n_samples < 2) out.push_back({0, "design.n_samples", "must be >= 2"});
  for (const auto& f : cfg.formats) {
    if (f != "csv" && f != "json" && f != "pgm") out.push_back({0, "output.formats", "unknown format '" + f + "'"});
  }
  return out;
}

core::PumpSpec resolved_pump(const RunConfig& cfg) {
  core::PumpSpec pump = cfg.pump;
  if (cfg.signal_idler_offset_nm) {
    pump.incidence_angle_rad = core::wavelength_offset_to_angle(cfg.device, cfg.pump, *cfg.signal_idler_offset_nm);
  }
  return pump;
}

namespace {

nlohmann::ordered_json samples_json(const pump::PumpProfile& p) {
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : p.samples) samples.push_back({s.z_mm, s.amplitude, s.phase_rad});
  return samples;
}

nlohmann::ordered_json profile_json(const pump::PumpProfile& p) {
  nlohmann::ordered_json j;
  j["kind"] = pump::to_string(p.kind);
  j["center_offset_mm"] = p.center_offset_mm;
  switch (p.kind) {
    case pump::ProfileKind::phase_step:
      j["phase_step_rad"] = p.phase_step_rad;
      [[fallthrough]];
    case pump::ProfileKind::gaussian:
      j["waist_mm"] = p.waist_mm;
      break;
    case pump::ProfileKind::quadratic_phase:
      j["waist_mm"] = p.waist_mm;
      j["curvature_radius_mm"] = p.curvature_radius_mm;
      break;
    case pump::ProfileKind::sampled:
    case pump::ProfileKind::designed:
      j["samples"] = samples_json(p);
      break;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["format_version"] = config_format_version;
  const auto& d = cfg.device;
  j["device"] = {{"length_mm", d.length_mm},
                 {"group_velocity", d.group_velocity},
                 {"reflectivity_te", d.reflectivity_te},
                 {"reflectivity_tm", d.reflectivity_tm},
                 {"comb_shift_nm", d.comb_shift_nm},
                 {"comb_anchor_nm", d.comb_anchor_nm},
                 {"cavity_enabled", d.cavity_enabled},
                 {"index_mismatch", d.index_mismatch}};
  if (d.group_index) j["device"]["group_index"] = *d.group_index;
  if (d.propagation_mismatch_per_mm) j["device"]["propagation_mismatch_per_mm"] = *d.propagation_mismatch_per_mm;

  const core::PumpSpec pump = resolved_pump(cfg);
  j["pump"] = {{"wavelength_nm", pump.wavelength_nm}, {"pulse_fwhm_ps", pump.pulse_fwhm_ps}};
  if (pump.incidence_angle_rad) j["pump"]["incidence_angle_rad"] = *pump.incidence_angle_rad;
  j["pump"]["profile"] = profile_json(pump.profile);

  j["grid"] = {{"n_sigma", cfg.grid.n_sigma}, {"min_points", cfg.grid.min_points}, {"max_points", cfg.grid.max_points}};
  if (cfg.grid.half_span) j["grid"]["half_span"] = *cfg.grid.half_span;
  if (cfg.grid.n_points) j["grid"]["n_points"] = *cfg.grid.n_points;
  j["schmidt"] = {{"method", cfg.schmidt.method}, {"n_singular", cfg.schmidt.n_singular}};
  j["hom"] = {{"n_points", cfg.hom.n_points},
              {"window_factor", cfg.hom.window_factor},
              {"convention", analysis::to_string(cfg.hom.convention)}};
  if (cfg.hom.tau_max) j["hom"]["tau_max"] = *cfg.hom.tau_max;
  j["wigner"] = {{"omega_max", cfg.wigner.omega_max},
                 {"n_omega", cfg.wigner.n_omega},
                 {"t_max", cfg.wigner.t_max},
                 {"n_t", cfg.wigner.n_t},
                 {"omega_stride", cfg.wigner.omega_stride}};
  j["design"] = {{"exchange_phase", cfg.design.target.exchange_phase},
                 {"alpha", cfg.design.target.alpha},
                 {"beta", cfg.design.target.beta},
                 {"n_samples", cfg.design.n_samples}};
  j["sweep"] = {{"parameter", cfg.sweep.parameter}, {"values", cfg.sweep.values}};
  auto perts = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < cfg.perturbations.size(); ++k) {
    const auto& p = cfg.perturbations[k];
    nlohmann::ordered_json e{{"kind", analysis::to_string(p.kind)}, {"value", p.value}, {"label", p.label}};
    if (p.kind == analysis::PerturbationKind::sampled_profile) e["samples"] = samples_json(p.profile);
    perts.push_back(e);
  }
  j["visibility_study"] = {{"perturbations", perts}};
  j["output"] = {{"formats", cfg.formats}};
  return j;
}

bool has_format(const RunConfig& config, const std::string& format) {
  return std::find(config.formats.begin(), config.formats.end(), format) != config.formats.end();
}

}  // namespace pairshaper::cli
