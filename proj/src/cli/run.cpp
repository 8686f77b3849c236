#include "pairshaper/cli/run.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "pairshaper/analysis/hom.hpp"
#include "pairshaper/analysis/metrics.hpp"
#include "pairshaper/analysis/schmidt.hpp"
#include "pairshaper/analysis/study.hpp"
#include "pairshaper/analysis/wigner.hpp"
#include "pairshaper/cli/output.hpp"
#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/parallel.hpp"
#include "pairshaper/core/units.hpp"
#include "pairshaper/pdc/jsa.hpp"
#include "pairshaper/pdc/phase_matching.hpp"
#include "pairshaper/pump/design.hpp"
#include "pairshaper/pump/import.hpp"

namespace pairshaper::cli {
namespace {

namespace fs = std::filesystem;

Eigen::VectorXd linspace(double lo, double hi, int n) {
  if (n == 1) return Eigen::VectorXd::Constant(1, 0.5 * (lo + hi));
  return Eigen::VectorXd::LinSpaced(n, lo, hi);
}

Eigen::VectorXd to_nm(const Eigen::VectorXd& omega) {
  return omega.unaryExpr([](double w) { return core::units::wavelength_nm_from_omega(w); });
}

core::FrequencyGrid grid_for(const RunConfig& cfg, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  pdc::GridOptions options;
  options.n_sigma = cfg.grid.n_sigma;
  options.min_points = cfg.grid.min_points;
  options.max_points = cfg.grid.max_points;
  const auto g = pdc::suggest_grid(device, pump, options);
  if (!cfg.grid.half_span && !cfg.grid.n_points) return g;
  return core::make_grid(g.center_signal(), g.center_idler(), cfg.grid.half_span.value_or(g.half_span()),
                         cfg.grid.n_points.value_or(g.n_points()));
}

/// Output collector for one command.
struct Job {
  const RunConfig& cfg;
  fs::path dir;
  std::vector<std::string> written;

  bool wants(const char* format) const { return has_format(cfg, format); }
  fs::path file(const std::string& name) {
    written.push_back(name);
    return dir / name;
  }
};

void write_jsi(Job& job, const pdc::JointAmplitude& jsa, const std::string& stem) {
  const Eigen::VectorXd signal_nm = to_nm(jsa.grid.signal_axis());
  const Eigen::VectorXd idler_nm = to_nm(jsa.grid.idler_axis());
  const Eigen::MatrixXd intensity = analysis::jsi(jsa);
  if (job.wants("csv")) write_matrix_csv(job.file(stem + ".csv"), "signal_nm\\idler_nm", signal_nm, idler_nm, intensity);
  if (job.wants("pgm")) write_pgm(job.file(stem + ".pgm"), intensity);
}

void command_jsa(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto jsa = pdc::assemble_jsa(device, pump, grid_for(job.cfg, device, pump));
  write_jsi(job, jsa, "jsi");
  if (job.wants("csv")) {
    const Eigen::VectorXd signal_nm = to_nm(jsa.grid.signal_axis());
    const Eigen::VectorXd idler_nm = to_nm(jsa.grid.idler_axis());
    write_matrix_csv(job.file("jsa_real.csv"), "signal_nm\\idler_nm", signal_nm, idler_nm, jsa.values.real());
    write_matrix_csv(job.file("jsa_imag.csv"), "signal_nm\\idler_nm", signal_nm, idler_nm, jsa.values.imag());
  }
}

bool use_narrowband(const RunConfig& cfg, const core::FrequencyGrid& grid, const core::PumpSpec& pump) {
  if (cfg.schmidt.method == "narrowband") return true;
  if (cfg.schmidt.method == "dense") return false;
  return grid.spacing() > pdc::spectral_sigma(pump) / 3.0;
}

void command_schmidt(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto grid = grid_for(job.cfg, device, pump);
  nlohmann::ordered_json j;
  if (use_narrowband(job.cfg, grid, pump)) {
    j["method"] = "narrowband";
    j["schmidt_number"] = analysis::schmidt_number_narrowband(device, pump);
    j["singular_values"] = nlohmann::ordered_json::array();
  } else {
    const auto jsa = pdc::assemble_jsa(device, pump, grid);
    const auto result = analysis::schmidt_decompose(jsa, 0);
    j["method"] = "dense";
    j["schmidt_number"] = result.schmidt_number;
    j["schmidt_number_flat_phase"] = analysis::schmidt_number_flat_phase(analysis::jsi(jsa));
    const auto n = std::min<Eigen::Index>(job.cfg.schmidt.n_singular, result.singular_values.size());
    std::vector<double> values(result.singular_values.data(), result.singular_values.data() + n);
    j["singular_values"] = values;
    j["grid_points"] = grid.n_points();
  }
  write_json(job.file("schmidt.json"), j);
}

void command_hom(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto jsa = pdc::assemble_jsa(device, pump, grid_for(job.cfg, device, pump));
  const auto& h = job.cfg.hom;
  const Eigen::VectorXd delays = h.tau_max ? linspace(-*h.tau_max, *h.tau_max, h.n_points)
                                           : analysis::default_delays(jsa, h.n_points, h.window_factor);
  const auto trace = analysis::hom_trace(jsa, delays, h.convention);
  if (job.wants("csv")) write_columns_csv(job.file("hom.csv"), {"tau_ps", "probability"}, {trace.delays, trace.probability});
  if (job.wants("json")) {
    nlohmann::ordered_json j;
    j["convention"] = analysis::to_string(trace.convention);
    j["visibility"] = trace.visibility;
    j["extremal_visibility"] = analysis::extremal_visibility(trace);
    j["coherence_time_ps"] = analysis::coherence_time(jsa);
    write_json(job.file("hom.json"), j);
  }
}

void command_wigner(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto& w = job.cfg.wigner;
  const auto pm = pdc::sample_phase_match(pump.profile, device, pump, linspace(-w.omega_max, w.omega_max, w.n_omega));
  analysis::WignerOptions options;
  options.omega_stride = w.omega_stride;
  const auto slice = analysis::wigner_minus(pm, linspace(-w.t_max, w.t_max, w.n_t), options);
  if (job.wants("csv")) {
    write_matrix_csv(job.file("wigner.csv"), "omega_minus\\t_minus_ps", slice.omega_minus, slice.t_minus, slice.values);
  }
  if (job.wants("pgm")) write_pgm(job.file("wigner.pgm"), slice.values, true);
}

void command_design(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto profile = pump::design_anyonic_profile(job.cfg.design.target, device, pump, job.cfg.design.n_samples);
  const auto n = static_cast<Eigen::Index>(profile.samples.size());
  Eigen::VectorXd z(n), amplitude(n), phase(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    z(k) = profile.samples[k].z_mm;
    amplitude(k) = profile.samples[k].amplitude;
    phase(k) = profile.samples[k].phase_rad;
  }
  if (job.wants("csv")) write_columns_csv(job.file("pump_design.csv"), {"z_mm", "amplitude", "phase_rad"}, {z, amplitude, phase});
  if (job.wants("json")) {
    core::PumpSpec designed = pump;
    designed.profile = profile;
    const auto& t = job.cfg.design.target;
    const double span = 4.0 * std::sqrt(t.beta);
    const auto pm = pdc::sample_phase_match(profile, device, designed, linspace(-span, span, 401));
    nlohmann::ordered_json j;
    j["exchange_residual"] = analysis::exchange_residual(pm, t.exchange_phase);
    j["exchange_residual_two_sided"] = analysis::exchange_residual_two_sided(pm, t.exchange_phase);
    write_json(job.file("pump_design.json"), j);
  }
}

void apply_sweep_value(const std::string& parameter, double value, RunConfig& cfg) {
  auto& profile = cfg.pump.profile;
  if (parameter == "phase_step_rad") {
    if (profile.kind == pump::ProfileKind::gaussian) profile.kind = pump::ProfileKind::phase_step;
    profile.phase_step_rad = value;
  } else if (parameter == "waist_mm") {
    profile.waist_mm = value;
  } else if (parameter == "pulse_fwhm_ps") {
    cfg.pump.pulse_fwhm_ps = value;
  } else if (parameter == "signal_idler_offset_nm") {
    cfg.signal_idler_offset_nm = value;
  } else if (parameter == "curvature_radius_mm") {
    profile.curvature_radius_mm = value;
  } else if (parameter == "center_offset_mm") {
    profile.center_offset_mm = value;
  } else {
    throw ConfigError({{0, "sweep.parameter", "unknown parameter '" + parameter + "'"}});
  }
}

void command_sweep(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  const auto& values = job.cfg.sweep.values;
  if (values.empty()) throw ConfigError({{0, "sweep.values", "needs at least one value"}});
  const auto grid = grid_for(job.cfg, device, pump);
  const auto n = static_cast<Eigen::Index>(values.size());
  Eigen::VectorXd index(n), value(n), k_values(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    RunConfig point = job.cfg;
    apply_sweep_value(point.sweep.parameter, values[k], point);
    auto diagnostics = validate_config(point);
    if (!diagnostics.empty()) throw ConfigError(diagnostics);
    const auto jsa = pdc::assemble_jsa(point.device, resolved_pump(point), grid);
    write_jsi(job, jsa, "jsi_" + std::to_string(k));
    index(k) = static_cast<double>(k);
    value(k) = values[k];
    k_values(k) = analysis::schmidt_number(jsa.values);
  }
  if (job.wants("csv")) {
    write_columns_csv(job.file("sweep.csv"), {"index", job.cfg.sweep.parameter, "schmidt_number"},
                      {index, value, k_values});
  }
}

void command_visibility(Job& job, const core::DeviceSpec& device, const core::PumpSpec& pump) {
  analysis::VisibilityStudyOptions options;
  if (job.cfg.grid.half_span || job.cfg.grid.n_points) options.grid = grid_for(job.cfg, device, pump);
  options.n_delays = job.cfg.hom.n_points;
  options.window_factor = job.cfg.hom.window_factor;
  options.convention = job.cfg.hom.convention;
  const auto rows = analysis::visibility_study(device, pump, job.cfg.perturbations, options);
  if (!job.wants("csv")) return;
  auto out = std::ofstream(job.file("visibility.csv"));
  if (!out) throw std::runtime_error("cannot write visibility.csv");
  out << "label,kind,value,visibility,delta_points\n";
  for (const auto& r : rows) {
    out << r.label << ',' << analysis::to_string(r.kind) << ',' << format_double(r.value) << ','
        << format_double(r.visibility) << ',' << format_double(r.delta_points) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"jsa",   "schmidt", "hom", "wigner", "design-pump",
                                              "sweep", "visibility-study"};
  return names;
}

std::vector<std::string> run_command(const RunConfig& config, const std::string& command, const fs::path& out_dir) {
  if (auto diagnostics = validate_config(config); !diagnostics.empty()) throw ConfigError(diagnostics);
  const core::DeviceSpec& device = config.device;
  const core::PumpSpec pump = resolved_pump(config);
  fs::create_directories(out_dir);
  Job job{config, out_dir, {}};
  if (command == "jsa") {
    command_jsa(job, device, pump);
  } else if (command == "schmidt") {
    command_schmidt(job, device, pump);
  } else if (command == "hom") {
    command_hom(job, device, pump);
  } else if (command == "wigner") {
    command_wigner(job, device, pump);
  } else if (command == "design-pump") {
    command_design(job, device, pump);
  } else if (command == "sweep") {
    command_sweep(job, device, pump);
  } else if (command == "visibility-study") {
    command_visibility(job, device, pump);
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  nlohmann::ordered_json meta;
  meta["tool"] = tool_name;
  meta["version"] = tool_version;
  meta["config_format_version"] = config_format_version;
  meta["command"] = command;
  meta["outputs"] = job.written;
  meta["config"] = to_json(config);
  meta["derived"] = {{"group_index", device.effective_group_index()},
                     {"degeneracy_angle_rad", core::degeneracy_angle(device, pump)},
                     {"incidence_angle_rad", core::incidence_angle(device, pump)}};
  auto sources = nlohmann::ordered_json::array();
  if (!config.profile_csv.empty()) sources.push_back(config.profile_csv);
  for (const auto& csv : config.perturbation_csv) {
    if (!csv.empty()) sources.push_back(csv);
  }
  if (!sources.empty()) meta["sources"] = sources;
  write_json(out_dir / "meta.json", meta);
  job.written.push_back("meta.json");
  return job.written;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counter-propagating PDC pair-state simulator", tool_name};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  std::string config_path, out_dir;
  std::vector<std::string> formats;
  int threads = 0;
  std::vector<std::string> all = command_names();
  all.push_back("validate");
  for (const auto& name : all) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "YAML run configuration")->required();
    if (name == "validate") continue;
    sub->add_option("--out", out_dir, "output directory (overrides output.directory)");
    sub->add_option("--formats", formats, "comma-separated subset of csv,json,pgm")->delimiter(',');
    sub->add_option("--threads", threads, "worker threads (default PAIRSHAPER_THREADS or hardware)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  auto report = [&err](const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) err << "error: " << format_diagnostic(d) << '\n';
  };
  try {
    ParseResult parsed = load_config(config_path);
    if (command == "validate") {
      report(parsed.diagnostics);
      if (parsed.diagnostics.empty()) out << config_path << ": ok\n";
      return parsed.diagnostics.empty() ? exit_ok : exit_config;
    }
    if (!parsed.diagnostics.empty()) {
      report(parsed.diagnostics);
      return exit_config;
    }
    RunConfig& cfg = parsed.config;
    if (!formats.empty()) cfg.formats = formats;
    std::optional<ThreadCountScope> scope;
    if (threads > 0) scope.emplace(threads);
    const fs::path dir = out_dir.empty() ? fs::path(cfg.output_directory) : fs::path(out_dir);
    for (const auto& name : run_command(cfg, command, dir)) out << (dir / name).string() << '\n';
    return exit_ok;
  } catch (const ConfigError& e) {
    report(e.diagnostics());
    return exit_config;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const DesignInfeasible& e) {
    err << "error: design infeasible: " << e.what() << '\n';
    return exit_infeasible;
  } catch (const NumericalError& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace pairshaper::cli
