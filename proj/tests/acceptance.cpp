/// Acceptance suite. Prints one PASS/FAIL line per criterion followed by the
/// measured values; exits non-zero if any criterion fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/faddeeva_series.hpp"
#include "oracles/jacobi.hpp"
#include "pairshaper/analysis/calibration.hpp"
#include "pairshaper/analysis/hom.hpp"
#include "pairshaper/analysis/metrics.hpp"
#include "pairshaper/analysis/schmidt.hpp"
#include "pairshaper/analysis/study.hpp"
#include "pairshaper/analysis/wigner.hpp"
#include "pairshaper/cli/config.hpp"
#include "pairshaper/cli/run.hpp"
#include "pairshaper/core/parallel.hpp"
#include "pairshaper/pdc/jsa.hpp"
#include "pairshaper/pdc/phase_matching.hpp"
#include "pairshaper/pump/design.hpp"
#include "pairshaper/special/faddeeva.hpp"

using namespace pairshaper;
namespace fs = std::filesystem;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

struct Report {
  std::vector<std::string> lines;
  bool pass = true;
  void info(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    lines.emplace_back(buf);
  }
  /// Records a sub-check; the criterion passes only if every check does.
  bool check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4))) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    lines.push_back(std::string(ok ? "ok    " : "MISS  ") + buf);
    pass = pass && ok;
    return ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

core::PumpSpec pump_of(const pump::PumpProfile& profile, double fwhm_ps) {
  core::PumpSpec p;
  p.profile = profile;
  p.pulse_fwhm_ps = fwhm_ps;
  return p;
}

core::DeviceSpec device_without_cavity() {
  core::DeviceSpec d;
  d.cavity_enabled = false;
  return d;
}

// 1. Exchange symmetry of the phase-step JSA at the degeneracy angle.
void exchange_symmetry(Report& r) {
  const auto device = device_without_cavity();
  const auto t0 = std::chrono::steady_clock::now();
  for (double dphi : {0.0, pi / 4, pi / 2, pi}) {
    const auto pump = pump_of(pump::phase_step(1.0, dphi), 4.0);
    const auto base = pdc::suggest_grid(device, pump);
    const auto grid = core::make_grid(base.center_signal(), base.center_idler(), base.half_span(), 512);
    const auto jsa = pdc::assemble_jsa(device, pump, grid);
    const double defect = analysis::symmetry_defect(jsa, dphi);
    r.check(defect < 1e-9, "dphi = %.4f: symmetry_defect = %.3e (< 1e-9)", dphi, defect);
  }
  const double elapsed = seconds_since(t0);
  r.check(elapsed < 5.0 * 4, "four 512^2 grids in %.2f s (< 5 s each)", elapsed);
}

// 2. HOM limits and convention complementarity.
void hom_limits(Report& r) {
  const auto device = device_without_cavity();
  const auto sym = pump_of(pump::gaussian(1.0), 4.0);
  const auto anti = pump_of(pump::phase_step(1.0, pi), 4.0);
  const auto jsa_s = pdc::assemble_jsa(device, sym, pdc::suggest_grid(device, sym));
  const auto jsa_a = pdc::assemble_jsa(device, anti, pdc::suggest_grid(device, anti));
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
  const double p_sym = analysis::hom_trace(jsa_s, zero).probability(0);
  const double p_anti = analysis::hom_trace(jsa_a, zero).probability(0);
  r.check(p_sym < 1e-9, "symmetric P(0) = %.3e (< 1e-9)", p_sym);
  r.check(p_anti > 1 - 1e-9, "antisymmetric 1 - P(0) = %.3e (< 1e-9)", 1 - p_anti);
  double worst = 0.0;
  for (const auto* jsa : {&jsa_s, &jsa_a}) {
    const Eigen::VectorXd delays = analysis::default_delays(*jsa, 401, 5.0);
    const auto b = analysis::hom_trace(*jsa, delays, analysis::ExchangeConvention::boson);
    const auto f = analysis::hom_trace(*jsa, delays, analysis::ExchangeConvention::fermion);
    worst = std::max(worst, (b.probability + f.probability - Eigen::VectorXd::Ones(delays.size())).cwiseAbs().maxCoeff());
  }
  r.check(worst < 1e-12, "max |P_boson + P_fermion - 1| = %.3e (< 1e-12)", worst);
}

// 3. HOM from the JSA against HOM from the omega_- = 0 Wigner row.
void wigner_hom(Report& r) {
  const auto device = device_without_cavity();
  struct State {
    const char* name;
    pump::PumpProfile profile;
  };
  for (const auto& s : {State{"gaussian", pump::gaussian(1.0)}, State{"pi/2 step", pump::phase_step(1.0, pi / 2)},
                        State{"pi step", pump::phase_step(1.0, pi)}}) {
    const auto pump = pump_of(s.profile, 4.0);
    // The step profiles have slowly decaying phase-matching tails; a wider span
    // keeps the truncated JSA close to the untruncated Wigner row.
    pdc::GridOptions wide;
    wide.n_sigma = 14.0;
    const auto jsa = pdc::assemble_jsa(device, pump, pdc::suggest_grid(device, pump, wide));
    const Eigen::VectorXd delays = Eigen::VectorXd::LinSpaced(301, -30.0, 30.0);
    const auto direct = analysis::hom_trace(jsa, delays);
    const auto pm = pdc::jsa_phase_match(device, pump, jsa.grid);
    analysis::WignerOptions options;
    options.omega_max = 0.0;
    const auto slice = analysis::wigner_minus(pm, delays / 2.0, options);
    const auto from_w = analysis::hom_from_wigner(slice);
    const double err = (direct.probability - from_w.probability).cwiseAbs().maxCoeff();
    r.check(err < 1e-3, "%s: max |P_jsa - P_wigner| = %.3e (< 1e-3), grid span 14 sigma", s.name, err);
  }
}

// 4. Faddeeva kernel against the extended-precision series.
void faddeeva_kernel(Report& r) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0, worst_reflection = 0.0;
  cplx worst_z;
  for (int k = 0; k < 10000; ++k) {
    const double radius = 4.0 * std::sqrt(u(rng));
    const double angle = 2.0 * pi * u(rng);
    const cplx z = std::polar(radius, angle);
    const cplx w = special::faddeeva(z);
    const cplx ref = oracle::faddeeva_series(z);
    const double rel = std::abs(w - ref) / std::abs(ref);
    if (rel > worst) {
      worst = rel;
      worst_z = z;
    }
    const cplx mirrored = special::faddeeva(-std::conj(z));
    worst_reflection = std::max(worst_reflection, std::abs(mirrored - std::conj(w)) / std::abs(w));
  }
  r.check(worst < 1e-12, "10^4 samples, max relative error %.3e at z = %.3f%+.3fi (< 1e-12)", worst, worst_z.real(),
          worst_z.imag());
  r.check(worst_reflection < 1e-12, "reflection w(-conj z) = conj w(z): %.3e (< 1e-12)", worst_reflection);
}

// 5. Closed form against quadrature for L = 10 w.
void closed_form(Report& r) {
  core::DeviceSpec device = device_without_cavity();
  const double w = 0.2;
  device.length_mm = 10.0 * w;
  const double limit = 6.0 * device.group_velocity / w;
  const Eigen::VectorXd omega = Eigen::VectorXd::LinSpaced(241, -limit, limit);
  for (double dphi : {0.0, pi / 2, pi}) {
    const auto pump = pump_of(pump::phase_step(w, dphi), 4.0);
    const auto quad = pdc::sample_phase_match(pump.profile, device, pump, omega);
    Eigen::VectorXcd closed(omega.size());
    for (Eigen::Index k = 0; k < omega.size(); ++k) closed(k) = pdc::phase_match_closed_form(w, dphi, device, omega(k));
    const cplx scale = closed.dot(quad.values) / closed.squaredNorm();
    double worst = 0.0;
    for (Eigen::Index k = 0; k < omega.size(); ++k) {
      const double denom = dphi == pi ? closed.cwiseAbs().maxCoeff() : std::abs(closed(k));
      worst = std::max(worst, std::abs(quad.values(k) - scale * closed(k)) / std::abs(scale) / denom);
    }
    r.check(worst < 1e-6, "dphi = %.4f: max relative error %.3e%s, fitted scale %.12f (sqrt(pi)/2 = %.12f)", dphi,
            worst, dphi == pi ? " (vs peak; phi(0) = 0)" : "", std::abs(scale), pdc::closed_form_scale);
  }
}

// 6. Calibration and Schmidt table.
void schmidt_table(Report& r) {
  core::DeviceSpec device;
  device.cavity_enabled = true;
  auto t0 = std::chrono::steady_clock::now();
  device.group_velocity = analysis::calibrate_group_velocity(device, pump_of(pump::gaussian(0.6), 6.0), 1.01);
  const double k_cal = analysis::schmidt_number_for(device, pump_of(pump::gaussian(0.6), 6.0));
  r.check(std::abs(k_cal - 1.01) < 1e-3, "calibrated v_g = %.6f mm/ps gives K = %.4f for 0.6 mm / 6 ps",
          device.group_velocity, k_cal);
  struct Row {
    const char* name;
    pump::PumpProfile profile;
    double fwhm, target, tolerance;
  };
  const Row rows[] = {{"0.1 mm / 10 ps", pump::gaussian(0.1), 10.0, 4.5, 0.15},
                      {"2 mm / 2 ps", pump::gaussian(2.0), 2.0, 3.0, 0.15},
                      {"2 mm / 0.5 ps", pump::gaussian(2.0), 0.5, 11.0, 0.15}};
  for (const auto& row : rows) {
    const double k = analysis::schmidt_number_for(device, pump_of(row.profile, row.fwhm));
    const double dev = k / row.target - 1.0;
    r.check(std::abs(dev) <= row.tolerance, "%s: K = %.3f, target %.1f (%+.1f%%, tolerance %.0f%%)", row.name, k,
            row.target, 100 * dev, 100 * row.tolerance);
  }
  const double k_quad = analysis::schmidt_number_for(device, pump_of(pump::quadratic_phase(0.6, 100.0), 6.0));
  r.check(std::abs(k_quad - 7.0) <= 1.0, "quadratic phase R_c = 100 mm, 0.6 mm / 6 ps: K = %.3f, target 7 +- 1", k_quad);
  const double dense_time = seconds_since(t0);
  r.check(dense_time < 120.0, "calibration and dense rows in %.1f s (< 120 s)", dense_time);

  t0 = std::chrono::steady_clock::now();
  const auto ns_pump = pump_of(pump::gaussian(0.1), 1000.0);
  const double k_ns = analysis::schmidt_number_narrowband(device, ns_pump);
  r.check(std::abs(k_ns / 440.0 - 1.0) <= 0.20, "0.1 mm / 1 ns (banded grid): K = %.1f, target 440 (%+.1f%%, tolerance 20%%)",
          k_ns, 100 * (k_ns / 440.0 - 1.0));
  core::DeviceSpec bare = device;
  bare.cavity_enabled = false;
  r.info("0.1 mm / 1 ns without the cavity: K = %.1f (%.1f s for both)", analysis::schmidt_number_narrowband(bare, ns_pump),
         seconds_since(t0));
}

// 7. Wigner negativity.
void wigner_negativity(Report& r) {
  const auto device = device_without_cavity();
  const Eigen::VectorXd omega = Eigen::VectorXd::LinSpaced(4001, -20.0, 20.0);
  const auto anti = pump_of(pump::phase_step(1.0, pi), 4.0);
  const auto pm_anti = pdc::sample_phase_match(anti.profile, device, anti, omega);
  const auto w00 = analysis::wigner_minus(pm_anti, Eigen::VectorXd::Zero(1));
  const double value = w00.values(w00.omega_minus.size() / 2, 0);
  r.check(std::abs(value + 1.0) <= 1e-3, "antisymmetric W(0, 0) = %.6f (-1 +- 1e-3)", value);

  const auto sym = pump_of(pump::gaussian(1.0), 4.0);
  const auto pm_sym = pdc::sample_phase_match(sym.profile, device, sym, omega);
  analysis::WignerOptions options;
  options.omega_max = 2.0;
  const auto slice = analysis::wigner_minus(pm_sym, Eigen::VectorXd::LinSpaced(601, -15.0, 15.0), options);
  Eigen::Index i, j;
  const double lowest = slice.values.minCoeff(&i, &j);
  r.check(std::abs(lowest + 0.05) <= 0.02 && slice.omega_minus(i) != 0.0,
          "symmetric state, w = 1 mm, L = 2 mm: min W = %.5f at omega = %.3f rad/ps, t = %.2f ps (-0.05 +- 0.02)",
          lowest, slice.omega_minus(i), slice.t_minus(j));
}

// 8. Visibility budget with the cavity on, and the pi-step node.
void visibility_budget(Report& r) {
  core::DeviceSpec device;
  device.cavity_enabled = true;
  device.comb_shift_nm = 0.0;
  const auto pump = pump_of(pump::gaussian(1.0), 4.0);
  const std::vector<analysis::Perturbation> perturbations{
      {analysis::PerturbationKind::degeneracy_offset, 0.05, {}, "degeneracy 50 pm"},
      {analysis::PerturbationKind::comb_shift, 0.015, {}, "comb shift 15 pm"}};
  const auto rows = analysis::visibility_study(device, pump, perturbations);
  r.info("baseline V = %.4f", rows[0].visibility);
  r.check(std::abs(rows[1].delta_points - 7.0) <= 2.0, "50 pm degeneracy offset: dV = %.2f points (7 +- 2)",
          rows[1].delta_points);
  r.check(std::abs(rows[2].delta_points - 1.5) <= 0.5, "15 pm comb shift: dV = %.2f points (1.5 +- 0.5)",
          rows[2].delta_points);

  // Both imperfections at once, for the flat and the pi-step pump.
  for (double dphi : {0.0, pi}) {
    auto d = device;
    auto p = pump_of(pump::phase_step(1.0, dphi), 4.0);
    const auto grid = pdc::suggest_grid(d, p);
    for (const auto& pert : perturbations) analysis::apply_perturbation(pert, d, p);
    const auto jsa = pdc::assemble_jsa(d, p, grid);
    const auto trace = analysis::hom_trace(jsa, analysis::default_delays(jsa, 401, 5.0));
    r.info("combined degeneracy and comb-shift errors, dphi = %.4f: |V| = %.4f", dphi,
           std::abs(analysis::extremal_visibility(trace)));
  }

  core::DeviceSpec shipped;
  shipped.cavity_enabled = true;
  const auto anti = pump_of(pump::phase_step(1.0, pi), 4.0);
  const auto jsa = pdc::assemble_jsa(shipped, anti, pdc::suggest_grid(shipped, anti));
  const Eigen::MatrixXd jsi = jsa.values.cwiseAbs2();
  const double ratio = jsi.diagonal().maxCoeff() / jsi.maxCoeff();
  r.check(ratio < 1e-6, "pi step, cavity on: max diagonal JSI / max JSI = %.3e (< 1e-6)", ratio);
}

// 9. Schmidt number against the Jacobi eigenvalue oracle.
void schmidt_oracle(Report& r) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> width(0.05, 0.6);
  const int n = 48;
  const double span = 2.0;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double sp = width(rng), sm = width(rng);
    Eigen::MatrixXcd m(n, n);
    std::vector<double> flat(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = -span + 2.0 * span * i / (n - 1);
        const double y = -span + 2.0 * span * j / (n - 1);
        const double v = std::exp(-(x + y) * (x + y) / (4 * sp * sp) - (x - y) * (x - y) / (4 * sm * sm));
        m(i, j) = v;
        flat[i * n + j] = v;
      }
    }
    pdc::JointAmplitude jsa{core::make_grid(100.0, 100.0, span, n), m, false};
    pdc::normalize(jsa);
    const double k_svd = analysis::schmidt_decompose(jsa).schmidt_number;
    const double k_ref = oracle::schmidt_number_jacobi(flat, n, n);
    worst = std::max(worst, std::abs(k_svd / k_ref - 1.0));
  }
  r.check(worst < 1e-6, "20 random (sigma+, sigma-) pairs: max relative deviation %.3e (< 1e-6)", worst);
}

// 10. Anyonic design round trip.
void anyonic_design(Report& r) {
  const auto device = device_without_cavity();
  const auto pump = pump_of(pump::gaussian(1.0), 4.0);
  struct Case {
    double phase, alpha;
    const char* name;
  };
  for (const auto& c : {Case{pi / 2, 1.0, "(pi/2, 1)"}, Case{pi, 1.0, "(pi, 1)"}, Case{0.0, 0.0, "(0, 0)"}}) {
    const pump::AnyonicTarget target{c.phase, c.alpha, 1.0};
    const auto profile = pump::design_anyonic_profile(target, device, pump);
    core::PumpSpec designed = pump;
    designed.profile = profile;
    const auto pm = pdc::sample_phase_match(profile, device, designed, Eigen::VectorXd::LinSpaced(801, -4.0, 4.0));
    const double residual = analysis::exchange_residual(pm, c.phase);
    r.check(residual < 1e-3, "%s: exchange residual %.3e (< 1e-3)", c.name, residual);
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 11. Byte-identical outputs across thread counts.
void determinism(Report& r) {
  const std::string yaml =
      "device:\n  cavity_enabled: true\npump:\n  pulse_fwhm_ps: 4\n  profile:\n    kind: phase_step\n"
      "    waist_mm: 1\n    phase_step_rad: pi/2\ngrid:\n  n_points: 384\nsweep:\n  values: [0, pi]\n"
      "visibility_study:\n  perturbations:\n    - {kind: comb_shift, value: 0.015}\n";
  const auto parsed = cli::parse_config(yaml);
  if (!parsed.diagnostics.empty()) throw std::runtime_error("determinism config rejected");
  const fs::path root = fs::temp_directory_path() / "pairshaper_acceptance";
  fs::remove_all(root);
  int compared = 0, differing = 0;
  for (const std::string command : {"jsa", "schmidt", "hom", "wigner", "sweep", "visibility-study"}) {
    std::vector<std::string> files;
    for (int threads : {1, 2, 8}) {
      ThreadCountScope scope(threads);
      files = cli::run_command(parsed.config, command, root / command / std::to_string(threads));
    }
    for (const auto& f : files) {
      const std::string one = slurp(root / command / "1" / f);
      for (const char* t : {"2", "8"}) {
        ++compared;
        if (slurp(root / command / t / f) != one) {
          ++differing;
          r.info("%s/%s differs between 1 and %s threads", command.c_str(), f.c_str(), t);
        }
      }
    }
  }
  fs::remove_all(root);
  r.check(differing == 0, "%d file comparisons across 1, 2 and 8 threads, %d differ", compared, differing);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Report&)> run;
  };
  const std::vector<Criterion> criteria{{1, "exchange-symmetry exactness", exchange_symmetry},
                                        {2, "HOM limits", hom_limits},
                                        {3, "Wigner/HOM consistency", wigner_hom},
                                        {4, "Faddeeva kernel", faddeeva_kernel},
                                        {5, "closed form vs quadrature", closed_form},
                                        {6, "Schmidt calibration and table", schmidt_table},
                                        {7, "Wigner negativity", wigner_negativity},
                                        {8, "visibility budget", visibility_budget},
                                        {9, "double-Gaussian Schmidt oracle", schmidt_oracle},
                                        {10, "anyonic design round trip", anyonic_design},
                                        {11, "determinism", determinism}};
  int failed = 0;
  for (const auto& c : criteria) {
    Report report;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.pass = false;
      report.lines.push_back(std::string("error: ") + e.what());
    }
    std::printf("criterion %2d: %s  %s (%.1f s)\n", c.id, report.pass ? "PASS" : "FAIL", c.title, seconds_since(t0));
    for (const auto& line : report.lines) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    if (!report.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
