#include "pairshaper/analysis/study.hpp"

#include <cmath>
#include <stdexcept>

namespace pairshaper::analysis {

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::none: return "none";
    case PerturbationKind::degeneracy_offset: return "degeneracy_offset";
    case PerturbationKind::comb_shift: return "comb_shift";
    case PerturbationKind::centering_offset: return "centering_offset";
    case PerturbationKind::sampled_profile: return "sampled_profile";
  }
  return "none";
}

PerturbationKind perturbation_kind_from_string(const std::string& name) {
  for (auto k : {PerturbationKind::none, PerturbationKind::degeneracy_offset, PerturbationKind::comb_shift,
                 PerturbationKind::centering_offset, PerturbationKind::sampled_profile}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown perturbation kind '" + name + "'");
}

void apply_perturbation(const Perturbation& p, core::DeviceSpec& device, core::PumpSpec& pump) {
  switch (p.kind) {
    case PerturbationKind::none:
      break;
    case PerturbationKind::degeneracy_offset:
      pump.incidence_angle_rad = core::wavelength_offset_to_angle(device, pump, p.value);
      break;
    case PerturbationKind::comb_shift:
      device.comb_shift_nm += p.value;
      break;
    case PerturbationKind::centering_offset:
      pump.profile.center_offset_mm += p.value;
      break;
    case PerturbationKind::sampled_profile:
      pump.profile = p.profile;
      pump.profile.wavelength_nm = pump.wavelength_nm;
      break;
  }
}

double extremal_visibility(const HomTrace& trace) {
  const double inf = plateau(trace.delays, trace.probability);
  Eigen::Index at = 0;
  (trace.probability.array() - inf).abs().maxCoeff(&at);
  return visibility(inf, trace.probability[at]);
}

std::vector<VisibilityRow> visibility_study(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                            const std::vector<Perturbation>& perturbations,
                                            const VisibilityStudyOptions& options) {
  const core::FrequencyGrid grid = options.grid ? *options.grid : pdc::suggest_grid(device, pump);
  const pdc::JointAmplitude base = pdc::assemble_jsa(device, pump, grid);
  const Eigen::VectorXd delays = default_delays(base, options.n_delays, options.window_factor);
  const double v_base = extremal_visibility(hom_trace(base, delays, options.convention));

  std::vector<VisibilityRow> rows;
  rows.push_back({"baseline", PerturbationKind::none, 0.0, v_base, 0.0});
  for (const auto& p : perturbations) {
    core::DeviceSpec d = device;
    core::PumpSpec q = pump;
    apply_perturbation(p, d, q);
    const double v = p.kind == PerturbationKind::none
                         ? v_base
                         : extremal_visibility(hom_trace(pdc::assemble_jsa(d, q, grid), delays, options.convention));
    const std::string label = p.label.empty() ? to_string(p.kind) : p.label;
    rows.push_back({label, p.kind, p.value, v, 100.0 * (std::abs(v_base) - std::abs(v))});
  }
  return rows;
}

}  // namespace pairshaper::analysis
