#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairshaper/analysis/hom.hpp"
#include "pairshaper/core/grid.hpp"
#include "pairshaper/core/spec.hpp"
#include "pairshaper/pdc/jsa.hpp"

namespace pairshaper::analysis {

enum class PerturbationKind { none, degeneracy_offset, comb_shift, centering_offset, sampled_profile };

std::string to_string(PerturbationKind kind);
PerturbationKind perturbation_kind_from_string(const std::string& name);

/// One change applied on top of the baseline configuration.
///  - degeneracy_offset: signal - idler central wavelength offset, nm (sets the incidence angle)
///  - comb_shift: added to device.comb_shift_nm, nm
///  - centering_offset: added to the pump profile's center offset, mm
///  - sampled_profile: replaces the pump profile
struct Perturbation {
  PerturbationKind kind = PerturbationKind::none;
  double value = 0.0;
  pump::PumpProfile profile;
  std::string label;
};

struct VisibilityRow {
  std::string label;
  PerturbationKind kind = PerturbationKind::none;
  double value = 0.0;
  double visibility = 0.0;
  /// |V_baseline| - |V|, in percentage points.
  double delta_points = 0.0;
};

struct VisibilityStudyOptions {
  /// Shared by every configuration; suggested from the baseline when unset.
  std::optional<core::FrequencyGrid> grid;
  int n_delays = 401;
  double window_factor = 5.0;
  ExchangeConvention convention = ExchangeConvention::boson;
};

/// Applies a perturbation to copies of the specs.
void apply_perturbation(const Perturbation& p, core::DeviceSpec& device, core::PumpSpec& pump);

/// Visibility with N_0 taken at the extremum of |P - N_inf|, so a dip or
/// peak displaced from tau = 0 by an imperfection is still measured.
double extremal_visibility(const HomTrace& trace);

/// Forward-simulates the baseline and every perturbed configuration on one grid
/// and delay window. The first row is the baseline.
std::vector<VisibilityRow> visibility_study(const core::DeviceSpec& device, const core::PumpSpec& pump,
                                            const std::vector<Perturbation>& perturbations,
                                            const VisibilityStudyOptions& options = {});

}  // namespace pairshaper::analysis
