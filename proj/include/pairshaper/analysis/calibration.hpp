#pragma once

#include "pairshaper/core/spec.hpp"
#include "pairshaper/pdc/jsa.hpp"

namespace pairshaper::analysis {

/// K on the suggested grid for the given specs (fast purity path).
double schmidt_number_for(const core::DeviceSpec& device, const core::PumpSpec& pump,
                          const pdc::GridOptions& grid = {});

/// Group velocity giving K = target_k for the given pump. Searches the branch
/// below the separable point v_g = sigma_+ / sigma_q, where K grows as v_g
/// drops. Throws NumericalError if the target is not bracketed.
double calibrate_group_velocity(const core::DeviceSpec& device, const core::PumpSpec& pump, double target_k = 1.01,
                                const pdc::GridOptions& grid = {});

}  // namespace pairshaper::analysis
