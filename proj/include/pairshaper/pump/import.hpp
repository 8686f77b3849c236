#pragma once

#include <istream>
#include <string>
#include <vector>

#include "pairshaper/pump/profile.hpp"

namespace pairshaper::pump {

struct IntensityRow {
  double z_mm = 0.0;
  double intensity = 0.0;
  double phase_rad = 0.0;
};

/// Builds a sampled profile with amplitude sqrt(intensity) scaled to peak 1.
/// The phase is taken as carrier-free. Throws FormatError for fewer than two
/// rows, non-increasing z, negative or all-zero intensity.
PumpProfile import_sampled_profile(const std::vector<IntensityRow>& rows);

/// Reads "z_mm,intensity,phase_rad" rows. A non-numeric first line is treated
/// as a header; blank lines and lines starting with '#' are skipped.
/// Throws FormatError naming the offending line.
std::vector<IntensityRow> read_profile_csv(std::istream& in);
std::vector<IntensityRow> read_profile_csv_file(const std::string& path);

}  // namespace pairshaper::pump
