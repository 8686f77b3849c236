#include "pairshaper/pump/import.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pairshaper/core/errors.hpp"

namespace pairshaper::pump {

PumpProfile import_sampled_profile(const std::vector<IntensityRow>& rows) {
  if (rows.size() < 2) throw FormatError("sampled profile needs at least 2 rows");
  double peak = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!std::isfinite(r.z_mm) || !std::isfinite(r.intensity) || !std::isfinite(r.phase_rad)) {
      throw FormatError("sampled profile row " + std::to_string(i) + ": non-finite value");
    }
    if (r.intensity < 0.0) throw FormatError("sampled profile row " + std::to_string(i) + ": negative intensity");
    if (i > 0 && !(r.z_mm > rows[i - 1].z_mm)) {
      throw FormatError("sampled profile row " + std::to_string(i) + ": z is not strictly increasing");
    }
    peak = std::max(peak, r.intensity);
  }
  if (!(peak > 0.0)) throw FormatError("sampled profile has zero intensity everywhere");

  PumpProfile profile;
  profile.kind = ProfileKind::sampled;
  profile.samples.reserve(rows.size());
  const double scale = 1.0 / std::sqrt(peak);
  for (const auto& r : rows) profile.samples.push_back({r.z_mm, std::sqrt(r.intensity) * scale, r.phase_rad});
  return profile;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

}  // namespace

std::vector<IntensityRow> read_profile_csv(std::istream& in) {
  std::vector<IntensityRow> rows;
  std::string line;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    double v[3];
    bool numeric = cells.size() == 3;
    for (std::size_t k = 0; numeric && k < 3; ++k) numeric = parse_double(cells[k], v[k]);
    if (!numeric) {
      if (first_content) {
        first_content = false;
        continue;
      }
      throw FormatError("profile csv line " + std::to_string(line_no) + ": expected three numeric columns");
    }
    first_content = false;
    rows.push_back({v[0], v[1], v[2]});
  }
  return rows;
}

std::vector<IntensityRow> read_profile_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open profile csv '" + path + "'");
  try {
    return read_profile_csv(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace pairshaper::pump
