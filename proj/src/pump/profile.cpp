#include "pairshaper/pump/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairshaper/core/units.hpp"

namespace pairshaper::pump {

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::gaussian: return "gaussian";
    case ProfileKind::phase_step: return "phase_step";
    case ProfileKind::quadratic_phase: return "quadratic_phase";
    case ProfileKind::sampled: return "sampled";
    case ProfileKind::designed: return "designed";
  }
  return "gaussian";
}

ProfileKind profile_kind_from_string(const std::string& name) {
  for (auto k : {ProfileKind::gaussian, ProfileKind::phase_step, ProfileKind::quadratic_phase, ProfileKind::sampled,
                 ProfileKind::designed}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown profile kind '" + name + "'");
}

namespace {

bool is_parametric(ProfileKind kind) {
  return kind == ProfileKind::gaussian || kind == ProfileKind::phase_step || kind == ProfileKind::quadratic_phase;
}

}  // namespace

std::vector<std::string> PumpProfile::validate() const {
  std::vector<std::string> out;
  if (!std::isfinite(center_offset_mm)) out.push_back("center_offset_mm must be finite");
  if (is_parametric(kind)) {
    if (!(waist_mm > 0.0) || !std::isfinite(waist_mm)) out.push_back("waist_mm must be > 0");
    if (kind == ProfileKind::phase_step && !std::isfinite(phase_step_rad)) {
      out.push_back("phase_step_rad must be finite");
    }
    if (kind == ProfileKind::quadratic_phase) {
      if (curvature_radius_mm == 0.0 || std::isnan(curvature_radius_mm)) {
        out.push_back("curvature_radius_mm must be non-zero");
      }
      if (!(wavelength_nm > 0.0)) out.push_back("wavelength_nm must be > 0");
    }
    return out;
  }
  if (samples.size() < 2) out.push_back("samples needs at least 2 rows");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.z_mm) || !std::isfinite(s.amplitude) || !std::isfinite(s.phase_rad)) {
      out.push_back("samples[" + std::to_string(i) + "] has a non-finite value");
    }
    if (s.amplitude < 0.0) out.push_back("samples[" + std::to_string(i) + "].amplitude is negative");
    if (i > 0 && !(s.z_mm > samples[i - 1].z_mm)) {
      out.push_back("samples[" + std::to_string(i) + "].z_mm is not strictly increasing");
    }
  }
  return out;
}

std::vector<double> PumpProfile::breakpoints() const {
  std::vector<double> out;
  if (kind == ProfileKind::phase_step) out.push_back(center_offset_mm);
  if (kind == ProfileKind::sampled || kind == ProfileKind::designed) {
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.z_mm + center_offset_mm);
  }
  return out;
}

double PumpProfile::max_phase_rate(double half_length_mm) const {
  if (kind == ProfileKind::quadratic_phase) {
    const double lambda_mm = wavelength_nm * core::units::mm_per_nm;
    return 2.0 * core::units::pi * (half_length_mm + std::abs(center_offset_mm)) /
           (lambda_mm * std::abs(curvature_radius_mm));
  }
  if (kind == ProfileKind::sampled || kind == ProfileKind::designed) {
    double rate = 0.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      const double dphi = std::remainder(samples[i].phase_rad - samples[i - 1].phase_rad, 2.0 * core::units::pi);
      rate = std::max(rate, std::abs(dphi) / (samples[i].z_mm - samples[i - 1].z_mm));
    }
    return rate;
  }
  return 0.0;
}

PumpProfile gaussian(double waist_mm, double center_offset_mm) {
  PumpProfile p;
  p.kind = ProfileKind::gaussian;
  p.waist_mm = waist_mm;
  p.center_offset_mm = center_offset_mm;
  return p;
}

PumpProfile phase_step(double waist_mm, double delta_phi, double center_offset_mm) {
  PumpProfile p = gaussian(waist_mm, center_offset_mm);
  p.kind = ProfileKind::phase_step;
  p.phase_step_rad = delta_phi;
  return p;
}

PumpProfile quadratic_phase(double waist_mm, double curvature_radius_mm, double wavelength_nm,
                            double center_offset_mm) {
  PumpProfile p = gaussian(waist_mm, center_offset_mm);
  p.kind = ProfileKind::quadratic_phase;
  p.curvature_radius_mm = curvature_radius_mm;
  p.wavelength_nm = wavelength_nm;
  return p;
}

std::complex<double> evaluate_profile(const PumpProfile& profile, double z_mm) {
  const double u = z_mm - profile.center_offset_mm;
  switch (profile.kind) {
    case ProfileKind::gaussian:
      return std::exp(-u * u / (profile.waist_mm * profile.waist_mm));
    case ProfileKind::phase_step: {
      const double env = std::exp(-u * u / (profile.waist_mm * profile.waist_mm));
      return u > 0.0 ? std::polar(env, profile.phase_step_rad) : std::complex<double>(env, 0.0);
    }
    case ProfileKind::quadratic_phase: {
      const double env = std::exp(-u * u / (profile.waist_mm * profile.waist_mm));
      const double lambda_mm = profile.wavelength_nm * core::units::mm_per_nm;
      return std::polar(env, core::units::pi * u * u / (lambda_mm * profile.curvature_radius_mm));
    }
    case ProfileKind::sampled:
    case ProfileKind::designed: {
      const auto& s = profile.samples;
      if (s.size() < 2 || u < s.front().z_mm || u > s.back().z_mm) return 0.0;
      auto hi = std::upper_bound(s.begin(), s.end(), u, [](double v, const ProfileSample& p) { return v < p.z_mm; });
      if (hi == s.end()) --hi;
      const auto lo = hi - 1;
      const double t = (u - lo->z_mm) / (hi->z_mm - lo->z_mm);
      return (1.0 - t) * std::polar(lo->amplitude, lo->phase_rad) + t * std::polar(hi->amplitude, hi->phase_rad);
    }
  }
  return 0.0;
}

}  // namespace pairshaper::pump
