#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pairshaper/core/errors.hpp"
#include "pairshaper/core/spec.hpp"
#include "pairshaper/pdc/phase_matching.hpp"
#include "pairshaper/pump/design.hpp"
#include "pairshaper/pump/import.hpp"
#include "pairshaper/pump/profile.hpp"

using namespace pairshaper;
using cplx = std::complex<double>;

TEST_CASE("parametric profile values") {
  CHECK(std::abs(pump::evaluate_profile(pump::gaussian(1.0), 0.0) - 1.0) < 1e-15);
  const auto step = pump::phase_step(0.7, M_PI);
  for (double a : {0.1, 0.4, 1.3}) {
    const cplx left = pump::evaluate_profile(step, -a);
    const cplx right = pump::evaluate_profile(step, a);
    CHECK(std::abs(right + left) < 1e-15);
  }
  const auto quad = pump::quadratic_phase(0.6, 100.0);
  for (double a : {0.2, 0.9}) {
    CHECK(std::abs(pump::evaluate_profile(quad, a) - pump::evaluate_profile(quad, -a)) < 1e-15);
    const double expect = M_PI * a * a / (773e-6 * 100.0);
    CHECK(std::remainder(std::arg(pump::evaluate_profile(quad, a)) - expect, 2 * M_PI) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("parametric profiles are even without step or offset") {
  for (const auto& p : {pump::gaussian(0.4), pump::phase_step(0.4, 0.0), pump::quadratic_phase(0.4, -50.0)}) {
    for (double z = 0.05; z < 1.0; z += 0.1) {
      CHECK(std::abs(pump::evaluate_profile(p, z) - pump::evaluate_profile(p, -z)) < 1e-15);
    }
  }
}

TEST_CASE("zero phase step equals the Gaussian pointwise") {
  const auto g = pump::gaussian(0.8, 0.1);
  const auto s = pump::phase_step(0.8, 0.0, 0.1);
  for (double z = -1.0; z <= 1.0; z += 0.037) CHECK(pump::evaluate_profile(g, z) == pump::evaluate_profile(s, z));
}

TEST_CASE("centering offset shifts the envelope") {
  const auto p = pump::gaussian(0.5, 0.2);
  CHECK(std::abs(pump::evaluate_profile(p, 0.2) - 1.0) < 1e-15);
  CHECK(std::abs(pump::evaluate_profile(p, 0.5)) == doctest::Approx(std::abs(pump::evaluate_profile(p, -0.1))));
}

TEST_CASE("profile validation") {
  CHECK(pump::gaussian(1.0).validate().empty());
  CHECK_FALSE(pump::gaussian(0.0).validate().empty());
  pump::PumpProfile s;
  s.kind = pump::ProfileKind::sampled;
  s.samples = {{0.0, 1.0, 0.0}, {0.0, 1.0, 0.0}};
  CHECK_FALSE(s.validate().empty());
  s.samples = {{0.0, 1.0, 0.0}, {0.1, -1.0, 0.0}};
  CHECK_FALSE(s.validate().empty());
  CHECK(pump::profile_kind_from_string("phase_step") == pump::ProfileKind::phase_step);
  CHECK_THROWS_AS(pump::profile_kind_from_string("tophat"), std::invalid_argument);
}

TEST_CASE("sampled import") {
  SUBCASE("two equal rows give a flat unit amplitude") {
    const auto p = pump::import_sampled_profile({{-1.0, 4.0, 0.0}, {1.0, 4.0, 0.0}});
    for (double z : {-1.0, -0.3, 0.0, 0.8, 1.0}) CHECK(std::abs(pump::evaluate_profile(p, z) - 1.0) < 1e-15);
    CHECK(pump::evaluate_profile(p, 1.01) == cplx(0.0));
    CHECK(pump::evaluate_profile(p, -1.01) == cplx(0.0));
  }
  SUBCASE("degenerate input is a format error") {
    CHECK_THROWS_AS(pump::import_sampled_profile({{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}), FormatError);
    CHECK_THROWS_AS(pump::import_sampled_profile({{0.0, 1.0, 0.0}, {-1.0, 1.0, 0.0}}), FormatError);
    CHECK_THROWS_AS(pump::import_sampled_profile({{0.0, 1.0, 0.0}, {1.0, -1.0, 0.0}}), FormatError);
    CHECK_THROWS_AS(pump::import_sampled_profile({{0.0, 1.0, 0.0}}), FormatError);
  }
  SUBCASE("Gaussian intensity samples reproduce the parametric profile") {
    std::vector<pump::IntensityRow> rows;
    const double w = 0.6;
    for (int k = 0; k < 512; ++k) {
      const double z = -1.0 + 2.0 * k / 511.0;
      rows.push_back({z, 9.0 * std::exp(-2.0 * z * z / (w * w)), 0.0});
    }
    const auto p = pump::import_sampled_profile(rows);
    const auto g = pump::gaussian(w);
    double worst = 0.0;
    for (double z = -0.999; z < 1.0; z += 0.0013) {
      worst = std::max(worst, std::abs(pump::evaluate_profile(p, z) - pump::evaluate_profile(g, z)));
    }
    CHECK(worst < 1e-3);
  }
}

TEST_CASE("profile csv reader") {
  std::istringstream good("z_mm,intensity,phase_rad\n# comment\n-1,0.5,0\n\n0,1,0.1\n1,0.5,0.2\n");
  const auto rows = pump::read_profile_csv(good);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].phase_rad == 0.1);

  std::istringstream headless("0,1,0\n1,1,0\n");
  CHECK(pump::read_profile_csv(headless).size() == 2);

  std::istringstream bad("z,i,p\n0,1,0\n1,x,0\n");
  try {
    pump::read_profile_csv(bad);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(pump::read_profile_csv_file("/nonexistent/profile.csv"), FormatError);
}

TEST_CASE("anyonic target shape") {
  const pump::AnyonicTarget t{M_PI / 2, 1.0, 1.0};
  CHECK(pump::anyonic_target(t, 0.0) == cplx(0.0));
  CHECK(std::abs(pump::anyonic_target(t, -0.5) - cplx(0, 1) * pump::anyonic_target(t, 0.5)) < 1e-15);
  CHECK_THROWS_AS(pump::anyonic_target({0.0, 2.5, 1.0}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(pump::anyonic_target({0.0, 1.0, 0.0}, 0.1), std::invalid_argument);
}

namespace {

// Least-squares scale between forward phase matching and the target, then the normalized L2 error.
double shape_error(const pump::PumpProfile& profile, const pump::AnyonicTarget& target, const core::DeviceSpec& device,
                   const core::PumpSpec& pump_spec) {
  const Eigen::VectorXd om = Eigen::VectorXd::LinSpaced(401, -4.0, 4.0);
  const auto pm = pdc::sample_phase_match(profile, device, pump_spec, om);
  Eigen::VectorXcd want(om.size());
  for (Eigen::Index k = 0; k < om.size(); ++k) want[k] = pump::anyonic_target(target, om[k]);
  const cplx scale = want.dot(pm.values) / pm.values.squaredNorm();
  return (scale * pm.values - want).norm() / want.norm();
}

}  // namespace

TEST_CASE("anyonic design round trip") {
  core::DeviceSpec device;
  core::PumpSpec pump_spec;
  SUBCASE("delta_phi = 0, alpha = 0 is a Gaussian") {
    const pump::AnyonicTarget t{0.0, 0.0, 1.0};
    const auto p = pump::design_anyonic_profile(t, device, pump_spec);
    CHECK(p.kind == pump::ProfileKind::designed);
    // exp(-w^2 / beta) pairs with exp(-beta z^2 / (4 v_g^2)).
    const double w = 2.0 * device.group_velocity / std::sqrt(t.beta);
    for (double z : {0.0, 0.1, 0.2, 0.3}) {
      CHECK(std::abs(pump::evaluate_profile(p, z)) == doctest::Approx(std::exp(-z * z / (w * w))).epsilon(1e-4));
      CHECK(std::abs(pump::evaluate_profile(p, z) - pump::evaluate_profile(p, -z)) < 1e-6);
    }
    CHECK(shape_error(p, t, device, pump_spec) < 1e-2);
  }
  SUBCASE("delta_phi = pi, alpha = 1 is odd") {
    const pump::AnyonicTarget t{M_PI, 1.0, 1.0};
    const auto p = pump::design_anyonic_profile(t, device, pump_spec);
    for (double z : {0.05, 0.15, 0.3}) {
      CHECK(std::abs(pump::evaluate_profile(p, z) + pump::evaluate_profile(p, -z)) < 1e-6);
    }
    CHECK(shape_error(p, t, device, pump_spec) < 1e-2);
  }
  SUBCASE("anyonic shape error is set by truncation at the waveguide ends") {
    // The kink of |omega| at 0 gives 1/z^2 tails that the facets cut off.
    const pump::AnyonicTarget t{M_PI / 2, 1.0, 1.0};
    double previous = 1.0;
    for (double length : {2.0, 4.0, 8.0}) {
      core::DeviceSpec d = device;
      d.length_mm = length;
      const double err = shape_error(pump::design_anyonic_profile(t, d, pump_spec), t, d, pump_spec);
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 1e-2);
  }
  SUBCASE("a target wider than the waveguide allows is infeasible") {
    const pump::AnyonicTarget t{0.0, 0.0, 1e-3};
    CHECK_THROWS_AS(pump::design_anyonic_profile(t, device, pump_spec), DesignInfeasible);
  }
}
