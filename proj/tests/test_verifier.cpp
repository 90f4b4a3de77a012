#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "exrobin/errors.hpp"
#include "exrobin/geometry.hpp"
#include "exrobin/verifier.hpp"

using namespace exrobin;

namespace {

// Structural invariants every report must satisfy.
void check_shape(const verify::VerificationReport& report) {
  CHECK_FALSE(report.check_name.empty());
  CHECK_FALSE(report.inputs.empty());
  REQUIRE_FALSE(report.outcomes.empty());
  bool all = true;
  double worst = report.outcomes.front().margin;
  for (const auto& o : report.outcomes) {
    CHECK_FALSE(o.point.empty());
    CHECK(o.margin == doctest::Approx(o.rhs - o.lhs).epsilon(1e-12));
    all = all && o.pass;
    worst = std::fmin(worst, o.margin);
  }
  CHECK(report.pass == all);
  CHECK(report.worst_margin == doctest::Approx(worst));
}

}  // namespace

TEST_CASE("radius monotonicity check passes on a discrete grid") {
  const auto report = verify::verify_radius_monotonicity(-2.0, {0.5, 1.0, 2.0, 4.0});
  check_shape(report);
  CHECK(report.pass);
  // 3 adjacent eigenvalue comparisons + 3 critical-parameter comparisons.
  CHECK(report.outcomes.size() == 6);
  CHECK(report.worst_margin > 1e-6);
}

TEST_CASE("radius monotonicity handles the kind change honestly") {
  // alpha = -0.55: essential at small radii, discrete once the critical
  // parameter has climbed past it.
  const auto report = verify::verify_radius_monotonicity(-0.55, {0.5, 2.0, 4.0});
  check_shape(report);
  CHECK(report.pass);
  bool saw_kind_change = false;
  for (const auto& o : report.outcomes)
    if (o.point.find("kind change") != std::string::npos) saw_kind_change = true;
  CHECK(saw_kind_change);
}

TEST_CASE("monotonicity validation") {
  CHECK_THROWS_AS(verify::verify_radius_monotonicity(-2.0, {}), validation_error);
  CHECK_THROWS_AS(verify::verify_radius_monotonicity(-2.0, {1.0}), validation_error);
  CHECK_THROWS_AS(verify::verify_radius_monotonicity(-2.0, {1.0, 0.5}), validation_error);
  CHECK_THROWS_AS(verify::verify_radius_monotonicity(-2.0, {1.0, 1.0}), validation_error);
}

TEST_CASE("main theorem chain on a disk collapses to near equalities") {
  const auto report = verify::verify_main_theorem(geometry::disk_geometry(1.0), -2.0);
  check_shape(report);
  CHECK(report.pass);
  CHECK(report.tolerance == verify::oracle_tolerance);
  // Matching radius exists (curvature > 1): two sampled radii, four outcomes
  // each (gate + three links).
  CHECK(report.outcomes.size() == 8);
  // At the matching radius the chain is equality up to discretization.
  for (const auto& o : report.outcomes)
    if (o.point.find("matches disk eigenvalue") != std::string::npos)
      CHECK(std::fabs(o.lhs) < 1e-6);
}

TEST_CASE("main theorem chain for a low-curvature domain") {
  // avg curvature < 1: no matching radius; fixed radii {0.5, 1, 2} sampled.
  const auto report = verify::verify_main_theorem({10.0, 3.0}, -1.0);
  check_shape(report);
  CHECK(report.pass);
  CHECK(report.outcomes.size() == 12);
}

TEST_CASE("main theorem skips links when no discrete eigenvalue exists") {
  // alpha = -0.3 > alpha_star everywhere: nothing to compare against.
  const auto report = verify::verify_main_theorem({10.0, 3.0}, -0.3);
  check_shape(report);
  CHECK(report.pass);
  bool saw_skip = false;
  for (const auto& o : report.outcomes)
    if (o.point.find("skipped") != std::string::npos) saw_skip = true;
  CHECK(saw_skip);
}

TEST_CASE("main theorem validation") {
  CHECK_THROWS_AS(verify::verify_main_theorem({1.0, 100.0}, -2.0), validation_error);
  CHECK_THROWS_AS(verify::verify_main_theorem({10.0, 3.0}, std::nan("")), validation_error);
}

TEST_CASE("corollaries hold through the isoperimetric radii") {
  for (double alpha : {-2.0, -1.0}) {
    const auto report = verify::verify_corollaries({20.0, 10.0}, alpha);
    check_shape(report);
    CHECK(report.pass);
    CHECK(report.outcomes.size() == 3);
  }
}

TEST_CASE("alpha star bounds on radii where the elementary bound holds") {
  const auto report = verify::verify_alpha_star_bounds({1.0, 2.0, 5.0});
  check_shape(report);
  CHECK(report.pass);
  // 4 outcomes per radius + 2 adjacency outcomes.
  CHECK(report.outcomes.size() == 14);
}

TEST_CASE("alpha star bounds reports the small-radius failure honestly") {
  // At R = 0.25 the critical parameter lies below the elementary bound's
  // small-radius dive; the check must fail rather than hide it.
  const auto report = verify::verify_alpha_star_bounds({0.25, 1.0});
  check_shape(report);
  CHECK_FALSE(report.pass);
  int failed = 0;
  for (const auto& o : report.outcomes)
    if (!o.pass) {
      ++failed;
      CHECK(o.point.find("exp(-R)") != std::string::npos);
      CHECK(o.point.find("0.25") != std::string::npos);
    }
  CHECK(failed == 1);
}

TEST_CASE("essential bottom approach") {
  const auto report = verify::verify_essential_bottom(0.0, 1.0, {20.0, 40.0});
  check_shape(report);
  // Minima above 1/4 and decreasing: those outcomes pass; the final-gap
  // outcome is tolerance-dependent and reported as computed.
  for (const auto& o : report.outcomes) {
    if (o.point.find("above essential bottom") != std::string::npos) CHECK(o.pass);
    if (o.point.find("nonincreasing") != std::string::npos) CHECK(o.pass);
  }
  CHECK(report.tolerance == 1e-3);
}

TEST_CASE("essential bottom validation") {
  // alpha far below the critical parameter: a discrete eigenvalue exists, so
  // the premise of the check is violated.
  CHECK_THROWS_AS(verify::verify_essential_bottom(-5.0, 1.0, {20.0, 40.0}), validation_error);
  CHECK_THROWS_AS(verify::verify_essential_bottom(0.0, 1.0, {}), validation_error);
  CHECK_THROWS_AS(verify::verify_essential_bottom(0.0, 1.0, {40.0, 20.0}), validation_error);
}

TEST_CASE("suites assemble the expected reports") {
  const auto mono = verify::run_suite(verify::Suite::monotonicity);
  CHECK(mono.size() == 1);
  CHECK(mono.front().check_name == "radius-monotonicity");
  const auto bounds = verify::run_suite(verify::Suite::alpha_star_bounds);
  CHECK(bounds.size() == 1);
  CHECK(bounds.front().check_name == "alpha-star-bounds");
}
