#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "exrobin/disk_solver.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/radial_oracle.hpp"

using namespace exrobin;

namespace {
bool close_rel(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::fmax(1.0, std::fabs(want));
}
}  // namespace

TEST_CASE("every weight family reduces to the shifted-hyperbolic form") {
  CHECK(close_rel(oracle::WeightSpec::sinh_shift(1.0).coefficient(), 1.3130352854993313, 1e-14));
  CHECK(close_rel(oracle::WeightSpec::cosh_shift(1.0).coefficient(), std::tanh(1.0), 1e-14));
  CHECK(oracle::WeightSpec::exp_shift(0.7).coefficient() == 1.0);
  CHECK(oracle::WeightSpec::steiner(0.4).coefficient() == 0.4);
  // cosh_shift(0) is the pure cosh weight.
  CHECK(oracle::WeightSpec::cosh_shift(0.0).coefficient() == 0.0);

  // Normalized identities: w(t) * normalizer = the unnormalized family value.
  const oracle::WeightSpec s = oracle::WeightSpec::sinh_shift(1.5);
  for (double t : {0.0, 0.3, 2.0})
    CHECK(close_rel(s.value(t) * std::sinh(1.5), std::sinh(1.5 + t), 1e-13));
  const oracle::WeightSpec c = oracle::WeightSpec::cosh_shift(0.8);
  for (double t : {0.0, 0.3, 2.0})
    CHECK(close_rel(c.value(t) * std::cosh(0.8), std::cosh(0.8 + t), 1e-13));
  const oracle::WeightSpec e = oracle::WeightSpec::exp_shift(2.0);
  for (double t : {0.0, 0.3, 2.0}) CHECK(close_rel(e.value(t), std::exp(t), 1e-13));
  // Boundary weight is the scale; default families are normalized to w(0)=1.
  CHECK(s.boundary_weight() == 1.0);
  CHECK(oracle::WeightSpec::scaled(s, 4.0).boundary_weight() == 4.0);
  CHECK(close_rel(oracle::WeightSpec::scaled(s, 4.0).value(0.3), 4.0 * s.value(0.3), 1e-14));
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(oracle::WeightSpec::sinh_shift(0.0).coefficient(), validation_error);
  CHECK_THROWS_AS(oracle::WeightSpec::steiner(-0.1).coefficient(), validation_error);
  CHECK_THROWS_AS(oracle::WeightSpec::cosh_shift(-0.1).coefficient(), validation_error);
  CHECK_THROWS_AS(oracle::WeightSpec::exp_shift(-1.0).coefficient(), validation_error);
  CHECK_THROWS_AS(
      oracle::min_rayleigh({oracle::WeightSpec::scaled(oracle::WeightSpec::steiner(1.0), -2.0),
                            -1.0,
                            {}}),
      validation_error);
}

TEST_CASE("numeric parameter validation") {
  oracle::NumericParams num;
  num.truncation = 5.0;
  CHECK_THROWS_AS(oracle::min_rayleigh({oracle::WeightSpec::steiner(1.0), -1.0, num}),
                  validation_error);
  num = {};
  num.grid_points = 50;
  CHECK_THROWS_AS(oracle::min_rayleigh({oracle::WeightSpec::steiner(1.0), -1.0, num}),
                  validation_error);
  num = {};
  num.grading = 1.7;
  CHECK_THROWS_AS(oracle::min_rayleigh({oracle::WeightSpec::steiner(1.0), -1.0, num}),
                  validation_error);
  num = {};
  num.grading = 0.9;
  CHECK_THROWS_AS(oracle::min_rayleigh({oracle::WeightSpec::steiner(1.0), -1.0, num}),
                  validation_error);
  CHECK_THROWS_AS(
      oracle::min_rayleigh({oracle::WeightSpec::steiner(1.0), std::nan(""), {}}),
      validation_error);
}

TEST_CASE("oracle agrees with the closed-form solver") {
  const disk::SpectralResult closed = disk::lambda1_disk(-2.0, 1.0);
  const double fe = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(1.0), -2.0, {}});
  CHECK(std::fabs(fe - closed.lambda) <= 1e-4 * std::fmax(1.0, std::fabs(closed.lambda)));
  // The discrete minimum over a conforming subspace can only overestimate.
  CHECK(fe >= closed.lambda - 1e-12);
}

TEST_CASE("minimized quotient is invariant under weight scaling") {
  const double base = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(1.0), -2.0, {}});
  // Power-of-two scaling is exact in floating point: every assembled entry,
  // pivot, and bisection step scales identically, so the result is bitwise
  // equal.
  const double halved = oracle::min_rayleigh(
      {oracle::WeightSpec::scaled(oracle::WeightSpec::sinh_shift(1.0), 0.5), -2.0, {}});
  CHECK(halved == base);
  // A generic scale rounds each entry once; with weights spanning e^T of
  // dynamic range the pivot sequence shifts the converged minimum by ~1e-9,
  // far below the oracle's discretization error but well above machine eps.
  const double scaled = oracle::min_rayleigh(
      {oracle::WeightSpec::scaled(oracle::WeightSpec::sinh_shift(1.0), 7.25), -2.0, {}});
  CHECK(close_rel(scaled, base, 1e-7));
}

TEST_CASE("uniform-grid refinement converges at second order") {
  const double lambda = disk::lambda1_disk(-2.0, 1.0).lambda;
  double errs[3];
  int i = 0;
  for (int n : {500, 1000, 2000}) {
    oracle::NumericParams num;
    num.grid_points = n;
    num.grading = 1.0;
    errs[i++] =
        std::fabs(oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(1.0), -2.0, num}) - lambda);
  }
  const double order1 = std::log2(errs[0] / errs[1]);
  const double order2 = std::log2(errs[1] / errs[2]);
  CHECK(order1 > 1.7);
  CHECK(order1 < 2.3);
  CHECK(order2 > 1.7);
  CHECK(order2 < 2.3);
}

TEST_CASE("neumann far boundary: agreement below zero, degeneracy above") {
  // True eigenvalue below 0: the free endpoint changes nothing measurable.
  oracle::NumericParams neumann;
  neumann.far_bc = oracle::FarBC::neumann;
  const double vn2 = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(2.0), -2.0, neumann});
  const double vd2 = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(2.0), -2.0, {}});
  CHECK(close_rel(vn2, vd2, 1e-8));
  // True eigenvalue in (0, 1/4): a near-constant trial function drags the
  // Neumann minimum to ~0 regardless of truncation -- the documented reason
  // this mode carries no one-sided guarantee.
  const double truth = disk::lambda1_disk(-1.0, 2.0).lambda;  // 0.0122...
  const double vn1 = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(2.0), -1.0, neumann});
  CHECK(std::fabs(vn1) < 1e-6);
  CHECK(vn1 < truth - 0.01);
}

TEST_CASE("poincare thresholds match their closed forms") {
  CHECK(close_rel(oracle::poincare_threshold(oracle::PoincareKind::sinh, 1.0),
                  -0.15651764274966565, 1e-13));
  CHECK(close_rel(oracle::poincare_threshold(oracle::PoincareKind::cosh, 1.0),
                  -0.38079707797788244, 1e-13));
  CHECK(oracle::poincare_threshold(oracle::PoincareKind::cosh, 0.0) == 0.0);
  CHECK(oracle::poincare_threshold(oracle::PoincareKind::exp, 1.0) == -0.5);
  CHECK(oracle::poincare_threshold(oracle::PoincareKind::exp, 9.0) == -0.5);
  for (double b : {0.5, 1.0, 2.0})
    CHECK(close_rel(oracle::poincare_threshold(oracle::PoincareKind::sinh, b),
                    0.5 * (1.0 / b - 1.0 / std::tanh(b)), 1e-13));
  CHECK_THROWS_AS(oracle::poincare_threshold(oracle::PoincareKind::sinh, 0.0), std::domain_error);
  CHECK_THROWS_AS(oracle::poincare_threshold(oracle::PoincareKind::cosh, -1.0), std::domain_error);
  CHECK_THROWS_AS(oracle::poincare_threshold(oracle::PoincareKind::exp, 0.0), std::domain_error);
}

TEST_CASE("no discrete minimum emerges at the poincare thresholds") {
  const double thr = oracle::poincare_threshold(oracle::PoincareKind::sinh, 1.0);
  const double v = oracle::poincare_min(oracle::PoincareKind::sinh, 1.0, thr, {});
  CHECK(close_rel(v, 0.255451129174, 1e-8));  // frozen at default numerics
  CHECK(v >= 0.25);
  CHECK_FALSE(oracle::detects_discrete(v));
  // Far enough below the emergence point a discrete minimum does appear.
  const double deep = oracle::poincare_min(oracle::PoincareKind::sinh, 1.0, -1.0, {});
  CHECK(oracle::detects_discrete(deep));
  CHECK(close_rel(deep, 0.088962718740, 1e-3));
}

TEST_CASE("groundstate quotient closes the loop with the disk solver") {
  const disk::SpectralResult res = disk::lambda1_disk(-2.0, 1.0);
  REQUIRE(res.nu.has_value());
  // At s = coth R the synthetic weight is the exterior-disk weight, so the
  // quotient of the true profile is the eigenvalue itself.
  const double g = oracle::groundstate_quotient(1.0 / std::tanh(1.0), -2.0, *res.nu, 1.0);
  CHECK(close_rel(g, res.lambda, 1e-9));
}

TEST_CASE("groundstate quotient is a monotone Moebius function of the coefficient") {
  const disk::SpectralResult res = disk::lambda1_disk(-2.0, 0.5);
  REQUIRE(res.nu.has_value());
  const oracle::QuotientCoefficients q = oracle::groundstate_coefficients(*res.nu, 0.5, -2.0);
  CHECK(q.a > 0.0);
  CHECK(q.c > 0.0);
  CHECK(q.d > 0.0);
  // Monotone nondecreasing in s exactly when a d >= b c.
  CHECK(q.a * q.d > q.b * q.c);
  double prev = oracle::quotient_at(q, 0.0);
  for (double s : {0.5, 1.0, 2.0, 1.0 / std::tanh(0.5)}) {
    const double cur = oracle::quotient_at(q, s);
    CHECK(cur >= prev);
    prev = cur;
  }
  // Consistency of the two entry points.
  CHECK(oracle::quotient_at(q, 1.0) ==
        doctest::Approx(oracle::groundstate_quotient(1.0, -2.0, *res.nu, 0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(oracle::quotient_at(q, -0.5), std::domain_error);
}

TEST_CASE("groundstate coefficient preconditions") {
  CHECK_THROWS_AS(oracle::groundstate_coefficients(-0.5, 1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(oracle::groundstate_coefficients(0.5, -1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(oracle::groundstate_coefficients(0.5, 1.0, -1.0, 5.0), std::domain_error);
}

TEST_CASE("truncated minima decrease with T and stay above the essential bottom") {
  double prev = 1e9;
  for (double T : {20.0, 40.0}) {
    oracle::NumericParams num;
    num.truncation = T;
    const double v = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(1.0), 0.0, num});
    CHECK(v >= 0.25);
    CHECK(v < prev);
    prev = v;
  }
}
