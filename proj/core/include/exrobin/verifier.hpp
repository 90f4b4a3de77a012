#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exrobin/geometry.hpp"
#include "exrobin/radial_oracle.hpp"

namespace exrobin::verify {

// Desk-scale verification of the comparison statements: each check evaluates
// an inequality chain on a small input grid and reports every sampled point.
//
// Outcome convention: margin = rhs - lhs. Unless the point label says
// otherwise, pass means margin >= -tolerance ("lhs <= rhs within tolerance");
// equality checks put |difference| in lhs and 0 in rhs so the same rule
// applies; strict checks state their required positive margin in the label.

// Tolerance for any comparison with a discretized-oracle value on one side.
inline constexpr double oracle_tolerance = 5e-4;
// Tolerance for comparisons between closed-form quantities only.
inline constexpr double closed_form_tolerance = 1e-10;

struct Outcome {
  std::string point;  // human-readable description of the sampled input
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;
};

struct VerificationReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed grid
  double tolerance = 0.0;  // headline tolerance; labels note any other rule
  std::vector<Outcome> outcomes;
  bool pass = false;       // conjunction of all outcomes
  double worst_margin = 0.0;
};

// Closed-form eigenvalues along strictly increasing radii: strictly
// decreasing (margin > 1e-6) while discrete, nonincreasing across a kind
// change, constant once essential. Also checks alpha_star is nondecreasing
// along the same radii.
VerificationReport verify_radius_monotonicity(double alpha, const std::vector<double>& radii);

// The comparison chain for a domain spec at one boundary parameter:
//   min_rayleigh(steiner(c), alpha) <= quotient(c) <= quotient(coth R) = lambda1(B_R)
// with c the averaged curvature, at sampled radii R with coth R >= c (the
// matching radius and one below it when c > 1, a fixed triple otherwise).
// A gate outcome first confirms the two solvers agree on lambda1(B_R).
VerificationReport verify_main_theorem(const geometry::DomainSpec& spec, double alpha,
                                       const oracle::NumericParams& num = {});

// Disk comparisons through the isoperimetric radii: the domain's variational
// upper bound sits below lambda1 of the same-perimeter disk, which sits below
// lambda1 of the same-area disk; one-sided evidence for the critical-parameter
// ordering is reported alongside.
VerificationReport verify_corollaries(const geometry::DomainSpec& spec, double alpha,
                                      const oracle::NumericParams& num = {});

// alpha_star is negative, below the elementary upper bound, nondecreasing in
// R, and the spectral kind flips across it (alpha_star +- 0.01).
VerificationReport verify_alpha_star_bounds(const std::vector<double>& radii);

// With alpha >= alpha_star(R) the truncated minima stay above the essential
// bottom 1/4, decrease as the truncation grows, and the final gap is within
// tolerance of 0 (the infimum is not attained; the gap decays like 1/T^2).
VerificationReport verify_essential_bottom(double alpha, double R,
                                           const std::vector<double>& truncations,
                                           const oracle::NumericParams& num = {});

enum class Suite {
  monotonicity,
  main_theorem,
  corollaries,
  alpha_star_bounds,
  essential_bottom,
  all,
};

// Fixed default grids per suite (the ones the acceptance checks use).
std::vector<VerificationReport> run_suite(Suite suite, const oracle::NumericParams& num = {});

}  // namespace exrobin::verify
