#include "exrobin/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "exrobin/disk_solver.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"

namespace exrobin::verify {

namespace {

std::string fmt(double v) { return format::format_double(v, 12); }

std::string fmt_list(const std::vector<double>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += fmt(vs[i]);
  }
  return out;
}

Outcome make_outcome(std::string point, double lhs, double rhs, bool pass) {
  return {std::move(point), lhs, rhs, rhs - lhs, pass};
}

void finalize(VerificationReport& report) {
  report.pass = true;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const Outcome& o : report.outcomes) {
    report.pass = report.pass && o.pass;
    report.worst_margin = std::fmin(report.worst_margin, o.margin);
  }
  if (report.outcomes.empty()) {
    report.pass = false;
    report.worst_margin = 0.0;
  }
}

void check_radii(const std::vector<double>& radii) {
  if (radii.empty()) throw validation_error("verifier: radius grid must be nonempty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || radii[i] < disk::min_radius)
      throw validation_error("verifier: radii must be finite and >= " +
                             fmt(disk::min_radius));
    if (i > 0 && radii[i] <= radii[i - 1])
      throw validation_error("verifier: radius grid must be strictly increasing");
  }
}

// Radii at which a domain with averaged curvature c is compared against
// disks: the matching radius (coth R = c) and half of it when c > 1, a fixed
// small/medium/large triple otherwise (every radius is admissible then).
std::vector<double> sample_radii(double c) {
  if (c > 1.0) {
    const double thr = geometry::arcoth(c);
    return {0.5 * thr, thr};
  }
  return {0.5, 1.0, 2.0};
}

}  // namespace

VerificationReport verify_radius_monotonicity(double alpha, const std::vector<double>& radii) {
  check_radii(radii);
  if (radii.size() < 2)
    throw validation_error("verifier: monotonicity needs at least two radii");
  VerificationReport report;
  report.check_name = "radius-monotonicity";
  report.inputs = {{"alpha", fmt(alpha)}, {"radii", fmt_list(radii)}};
  report.tolerance = 1e-6;  // required strict margin between discrete eigenvalues

  std::vector<disk::SpectralResult> res;
  res.reserve(radii.size());
  for (double R : radii) res.push_back(disk::lambda1_disk(alpha, R));

  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    const auto& a = res[i];
    const auto& b = res[i + 1];
    const std::string pair_label = "R=" + fmt(radii[i]) + " vs R=" + fmt(radii[i + 1]);
    if (a.kind == disk::SpectralKind::discrete_eigenvalue &&
        b.kind == disk::SpectralKind::discrete_eigenvalue) {
      // Strict decrease: margin must exceed the headline tolerance.
      report.outcomes.push_back(make_outcome("lambda strictly decreasing (margin > 1e-6), " + pair_label,
                                             b.lambda, a.lambda, a.lambda - b.lambda > 1e-6));
    } else if (a.kind == disk::SpectralKind::essential_bottom &&
               b.kind == disk::SpectralKind::essential_bottom) {
      report.outcomes.push_back(make_outcome("lambda constant at essential bottom, " + pair_label,
                                             b.lambda, a.lambda, a.lambda == b.lambda));
    } else {
      report.outcomes.push_back(make_outcome("lambda nonincreasing across kind change, " + pair_label,
                                             b.lambda, a.lambda, b.lambda <= a.lambda));
    }
  }
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    const double lo = disk::alpha_star_disk(radii[i]);
    const double hi = disk::alpha_star_disk(radii[i + 1]);
    report.outcomes.push_back(
        make_outcome("alpha_star nondecreasing, R=" + fmt(radii[i]) + " vs R=" + fmt(radii[i + 1]),
                     lo, hi, lo <= hi + 1e-12));
  }
  finalize(report);
  return report;
}

VerificationReport verify_main_theorem(const geometry::DomainSpec& spec, double alpha,
                                       const oracle::NumericParams& num) {
  const geometry::ValidationResult v = geometry::validate_domain_spec(spec);
  if (!v.ok) throw validation_error(v.message);
  if (!std::isfinite(alpha)) throw validation_error("verifier: alpha must be finite");

  const double c = geometry::avg_curvature(spec);
  const std::vector<double> radii = sample_radii(c);

  VerificationReport report;
  report.check_name = "main-theorem-chain";
  report.inputs = {{"perimeter", fmt(spec.perimeter)},
                   {"area", fmt(spec.area)},
                   {"alpha", fmt(alpha)},
                   {"avg_curvature", fmt(c)},
                   {"radii", fmt_list(radii)}};
  report.tolerance = oracle_tolerance;

  // Variational upper bound for the domain: the shifted-hyperbolic problem
  // with the domain's averaged curvature.
  const double ub = oracle::min_rayleigh({oracle::WeightSpec::steiner(c), alpha, num});

  for (double R : radii) {
    const disk::SpectralResult disk_res = disk::lambda1_disk(alpha, R);
    const double fe = oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(R), alpha, num});

    if (disk_res.kind != disk::SpectralKind::discrete_eigenvalue) {
      // Gate in the essential regime: the truncated oracle can only be
      // checked one-sidedly (it sits above the essential bottom).
      report.outcomes.push_back(make_outcome(
          "gate: oracle above essential bottom at R=" + fmt(R), 0.25, fe, fe >= 0.25 - oracle_tolerance));
      report.outcomes.push_back(make_outcome(
          "links skipped at R=" + fmt(R) + ": no discrete comparison eigenvalue", 0.0, 0.0, true));
      continue;
    }

    // Gate: the two solvers must agree before any chain link is trusted.
    const double gate_scale = std::fmax(1.0, std::fabs(disk_res.lambda));
    const double gate_diff = std::fabs(disk_res.lambda - fe) / gate_scale;
    report.outcomes.push_back(make_outcome(
        "gate: solver agreement within 1e-4 relative at R=" + fmt(R), gate_diff, 0.0,
        gate_diff <= 1e-4));

    const oracle::QuotientCoefficients q =
        oracle::groundstate_coefficients(*disk_res.nu, R, alpha, num.truncation);
    const double g_c = oracle::quotient_at(q, c);
    const double coth_R = 1.0 / std::tanh(R);
    const double g_cothR = oracle::quotient_at(q, coth_R);

    report.outcomes.push_back(make_outcome("upper bound <= quotient(c) at R=" + fmt(R), ub, g_c,
                                           ub <= g_c + oracle_tolerance));
    report.outcomes.push_back(make_outcome(
        "quotient(c) <= quotient(coth R) at R=" + fmt(R), g_c, g_cothR, g_c <= g_cothR + oracle_tolerance));
    const double closure = std::fabs(g_cothR - disk_res.lambda);
    report.outcomes.push_back(make_outcome(
        "quotient(coth R) matches disk eigenvalue at R=" + fmt(R), closure, 0.0,
        closure <= oracle_tolerance));
  }
  finalize(report);
  return report;
}

VerificationReport verify_corollaries(const geometry::DomainSpec& spec, double alpha,
                                      const oracle::NumericParams& num) {
  const geometry::ValidationResult v = geometry::validate_domain_spec(spec);
  if (!v.ok) throw validation_error(v.message);
  if (!std::isfinite(alpha)) throw validation_error("verifier: alpha must be finite");

  const geometry::ComparisonRadii radii = geometry::comparison_disks(spec);
  const double c = geometry::avg_curvature(spec);

  VerificationReport report;
  report.check_name = "isoperimetric-corollaries";
  report.inputs = {{"perimeter", fmt(spec.perimeter)},
                   {"area", fmt(spec.area)},
                   {"alpha", fmt(alpha)},
                   {"r_area", fmt(radii.r_area)},
                   {"r_perimeter", fmt(radii.r_perimeter)}};
  report.tolerance = oracle_tolerance;

  const double ub = oracle::min_rayleigh({oracle::WeightSpec::steiner(c), alpha, num});
  const disk::SpectralResult perim = disk::lambda1_disk(alpha, radii.r_perimeter);
  const disk::SpectralResult area = disk::lambda1_disk(alpha, radii.r_area);

  report.outcomes.push_back(make_outcome("upper bound <= lambda1(same-perimeter disk)", ub,
                                         perim.lambda, ub <= perim.lambda + oracle_tolerance));
  report.outcomes.push_back(make_outcome(
      "lambda1(same-perimeter disk) <= lambda1(same-area disk) (closed form, tol 1e-10)",
      perim.lambda, area.lambda, perim.lambda <= area.lambda + closed_form_tolerance));
  const double as_area = disk::alpha_star_disk(radii.r_area);
  const double as_perim = disk::alpha_star_disk(radii.r_perimeter);
  report.outcomes.push_back(make_outcome(
      "one-sided evidence: alpha_star(r_area) <= alpha_star(r_perimeter) (tol 1e-10)", as_area,
      as_perim, as_area <= as_perim + closed_form_tolerance));
  finalize(report);
  return report;
}

VerificationReport verify_alpha_star_bounds(const std::vector<double>& radii) {
  check_radii(radii);
  VerificationReport report;
  report.check_name = "alpha-star-bounds";
  report.inputs = {{"radii", fmt_list(radii)}};
  report.tolerance = closed_form_tolerance;

  std::vector<double> stars;
  stars.reserve(radii.size());
  for (double R : radii) stars.push_back(disk::alpha_star_disk(R));

  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double R = radii[i];
    const double star = stars[i];
    report.outcomes.push_back(
        make_outcome("alpha_star < 0 (strict) at R=" + fmt(R), star, 0.0, star < 0.0));
    const double ub = disk::alpha_star_upper_bound(R);
    report.outcomes.push_back(make_outcome("alpha_star <= (exp(-R) - coth R)/2 at R=" + fmt(R),
                                           star, ub, star <= ub + closed_form_tolerance));
    const disk::SpectralResult below = disk::lambda1_disk(star - 0.01, R);
    report.outcomes.push_back(make_outcome(
        "discrete eigenvalue below threshold: alpha_star - 0.01 at R=" + fmt(R), below.lambda,
        0.25,
        below.kind == disk::SpectralKind::discrete_eigenvalue && below.lambda < 0.25));
    const disk::SpectralResult above = disk::lambda1_disk(star + 0.01, R);
    report.outcomes.push_back(make_outcome(
        "essential bottom above threshold: alpha_star + 0.01 at R=" + fmt(R), above.lambda, 0.25,
        above.kind == disk::SpectralKind::essential_bottom && above.lambda == 0.25));
  }
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    report.outcomes.push_back(make_outcome(
        "alpha_star nondecreasing, R=" + fmt(radii[i]) + " vs R=" + fmt(radii[i + 1]), stars[i],
        stars[i + 1], stars[i] <= stars[i + 1] + 1e-12));
  }
  finalize(report);
  return report;
}

VerificationReport verify_essential_bottom(double alpha, double R,
                                           const std::vector<double>& truncations,
                                           const oracle::NumericParams& num) {
  if (!std::isfinite(alpha) || !std::isfinite(R))
    throw validation_error("verifier: alpha and R must be finite");
  if (truncations.empty())
    throw validation_error("verifier: truncation grid must be nonempty");
  for (std::size_t i = 0; i + 1 < truncations.size(); ++i)
    if (truncations[i] >= truncations[i + 1])
      throw validation_error("verifier: truncation grid must be strictly increasing");
  const double astar = disk::alpha_star_disk(R);
  if (alpha < astar - disk::tie_tolerance)
    throw validation_error(
        "verifier: essential-bottom check requires alpha >= alpha_star(R) = " + fmt(astar) +
        "; a discrete eigenvalue exists below it");

  VerificationReport report;
  report.check_name = "essential-bottom-approach";
  report.inputs = {{"alpha", fmt(alpha)},
                   {"R", fmt(R)},
                   {"truncations", fmt_list(truncations)}};
  report.tolerance = 1e-3;  // final truncation gap

  std::vector<double> minima;
  minima.reserve(truncations.size());
  for (double T : truncations) {
    oracle::NumericParams local = num;
    local.truncation = T;
    minima.push_back(oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(R), alpha, local}));
  }
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    report.outcomes.push_back(make_outcome("minimum above essential bottom at T=" + fmt(truncations[i]),
                                           0.25, minima[i], minima[i] >= 0.25));
  }
  for (std::size_t i = 0; i + 1 < truncations.size(); ++i) {
    report.outcomes.push_back(make_outcome(
        "minimum nonincreasing, T=" + fmt(truncations[i]) + " vs T=" + fmt(truncations[i + 1]),
        minima[i + 1], minima[i], minima[i + 1] <= minima[i] + 1e-12));
  }
  const double gap = minima.back() - 0.25;
  report.outcomes.push_back(make_outcome(
      "final truncation gap within 1e-3 at T=" + fmt(truncations.back()), gap, 0.0, gap <= 1e-3));
  finalize(report);
  return report;
}

std::vector<VerificationReport> run_suite(Suite suite, const oracle::NumericParams& num) {
  std::vector<VerificationReport> reports;
  const std::vector<geometry::DomainSpec> specs = {
      geometry::disk_geometry(1.0), {10.0, 3.0}, {20.0, 10.0}};
  const std::vector<double> alphas = {-2.0, -1.0};

  switch (suite) {
    case Suite::monotonicity:
      reports.push_back(verify_radius_monotonicity(-2.0, {0.5, 1.0, 2.0, 4.0}));
      break;
    case Suite::main_theorem:
      for (const auto& spec : specs)
        for (double alpha : alphas) reports.push_back(verify_main_theorem(spec, alpha, num));
      break;
    case Suite::corollaries:
      for (const auto& spec : specs)
        for (double alpha : alphas) reports.push_back(verify_corollaries(spec, alpha, num));
      break;
    case Suite::alpha_star_bounds:
      reports.push_back(verify_alpha_star_bounds({0.25, 0.5, 1.0, 2.0, 5.0, 10.0}));
      break;
    case Suite::essential_bottom:
      reports.push_back(verify_essential_bottom(0.0, 1.0, {20.0, 40.0, 80.0}, num));
      break;
    case Suite::all: {
      for (Suite s : {Suite::monotonicity, Suite::main_theorem, Suite::corollaries,
                      Suite::alpha_star_bounds, Suite::essential_bottom}) {
        std::vector<VerificationReport> part = run_suite(s, num);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      break;
    }
  }
  return reports;
}

}  // namespace exrobin::verify
