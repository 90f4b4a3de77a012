#include "exrobin/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exrobin/detail/gauss.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"

namespace exrobin::specfun {

namespace {

// Substituting u = e^{-t} turns the representation into a finite integral
//
//   Q_nu(x) = 2^(nu+1) * integral_0^1 u^nu (s u^2 + 2 x u + s)^(-(nu+1)) du,
//   s = sqrt(x^2 - 1),
//
// whose integrand behaves like u^nu near u = 0. Panels halve geometrically
// from 1 down to kUFloor so each panel sees a smooth integrand. Below kUFloor
// the denominator equals s up to a relative O(u) term, so the remainder is
// analytically eps^(nu+1) / ((nu+1) s^(nu+1)) with relative error <= 2x*eps/s;
// it is added to the value (it matters as nu approaches -1) and only that
// residual enters the error estimate.
constexpr double kUFloor = 1e-33;

// Unscaled panel sums for exponents nu (base) and nu+1 (next). The second
// integrand is the first times u / (s u^2 + 2 x u + s), so both come from the
// same evaluation points.
struct PairSums {
  double base = 0.0;
  double next = 0.0;
};

PairSums integrate_panels(double nu, double x, double s, int order) {
  const detail::GaussRule& rule = detail::gauss_legendre(order);
  PairSums sums;
  double hi = 1.0;
  while (hi > kUFloor) {
    const double lo = 0.5 * hi;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      const double u = mid + half * rule.node[i];
      const double den = (s * u + 2.0 * x) * u + s;
      const double f = std::pow(u, nu) * std::pow(den, -(nu + 1.0));
      const double w = half * rule.weight[i];
      sums.base += w * f;
      sums.next += w * f * (u / den);
    }
    hi = lo;
  }
  return sums;
}

void check_domain(double nu, double x) {
  if (!std::isfinite(nu) || !std::isfinite(x))
    throw std::domain_error("legendre_q: arguments must be finite");
  if (nu <= -1.0)
    throw std::domain_error("legendre_q: degree must exceed -1 (integral diverges otherwise)");
  if (x <= 1.0) throw std::domain_error("legendre_q: argument must exceed 1");
  if (x - 1.0 <= min_argument_gap)
    throw accuracy_error(
        "legendre_q: argument within " + format::format_double(min_argument_gap, 3) +
            " of the logarithmic singularity at 1; accuracy target not certifiable",
        std::numeric_limits<double>::infinity());
}

struct PairEvaluation {
  Pair pair;
  double err_base;
  double err_next;
};

PairEvaluation evaluate_pair(double nu, double x, Tolerance tol) {
  check_domain(nu, x);
  const double s = std::sqrt((x - 1.0) * (x + 1.0));
  const double scale_base = std::pow(2.0, nu + 1.0);
  const double scale_next = 2.0 * scale_base;
  // The panel sweep halves from 1 and overshoots kUFloor; the tail must start
  // at the exact bottom edge (a power of two) or the overlap double-counts.
  double bottom = 1.0;
  while (bottom > kUFloor) bottom *= 0.5;
  // Closed-form tails below the last panel, in scaled units, plus the bound
  // on what replacing the denominator by s discards.
  const double tail_base = scale_base * std::pow(bottom / s, nu + 1.0) / (nu + 1.0);
  const double tail_next = scale_next * std::pow(bottom / s, nu + 2.0) / (nu + 2.0);
  const double tail_err = (tail_base + tail_next) * (2.0 * x / s) * bottom;

  PairSums prev = integrate_panels(nu, x, s, 8);
  double err_base = std::numeric_limits<double>::infinity();
  double err_next = err_base;
  for (int order : {16, 32, 64}) {
    const PairSums cur = integrate_panels(nu, x, s, order);
    const double vb = scale_base * cur.base + tail_base;
    const double vn = scale_next * cur.next + tail_next;
    err_base = scale_base * std::fabs(cur.base - prev.base) + tail_err;
    err_next = scale_next * std::fabs(cur.next - prev.next) + tail_err;
    const double target_b = tol.absolute + tol.relative * std::fabs(vb);
    const double target_n = tol.absolute + tol.relative * std::fabs(vn);
    if (err_base <= target_b && err_next <= target_n) {
      if (!(vb > 0.0) || !(vn > 0.0))
        throw accuracy_error("legendre_q: value underflowed to zero", err_base);
      return {{vb, vn}, err_base, err_next};
    }
    prev = cur;
  }
  throw accuracy_error("legendre_q: quadrature refinement stalled above the accuracy target",
                       std::max(err_base, err_next));
}

}  // namespace

Evaluation legendre_q_ev(double nu, double x, Tolerance tol) {
  const PairEvaluation ev = evaluate_pair(nu, x, tol);
  return {ev.pair.q_nu, ev.err_base};
}

double legendre_q(double nu, double x) { return legendre_q_ev(nu, x).value; }

Pair legendre_q_pair(double nu, double x, Tolerance tol) {
  return evaluate_pair(nu, x, tol).pair;
}

double legendre_q_ratio(double nu, double x) {
  const Pair p = legendre_q_pair(nu, x);
  return p.q_nu_plus_1 / p.q_nu;
}

double legendre_q_deriv(double nu, double x) {
  const Pair p = legendre_q_pair(nu, x);
  return (nu + 1.0) * (x * p.q_nu - p.q_nu_plus_1) / (1.0 - x * x);
}

}  // namespace exrobin::specfun
