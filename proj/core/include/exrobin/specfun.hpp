#pragma once

namespace exrobin::specfun {

// Legendre functions of the second kind Q_nu (order zero) on the real ray
// x > 1, for real degree nu > -1, via the integral representation
//
//   Q_nu(x) = integral_0^inf (x + sqrt(x^2 - 1) cosh t)^(-(nu+1)) dt.
//
// The representation's conventional prefactor pi^(1/2) / Gamma(1/2) equals 1;
// values here are normalized with prefactor exactly 1. All results are
// strictly positive and strictly decreasing in both nu and x.

struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-10;
};

struct Evaluation {
  double value;
  double error_estimate;  // quadrature refinement difference plus tail bound
};

// Q_nu and Q_{nu+1} from a single quadrature pass over shared nodes. This is
// the workhorse: ratios and derivatives want both values at once, and the
// shared pass keeps their rounding errors correlated.
struct Pair {
  double q_nu;
  double q_nu_plus_1;
};

// Arguments with x - 1 <= min_argument_gap are refused (accuracy_error):
// that close to the logarithmic singularity at x = 1 the quadrature cannot
// certify its default target.
inline constexpr double min_argument_gap = 1e-8;

Evaluation legendre_q_ev(double nu, double x, Tolerance tol = {});
double legendre_q(double nu, double x);
Pair legendre_q_pair(double nu, double x, Tolerance tol = {});

// Q_{nu+1}(x) / Q_nu(x). Lies in (0, 1/(x + sqrt(x^2 - 1))), tending to the
// upper bound as nu -> inf and to 1 (slowly) as x -> 1+.
double legendre_q_ratio(double nu, double x);

// dQ_nu/dx = (nu + 1) [x Q_nu(x) - Q_{nu+1}(x)] / (1 - x^2).
// Strictly negative for x > 1.
double legendre_q_deriv(double nu, double x);

}  // namespace exrobin::specfun
