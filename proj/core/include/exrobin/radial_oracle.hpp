#pragma once

namespace exrobin::oracle {

// Discretized one-dimensional variational oracle for quadratic forms
//
//   Q[y] = integral_0^T |y'|^2 w(t) dt + alpha * w(0) * |y(0)|^2,
//   N[y] = integral_0^T |y|^2  w(t) dt,
//
// with weight w(t) = scale * (c * sinh t + cosh t). It is built from first
// principles (piecewise-linear elements, exact-order Gauss quadrature, Sturm
// bisection on the pencil) precisely so it shares no code path with the
// closed-form disk solver it cross-checks.

enum class FarBC {
  dirichlet,  // clamp y(T) = 0: certified upper bound on the continuum infimum
  neumann     // free endpoint: no one-sided guarantee (see min_rayleigh notes)
};

struct NumericParams {
  double truncation = 40.0;  // T, >= 10
  int grid_points = 8000;    // N cells, >= 100
  double grading = 1.001;    // cell-size ratio, in [1, 1.5]; 1 = uniform
  FarBC far_bc = FarBC::dirichlet;
};

// Weight family. Every member is, after normalizing w(0) to `scale`, of the
// shifted-hyperbolic form scale * (c sinh t + cosh t) with c = coefficient():
//   sinh_shift(b): sinh(t + b)/sinh(b)      -> c = coth b   (b > 0)
//   cosh_shift(b): cosh(t + b)/cosh(b)      -> c = tanh b   (b >= 0)
//   exp_shift(b):  exp(t + b)/exp(b)        -> c = 1        (b > 0)
//   steiner(c):    c sinh t + cosh t        -> c            (c >= 0)
// sinh_shift(R) is the exterior-disk radial weight sinh(R + t), scaled by
// 1/sinh(R); the minimized quotient is scale-invariant.
struct WeightSpec {
  enum class Kind { steiner, sinh_shift, cosh_shift, exp_shift };

  Kind kind = Kind::steiner;
  double param = 1.0;
  double scale = 1.0;

  static WeightSpec steiner(double c);
  static WeightSpec sinh_shift(double b);
  static WeightSpec cosh_shift(double b);
  static WeightSpec exp_shift(double b);
  static WeightSpec scaled(WeightSpec base, double scale);

  double coefficient() const;          // c above
  double value(double t) const;        // w(t)
  double boundary_weight() const;      // w(0) = scale
};

struct RadialProblem {
  WeightSpec weight;
  double alpha = 0.0;
  NumericParams num;
};

// Minimum of Q[y]/N[y] over the discrete space. With Dirichlet far boundary
// this is a certified upper bound for the continuum infimum; truncation
// inflates it by O(exp(-T)) when a discrete eigenvalue exists and by O(1/T^2)
// when the infimum is the essential bottom 1/4. The Neumann variant admits
// near-constant trial functions whose quotient tends to 0- for negative
// alpha, so for problems whose true minimum lies in (0, 1/4) it can return
// ~0 regardless of T; it is exposed for sensitivity studies only.
double min_rayleigh(const RadialProblem& problem);

// Weighted Poincare families: the infimum of the quotient with alpha at the
// threshold value below equals the essential bottom 1/4 (no discrete
// eigenvalue emerges at threshold).
enum class PoincareKind { sinh, cosh, exp };

// sinh: (1/b - coth b)/2   (b > 0)
// cosh: -tanh(b)/2         (b >= 0)
// exp:  -1/2               (any b; the weight family is b-independent)
double poincare_threshold(PoincareKind kind, double b);

// min_rayleigh for the matching weight at boundary parameter alpha.
double poincare_min(PoincareKind kind, double b, double alpha,
                    const NumericParams& num = {});

// A discrete minimum has emerged when the value clears the essential bottom
// by more than discretization noise.
bool detects_discrete(double min_value);

// Coefficients of the Moebius function s -> (a s + b)/(c s + d) obtained by
// plugging the exterior-disk ground-state profile phi(t) = Q_nu(cosh(t + R))
// into the quotient with weight s sinh t + cosh t:
//   a = int |phi'|^2 sinh t,  b = int |phi'|^2 cosh t + alpha |phi(0)|^2,
//   c = int |phi|^2  sinh t,  d = int |phi|^2  cosh t    (all over [0, T]).
// The quotient is nondecreasing in s iff a d >= b c; at s = coth R it equals
// the disk eigenvalue because coth R sinh t + cosh t = sinh(R + t)/sinh R.
struct QuotientCoefficients {
  double a, b, c, d;
};

QuotientCoefficients groundstate_coefficients(double nu, double R, double alpha,
                                              double truncation = 40.0);
double quotient_at(const QuotientCoefficients& q, double s);
double groundstate_quotient(double c, double alpha, double nu, double R,
                            double truncation = 40.0);

}  // namespace exrobin::oracle
