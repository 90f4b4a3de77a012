#include "exrobin/radial_oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "exrobin/detail/gauss.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"
#include "exrobin/specfun.hpp"

namespace exrobin::oracle {

namespace {

void check_weight(const WeightSpec& w) {
  if (!std::isfinite(w.param) || !std::isfinite(w.scale) || w.scale <= 0.0)
    throw validation_error("weight spec: parameter must be finite, scale positive");
  switch (w.kind) {
    case WeightSpec::Kind::steiner:
      if (w.param < 0.0) throw validation_error("weight spec: steiner coefficient must be >= 0");
      break;
    case WeightSpec::Kind::sinh_shift:
      if (w.param <= 0.0) throw validation_error("weight spec: sinh shift must be > 0");
      break;
    case WeightSpec::Kind::cosh_shift:
      if (w.param < 0.0) throw validation_error("weight spec: cosh shift must be >= 0");
      break;
    case WeightSpec::Kind::exp_shift:
      if (w.param <= 0.0) throw validation_error("weight spec: exp shift must be > 0");
      break;
  }
}

void check_numeric(const NumericParams& num) {
  if (!std::isfinite(num.truncation) || num.truncation < 10.0)
    throw validation_error("numeric params: truncation must be >= 10");
  if (num.grid_points < 100)
    throw validation_error("numeric params: grid must have >= 100 cells");
  if (!std::isfinite(num.grading) || num.grading < 1.0 || num.grading > 1.5)
    throw validation_error("numeric params: grading must lie in [1, 1.5]");
}

// Nodes 0 = t_0 < ... < t_N = T with cell sizes in geometric progression of
// the given ratio. The last node is pinned to T exactly.
std::vector<double> build_grid(double T, int N, double grading) {
  std::vector<double> t(static_cast<std::size_t>(N) + 1);
  t[0] = 0.0;
  if (grading == 1.0) {
    for (int i = 1; i <= N; ++i) t[i] = T * i / N;
  } else {
    const double h0 = T * (grading - 1.0) / (std::pow(grading, N) - 1.0);
    double h = h0;
    for (int i = 1; i <= N; ++i) {
      t[i] = t[i - 1] + h;
      h *= grading;
    }
  }
  t[N] = T;
  return t;
}

// Symmetric tridiagonal pencil (A, M): piecewise-linear elements, two-point
// Gauss per cell (exact for the linear-in-t part of the hyperbolic weights to
// discretization order). A carries the form including the boundary term.
struct Pencil {
  std::vector<double> a_diag, a_off;
  std::vector<double> m_diag, m_off;
  int n_dofs;
};

Pencil assemble(const WeightSpec& w, double alpha, const NumericParams& num) {
  const std::vector<double> t = build_grid(num.truncation, num.grid_points, num.grading);
  const int N = num.grid_points;
  Pencil p;
  p.a_diag.assign(static_cast<std::size_t>(N) + 1, 0.0);
  p.a_off.assign(static_cast<std::size_t>(N), 0.0);
  p.m_diag.assign(static_cast<std::size_t>(N) + 1, 0.0);
  p.m_off.assign(static_cast<std::size_t>(N), 0.0);

  const detail::GaussRule& rule = detail::gauss_legendre(2);
  for (int i = 0; i < N; ++i) {
    const double h = t[i + 1] - t[i];
    const double mid = 0.5 * (t[i] + t[i + 1]);
    double w0 = 0.0;   // int w
    double w1 = 0.0;   // int w * lin_i
    double w2 = 0.0;   // int w * lin_i^2
    for (std::size_t g = 0; g < rule.node.size(); ++g) {
      const double x = mid + 0.5 * h * rule.node[g];
      const double wq = 0.5 * h * rule.weight[g] * w.value(x);
      const double li = (t[i + 1] - x) / h;  // hat of node i on this cell
      w0 += wq;
      w1 += wq * li;
      w2 += wq * li * li;
    }
    // Stiffness: gradients are +-1/h, so each entry is int w / h^2 with sign.
    const double k = w0 / (h * h);
    p.a_diag[i] += k;
    p.a_diag[i + 1] += k;
    p.a_off[i] -= k;
    // Mass: lin_{i+1} = 1 - lin_i on the cell.
    p.m_diag[i] += w2;
    p.m_diag[i + 1] += w0 - 2.0 * w1 + w2;
    p.m_off[i] += w1 - w2;
  }
  p.a_diag[0] += alpha * w.boundary_weight();
  p.n_dofs = (num.far_bc == FarBC::dirichlet) ? N : N + 1;
  return p;
}

// Number of eigenvalues of the pencil below `shift`: negative-pivot count of
// the LDL^T factorization of A - shift * M (Sturm sequence). An exactly zero
// pivot is nudged to -0 side so hitting an eigenvalue counts it as crossed.
int count_below(const Pencil& p, double shift) {
  int count = 0;
  double d_prev = 0.0;
  for (int i = 0; i < p.n_dofs; ++i) {
    double d = p.a_diag[i] - shift * p.m_diag[i];
    if (i > 0) {
      const double e = p.a_off[i - 1] - shift * p.m_off[i - 1];
      d -= e * e / d_prev;
    }
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0.0) ++count;
    d_prev = d;
  }
  return count;
}

double smallest_eigenvalue(const Pencil& p) {
  // Bracket the smallest eigenvalue: expand down until none lies below lo,
  // up until at least one lies below hi.
  double lo = -1.0;
  int expansions = 0;
  while (count_below(p, lo) > 0) {
    lo *= 2.0;
    if (++expansions > 60)
      throw solver_error("min_rayleigh: lower bracket expansion exhausted", lo, 0.0);
  }
  double hi = 1.0;
  expansions = 0;
  while (count_below(p, hi) < 1) {
    hi *= 2.0;
    if (++expansions > 60)
      throw solver_error("min_rayleigh: upper bracket expansion exhausted", lo, hi);
  }
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-14 * std::fmax(1.0, std::fabs(mid))) return mid;
    if (count_below(p, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  throw solver_error("min_rayleigh: bisection failed to close the bracket", lo, hi);
}

}  // namespace

WeightSpec WeightSpec::steiner(double c) { return {Kind::steiner, c, 1.0}; }
WeightSpec WeightSpec::sinh_shift(double b) { return {Kind::sinh_shift, b, 1.0}; }
WeightSpec WeightSpec::cosh_shift(double b) { return {Kind::cosh_shift, b, 1.0}; }
WeightSpec WeightSpec::exp_shift(double b) { return {Kind::exp_shift, b, 1.0}; }

WeightSpec WeightSpec::scaled(WeightSpec base, double scale) {
  base.scale *= scale;
  return base;
}

double WeightSpec::coefficient() const {
  check_weight(*this);
  switch (kind) {
    case Kind::steiner:
      return param;
    case Kind::sinh_shift:
      return 1.0 / std::tanh(param);
    case Kind::cosh_shift:
      return std::tanh(param);
    case Kind::exp_shift:
      return 1.0;
  }
  return param;  // unreachable
}

double WeightSpec::value(double t) const {
  return scale * (coefficient() * std::sinh(t) + std::cosh(t));
}

double WeightSpec::boundary_weight() const { return scale; }

double min_rayleigh(const RadialProblem& problem) {
  check_weight(problem.weight);
  check_numeric(problem.num);
  if (!std::isfinite(problem.alpha))
    throw validation_error("radial problem: alpha must be finite");
  const Pencil p = assemble(problem.weight, problem.alpha, problem.num);
  return smallest_eigenvalue(p);
}

double poincare_threshold(PoincareKind kind, double b) {
  switch (kind) {
    case PoincareKind::sinh:
      if (!(b > 0.0)) throw std::domain_error("poincare threshold: sinh family needs b > 0");
      return 0.5 * (1.0 / b - 1.0 / std::tanh(b));
    case PoincareKind::cosh:
      if (!(b >= 0.0)) throw std::domain_error("poincare threshold: cosh family needs b >= 0");
      return -0.5 * std::tanh(b);
    case PoincareKind::exp:
      if (!(b > 0.0)) throw std::domain_error("poincare threshold: exp family needs b > 0");
      return -0.5;
  }
  throw std::domain_error("poincare threshold: unknown family");
}

double poincare_min(PoincareKind kind, double b, double alpha, const NumericParams& num) {
  WeightSpec w;
  switch (kind) {
    case PoincareKind::sinh:
      w = WeightSpec::sinh_shift(b);
      break;
    case PoincareKind::cosh:
      w = WeightSpec::cosh_shift(b);
      break;
    case PoincareKind::exp:
      w = WeightSpec::exp_shift(b);
      break;
  }
  return min_rayleigh({w, alpha, num});
}

bool detects_discrete(double min_value) { return min_value < 0.25 - 1e-6; }

QuotientCoefficients groundstate_coefficients(double nu, double R, double alpha,
                                              double truncation) {
  if (!std::isfinite(nu) || nu <= -0.5)
    throw std::domain_error("groundstate coefficients: degree must exceed -1/2");
  if (!std::isfinite(R) || R <= 0.0)
    throw std::domain_error("groundstate coefficients: radius must be positive");
  if (!std::isfinite(alpha))
    throw std::domain_error("groundstate coefficients: alpha must be finite");
  if (!std::isfinite(truncation) || truncation < 10.0)
    throw std::domain_error("groundstate coefficients: truncation must be >= 10");

  // Panel quadrature over [0, T]: geometrically growing panels resolve the
  // boundary layer near 0; 10-point Gauss per panel. The profile decays like
  // exp(-(nu + 1/2) t) against weights growing like exp(t)/2, so the
  // neglected remainder beyond T is exponentially small for nu > -1/2.
  const detail::GaussRule& rule = detail::gauss_legendre(10);
  QuotientCoefficients q{0.0, 0.0, 0.0, 0.0};
  double left = 0.0;
  double h = 0.02;
  while (left < truncation) {
    const double right = std::fmin(left + h, truncation);
    const double mid = 0.5 * (left + right);
    const double half = 0.5 * (right - left);
    for (std::size_t g = 0; g < rule.node.size(); ++g) {
      const double t = mid + half * rule.node[g];
      const double wq = half * rule.weight[g];
      const double x = std::cosh(t + R);
      const specfun::Pair p = specfun::legendre_q_pair(nu, x);
      const double phi = p.q_nu;
      const double dq = (nu + 1.0) * (x * p.q_nu - p.q_nu_plus_1) / (1.0 - x * x);
      const double dphi = std::sinh(t + R) * dq;
      q.a += wq * dphi * dphi * std::sinh(t);
      q.b += wq * dphi * dphi * std::cosh(t);
      q.c += wq * phi * phi * std::sinh(t);
      q.d += wq * phi * phi * std::cosh(t);
    }
    left = right;
    h *= 1.3;
  }
  const double phi0 = specfun::legendre_q(nu, std::cosh(R));
  q.b += alpha * phi0 * phi0;
  return q;
}

double quotient_at(const QuotientCoefficients& q, double s) {
  if (!std::isfinite(s) || s < 0.0)
    throw std::domain_error("quotient_at: coefficient must be >= 0");
  return (q.a * s + q.b) / (q.c * s + q.d);
}

double groundstate_quotient(double c, double alpha, double nu, double R, double truncation) {
  return quotient_at(groundstate_coefficients(nu, R, alpha, truncation), c);
}

}  // namespace exrobin::oracle
