#include "exrobin/disk_solver.hpp"

#include <cmath>
#include <string>

#include "exrobin/detail/brent.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"
#include "exrobin/specfun.hpp"

namespace exrobin::disk {

namespace {

void check_radius(double R) {
  if (!std::isfinite(R) || R < min_radius)
    throw std::domain_error("disk solver: radius must be finite and >= " +
                            format::format_double(min_radius, 3));
}

constexpr double kNuTol = 1e-13;          // bracket width target for the degree
constexpr int kMaxBracketDoublings = 64;  // geometric expansion budget

}  // namespace

double alpha_of_nu(double nu, double R) {
  check_radius(R);
  if (!std::isfinite(nu) || nu < nu_floor)
    throw std::domain_error("alpha_of_nu: degree below the square-integrability floor -1/2");
  const double ch = std::cosh(R);
  const double sh = std::sinh(R);
  const specfun::Pair p = specfun::legendre_q_pair(nu, ch);
  return (nu + 1.0) * (p.q_nu_plus_1 / p.q_nu - ch) / sh;
}

double alpha_star_disk(double R) { return alpha_of_nu(nu_floor, R); }

double alpha_star_upper_bound(double R) {
  check_radius(R);
  return 0.5 * (std::exp(-R) - 1.0 / std::tanh(R));
}

double nu_from_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda > essential_bottom)
    throw std::domain_error("nu_from_lambda: eigenvalue must be <= 1/4");
  return 0.5 * (-1.0 + std::sqrt(1.0 - 4.0 * lambda));
}

SpectralResult lambda1_disk(double alpha, double R) {
  check_radius(R);
  if (!std::isfinite(alpha)) throw std::domain_error("lambda1_disk: alpha must be finite");

  const double astar = alpha_star_disk(R);
  if (alpha >= astar - tie_tolerance)
    return {essential_bottom, std::nullopt, SpectralKind::essential_bottom, 0.0};

  // alpha_of_nu is strictly decreasing, so f(nu) = alpha_of_nu(nu) - alpha
  // crosses zero once. Start just above the floor (where f > 0 since
  // alpha < alpha_star) and expand the right endpoint geometrically.
  const auto f = [&](double nu) { return alpha_of_nu(nu, R) - alpha; };
  double lo = nu_floor + 1e-9;
  double flo = f(lo);
  if (flo <= 0.0) {
    // alpha sits between alpha_star and the map's value a hair above the
    // floor; the eigenvalue is within ~1e-18 of the essential bottom.
    return {essential_bottom, std::nullopt, SpectralKind::essential_bottom, std::fabs(flo)};
  }
  double hi = 1.0;
  double fhi = f(hi);
  int doublings = 0;
  while (fhi > 0.0) {
    if (++doublings > kMaxBracketDoublings)
      throw solver_error("lambda1_disk: degree bracket expansion exhausted", lo, hi);
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = f(hi);
  }

  const double nu = detail::brent(f, lo, hi, flo, fhi, kNuTol);
  const double residual = std::fabs(alpha_of_nu(nu, R) - alpha);
  const double budget = 1e-10 * std::fmax(1.0, std::fabs(alpha));
  if (residual > budget)
    throw solver_error("lambda1_disk: root residual " + format::format_double(residual, 3) +
                           " exceeds budget " + format::format_double(budget, 3),
                       lo, hi);
  return {-nu * (nu + 1.0), nu, SpectralKind::discrete_eigenvalue, residual};
}

}  // namespace exrobin::disk
