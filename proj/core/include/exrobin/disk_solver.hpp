#pragma once

#include <optional>

namespace exrobin::disk {

// Lowest spectral point of the Robin Laplacian on the exterior of a geodesic
// disk of radius R in the hyperbolic plane, with boundary parameter alpha
// (outward-normal derivative convention: d_n u = alpha * u on the boundary).
//
// The essential spectrum starts at 1/4 independently of R and alpha. A
// discrete eigenvalue below 1/4 exists exactly when alpha < alpha_star(R),
// and is radial: the eigenfunction is y(x) = Q_nu(cosh x) with degree
// nu > -1/2 determined by the boundary condition, giving
// lambda = -nu(nu+1) < 1/4.

// Radii below this are rejected; the boundary map is well defined but its
// 1/sinh(R) factor amplifies quadrature noise without limit as R -> 0.
inline constexpr double min_radius = 1e-3;

// Square-integrability floor for the radial profile degree.
inline constexpr double nu_floor = -0.5;

// Bottom of the essential spectrum.
inline constexpr double essential_bottom = 0.25;

// Parameters within this distance of alpha_star(R) classify as the essential
// bottom: the discrete eigenvalue (if any) is within ~1e-24 of 1/4 there,
// below double resolution of the spectral gap.
inline constexpr double tie_tolerance = 1e-12;

enum class SpectralKind { discrete_eigenvalue, essential_bottom };

struct SpectralResult {
  double lambda;
  std::optional<double> nu;  // set only for discrete eigenvalues
  SpectralKind kind;
  double residual;  // |alpha(nu) - alpha| at the returned degree, 0 otherwise
};

// Boundary map of the radial profile: matching y'(R) = alpha * y(R) for
// y(x) = Q_nu(cosh x) and applying the derivative recurrence for Q gives
//
//   alpha(nu, R) = (nu + 1) * (Q_{nu+1}(cosh R) / Q_nu(cosh R) - cosh R) / sinh R.
//
// Strictly decreasing in nu on [nu_floor, inf); always < 0. Requires
// nu >= nu_floor (the boundary value is the critical-parameter evaluation
// point) and R >= min_radius.
double alpha_of_nu(double nu, double R);

// Critical boundary parameter alpha_star(R) = alpha_of_nu(nu_floor, R):
// a discrete eigenvalue below 1/4 exists iff alpha < alpha_star(R).
// Negative, strictly increasing in R, tending to -1/2 as R -> inf.
double alpha_star_disk(double R);

// Elementary upper bound (exp(-R) - coth R) / 2 for alpha_star. Holds for
// moderate and large radii; at small radii alpha_star itself drops below it.
double alpha_star_upper_bound(double R);

// Degree from eigenvalue: nu = (-1 + sqrt(1 - 4 lambda)) / 2, the root of
// -nu(nu+1) = lambda with nu >= nu_floor. Requires lambda <= 1/4.
double nu_from_lambda(double lambda);

// Lowest spectral point. Root-finds alpha_of_nu(., R) = alpha when
// alpha < alpha_star(R) - tie_tolerance, otherwise returns the essential
// bottom. Discrete results satisfy residual <= 1e-10 * max(1, |alpha|).
SpectralResult lambda1_disk(double alpha, double R);

}  // namespace exrobin::disk
