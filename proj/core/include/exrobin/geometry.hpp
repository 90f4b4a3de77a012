#pragma once

#include <optional>
#include <string>

namespace exrobin::geometry {

// A bounded geodesically convex domain in the hyperbolic plane of curvature
// -1, reduced to the two scalars the comparison machinery consumes.
struct DomainSpec {
  double perimeter = 0.0;  // L > 0
  double area = 0.0;       // A > 0
};

struct ValidationResult {
  bool ok = false;
  double deficit = 0.0;  // L^2 - A^2 - 4*pi*A, nonnegative for admissible domains
  std::string message;
};

struct ComparisonRadii {
  double r_area;       // disk with the same area
  double r_perimeter;  // disk with the same perimeter; r_area <= r_perimeter
};

// Geodesic disk of radius R: area 2*pi*(cosh R - 1), perimeter 2*pi*sinh R.
DomainSpec disk_geometry(double radius);

// L > 0, A > 0, and the hyperbolic isoperimetric inequality
// L^2 >= A^2 + 4*pi*A, allowing relative_slack * L^2 of rounding slack.
// The deficit is reported either way.
ValidationResult validate_domain_spec(const DomainSpec& spec, double relative_slack = 1e-12);

// Perimeter of the outer parallel set at distance t >= 0:
// cosh(t) * L + sinh(t) * (2*pi + A). At t = 0 this is L.
double parallel_perimeter(const DomainSpec& spec, double t);

// Averaged geodesic curvature of the boundary, (A + 2*pi) / L.
// Equals coth(R) for the disk of radius R and is > 1 in that case.
double avg_curvature(const DomainSpec& spec);

// The radius R solving coth(R) = avg_curvature(spec), when the average
// curvature exceeds 1. Empty otherwise: coth never drops to 1, and every
// radius then satisfies coth(R) >= avg_curvature(spec).
std::optional<double> matching_disk_radius(const DomainSpec& spec);

// Radii of the disks with the same area resp. the same perimeter:
// r_area = arcosh(A/(2*pi) + 1), r_perimeter = arsinh(L/(2*pi)).
// The isoperimetric inequality forces r_area <= r_perimeter.
ComparisonRadii comparison_disks(const DomainSpec& spec);

// Inverse hyperbolic cotangent for x > 1, via arcoth(x) = log1p(2/(x-1))/2,
// stable as x -> 1+ (arcosh/arsinh needs are served by std::acosh/std::asinh).
double arcoth(double x);

}  // namespace exrobin::geometry
