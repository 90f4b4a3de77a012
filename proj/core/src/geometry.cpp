#include "exrobin/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"

namespace exrobin::geometry {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid(const DomainSpec& spec) {
  ValidationResult v = validate_domain_spec(spec);
  if (!v.ok) throw validation_error(v.message);
}

}  // namespace

DomainSpec disk_geometry(double radius) {
  if (!std::isfinite(radius) || radius <= 0.0)
    throw std::domain_error("disk_geometry: radius must be positive and finite");
  return {kTwoPi * std::sinh(radius), kTwoPi * (std::cosh(radius) - 1.0)};
}

ValidationResult validate_domain_spec(const DomainSpec& spec, double relative_slack) {
  const double L = spec.perimeter;
  const double A = spec.area;
  if (!std::isfinite(L) || !std::isfinite(A))
    return {false, 0.0, "domain spec: perimeter and area must be finite"};
  if (L <= 0.0) return {false, 0.0, "domain spec: perimeter must be positive"};
  if (A <= 0.0) return {false, 0.0, "domain spec: area must be positive"};
  // Isoperimetric deficit of the hyperbolic plane; zero exactly for disks.
  const double deficit = L * L - A * A - 2.0 * kTwoPi * A;
  if (deficit < -relative_slack * L * L) {
    return {false, deficit,
            "domain spec: isoperimetric inequality violated (L^2 < A^2 + 4*pi*A, deficit " +
                format::format_double(deficit, 6) + "); no hyperbolic domain has these values"};
  }
  return {true, deficit, "ok"};
}

double parallel_perimeter(const DomainSpec& spec, double t) {
  require_valid(spec);
  if (!std::isfinite(t) || t < 0.0)
    throw std::domain_error("parallel_perimeter: distance must be nonnegative");
  return std::cosh(t) * spec.perimeter + std::sinh(t) * (kTwoPi + spec.area);
}

double avg_curvature(const DomainSpec& spec) {
  require_valid(spec);
  return (spec.area + kTwoPi) / spec.perimeter;
}

std::optional<double> matching_disk_radius(const DomainSpec& spec) {
  const double c = avg_curvature(spec);  // validates
  if (c <= 1.0) return std::nullopt;
  return arcoth(c);
}

ComparisonRadii comparison_disks(const DomainSpec& spec) {
  require_valid(spec);
  return {std::acosh(spec.area / kTwoPi + 1.0), std::asinh(spec.perimeter / kTwoPi)};
}

double arcoth(double x) {
  if (!(x > 1.0)) throw std::domain_error("arcoth: argument must exceed 1");
  return 0.5 * std::log1p(2.0 / (x - 1.0));
}

}  // namespace exrobin::geometry
