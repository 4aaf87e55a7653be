#include "casimir/gravity.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/ideal_cavity.hpp"

namespace casimir {

namespace {

void require_small_cavity(const CavityGeometry& geom, const GravitationalSource& src,
                          double size_ratio) {
  if (!(geom.side() < src.radius / size_ratio)) {
    std::ostringstream os;
    os << "cavity size L = " << geom.side() << " m is not small against radius r = "
       << src.radius << " m (need L < r / " << size_ratio << ")";
    throw DomainError(os.str());
  }
}

void require_g(double g) {
  if (!std::isfinite(g) || g < 0.0) {
    throw DomainError("gravitational acceleration g must be finite and >= 0");
  }
}

}  // namespace

GravitationalSource GravitationalSource::create(double mass, double radius,
                                                const PhysicalConstants& k) {
  std::vector<std::string> problems;
  if (!std::isfinite(mass) || mass <= 0.0) problems.push_back("mass must be finite and > 0");
  if (std::isnan(radius) || radius <= 0.0) problems.push_back("radius must be > 0");
  if (!problems.empty()) throw ValidationError(std::move(problems));

  GravitationalSource s;
  s.mass = mass;
  s.radius = radius;
  s.alpha = 2.0 * k.G * mass / (k.c * k.c);
  if (!(radius > s.alpha)) {
    std::ostringstream os;
    os << "radius " << radius << " m is not outside the Schwarzschild radius " << s.alpha << " m";
    throw HorizonError(os.str());
  }
  s.alpha_over_r = s.alpha / radius;
  s.g_local = k.G * mass / (radius * radius);
  s.potential_factor = 1.0 - s.alpha_over_r;
  s.weak_field = s.alpha_over_r < 1e-3;
  return s;
}

double redshifted_energy(const CavityGeometry& geom, const GravitationalSource& src,
                         const PhysicalConstants& k, double size_ratio) {
  require_small_cavity(geom, src, size_ratio);
  return casimir_energy(geom, k) * std::pow(src.potential_factor, 1.5);
}

double force_exact(const CavityGeometry& geom, const GravitationalSource& src,
                   const PhysicalConstants& k, double size_ratio) {
  require_small_cavity(geom, src, size_ratio);
  // d/dr (1 - alpha/r)^(3/2) = (3/2) (alpha / r^2) (1 - alpha/r)^(1/2)
  const double flat = -casimir_energy(geom, k);
  const double alpha_over_r2 = src.alpha_over_r / src.radius;
  return flat * 1.5 * alpha_over_r2 * std::sqrt(src.potential_factor);
}

double potential_difference(const CavityGeometry& geom, double g, const PhysicalConstants& k) {
  require_g(g);
  return geom.optical_gap * g / (k.c * k.c);
}

double force_weak_field(const CavityGeometry& geom, double g, const PhysicalConstants& k) {
  return casimir_force_magnitude(geom, k) * potential_difference(geom, g, k);
}

PotentialDifferenceForce force_as_potential_difference(const CavityGeometry& geom, double g,
                                                       const PhysicalConstants& k) {
  PotentialDifferenceForce out;
  out.casimir_force = casimir_force_magnitude(geom, k);
  out.delta_phi = potential_difference(geom, g, k);
  out.product = out.casimir_force * out.delta_phi;
  return out;
}

}  // namespace casimir
