#include "casimir/ideal_cavity.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void require_positive(double v, const char* name, std::vector<std::string>& problems) {
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream os;
    os << name << " must be finite and > 0 (got " << v << ")";
    problems.push_back(os.str());
  }
}

void require_gap(double gap) {
  if (!std::isfinite(gap) || gap <= 0.0) {
    std::ostringstream os;
    os << "gap must be finite and > 0 (got " << gap << " m)";
    throw DomainError(os.str());
  }
}

// A result that overflowed or underflowed means the gap is outside what the
// double range can represent for this formula.
double checked(double value, double gap, const char* quantity) {
  if (!std::isfinite(value) || value == 0.0) {
    std::ostringstream os;
    os << quantity << " is not representable for gap = " << gap << " m";
    throw DomainError(os.str());
  }
  return value;
}

}  // namespace

CavityGeometry CavityGeometry::from_area(double area, double gap, double refractive_index) {
  std::vector<std::string> problems;
  require_positive(area, "area", problems);
  require_positive(gap, "gap", problems);
  if (!std::isfinite(refractive_index) || refractive_index < 1.0) {
    std::ostringstream os;
    os << "refractive index must be >= 1 (got " << refractive_index << ")";
    problems.push_back(os.str());
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return CavityGeometry{area, gap, refractive_index * gap};
}

CavityGeometry CavityGeometry::square(double side, double gap, double refractive_index) {
  if (!std::isfinite(side) || side <= 0.0) {
    throw ValidationError({"plate side must be finite and > 0"});
  }
  return from_area(side * side, gap, refractive_index);
}

CavityGeometry CavityGeometry::disk(double diameter, double gap, double refractive_index) {
  if (!std::isfinite(diameter) || diameter <= 0.0) {
    throw ValidationError({"disk diameter must be finite and > 0"});
  }
  return from_area(kPi * diameter * diameter / 4.0, gap, refractive_index);
}

double casimir_energy(const CavityGeometry& geom, const PhysicalConstants& k) {
  const double a = geom.optical_gap;
  require_gap(a);
  const double u = -geom.area * k.pi_sq_hbar_c_over_720 / (a * a * a);
  return checked(u, a, "Casimir energy");
}

double casimir_pressure(double gap, const PhysicalConstants& k) {
  require_gap(gap);
  const double a2 = gap * gap;
  return checked(-k.pi_sq_hbar_c_over_240 / (a2 * a2), gap, "Casimir pressure");
}

double fundamental_frequency(double gap, const PhysicalConstants& k) {
  require_gap(gap);
  return k.c / (2.0 * gap);
}

double casimir_force_magnitude(const CavityGeometry& geom, const PhysicalConstants& k) {
  const double a = geom.optical_gap;
  require_gap(a);
  const double a2 = a * a;
  return checked(geom.area * k.pi_sq_hbar_c_over_240 / (a2 * a2), a, "Casimir force");
}

}  // namespace casimir
