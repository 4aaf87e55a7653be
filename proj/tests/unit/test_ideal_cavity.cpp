#include "doctest.h"

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/ideal_cavity.hpp"

using namespace casimir;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return out;
}

}  // namespace

TEST_CASE("energy closed form") {
  const auto k = codata_constants();
  // 40-digit mpmath evaluations
  CHECK(rel(casimir_energy(CavityGeometry::from_area(1.0, 1.0), k), -4.3337525748258448657e-28) < 1e-14);
  CHECK(rel(casimir_energy(CavityGeometry::from_area(1.0, 1e-6), k), -4.3337525748258448657e-10) < 1e-14);
  const auto g1 = CavityGeometry::from_area(1.0, 3e-7);
  const auto g2 = CavityGeometry::from_area(2.0, 3e-7);
  CHECK(casimir_energy(g2, k) == 2.0 * casimir_energy(g1, k));
}

TEST_CASE("pressure closed form") {
  const auto k = codata_constants();
  CHECK(rel(casimir_pressure(1e-6, k), -1.3001257724477534597e-3) < 1e-14);
  CHECK(rel(casimir_pressure(5e-9, k), -2080201.2359164055355) < 1e-14);
  CHECK(rel(casimir_pressure(0.5e-6, k), 16.0 * casimir_pressure(1e-6, k)) < 1e-15);
}

TEST_CASE("fundamental frequency") {
  const auto k = codata_constants();
  CHECK(rel(fundamental_frequency(60e-9, k), 2.5e15) < 5e-3);
  CHECK(rel(fundamental_frequency(60e-9, k), 2498270483333333.3333) < 1e-15);
  CHECK(rel(fundamental_frequency(30e-9, k), 2.0 * fundamental_frequency(60e-9, k)) < 1e-15);
  CHECK(rel(fundamental_frequency(5e-9, k), 2.99792458e16) < 1e-15);
}

TEST_CASE("force magnitude") {
  const auto k = codata_constants();
  CHECK(rel(casimir_force_magnitude(CavityGeometry::from_area(1.0, 1e-6), k), 1.3001257724477534597e-3) < 1e-14);
  const auto disk = CavityGeometry::disk(0.1, 5e-9);
  CHECK(rel(disk.area, 0.0078539816339744830962) < 1e-15);
  CHECK(rel(casimir_force_magnitude(disk, k), 16337.86230185846994) < 1e-14);
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(CavityGeometry::from_area(0.0, 1e-6), ValidationError);
  CHECK_THROWS_AS(CavityGeometry::from_area(1.0, -1e-6), ValidationError);
  CHECK_THROWS_AS(CavityGeometry::from_area(1.0, 1e-6, 0.9), ValidationError);
  try {
    CavityGeometry::from_area(-1.0, 0.0, 0.5);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.problems().size() == 3);
  }
  const auto g = CavityGeometry::from_area(1.0, 5e-9, 1.46);
  CHECK(g.optical_gap >= g.gap);
  CHECK(rel(g.optical_gap, 7.3e-9) < 1e-15);
}

TEST_CASE("unrepresentable results are domain errors") {
  const auto k = codata_constants();
  CHECK_THROWS_AS(casimir_pressure(1e-90, k), DomainError);
  CHECK_THROWS_AS(casimir_energy(CavityGeometry::from_area(1.0, 1e-120), k), DomainError);
  CHECK_THROWS_AS(casimir_pressure(0.0, k), DomainError);
  try {
    casimir_pressure(1e-90, k);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("gap") != std::string::npos);
  }
}

TEST_CASE("force is minus the energy derivative (central differences)") {
  const auto k = codata_constants();
  for (double a : log_grid(1e-9, 1e-3, 25)) {
    const double h = a * 1e-5;
    const double up = casimir_energy(CavityGeometry::from_area(1.0, a + h), k);
    const double dn = casimir_energy(CavityGeometry::from_area(1.0, a - h), k);
    const double fd = (up - dn) / (2.0 * h);
    CHECK(rel(std::abs(fd), casimir_force_magnitude(CavityGeometry::from_area(1.0, a), k)) < 1e-6);
  }
}

TEST_CASE("energy follows a pure inverse-cube law") {
  const auto k = codata_constants();
  double lo = INFINITY, hi = -INFINITY;
  for (double a : log_grid(1e-9, 1e-2, 40)) {
    const double v = casimir_energy(CavityGeometry::from_area(1.0, a), k) * a * a * a;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(std::abs(hi - lo) / std::abs(lo) < 1e-12);
}

TEST_CASE("dielectric scaling a -> n a") {
  const auto k = codata_constants();
  for (double n : {1.0, 1.2, 1.46, 2.0, 3.7}) {
    const double filled = casimir_energy(CavityGeometry::from_area(1.0, 5e-9, n), k);
    const double empty = casimir_energy(CavityGeometry::from_area(1.0, 5e-9), k);
    CHECK(rel(filled, empty / (n * n * n)) < 1e-14);
  }
}
