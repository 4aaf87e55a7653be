#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/gravity.hpp"
#include "casimir/ideal_cavity.hpp"
#include "casimir/real_mirrors.hpp"
#include "casimir/stack.hpp"

using namespace casimir;

// Reference values evaluated at 40 digits with mpmath from the CODATA 2018
// inputs.
constexpr double kHbarC = 3.16152677155956186e-26;
constexpr double kPiSqHbarCOver240 = 1.3001257724477534597e-27;
constexpr double kPiSqHbarCOver720 = 4.3337525748258448657e-28;

TEST_CASE("codata values") {
  const auto k = codata_constants();
  CHECK(k.c == 2.99792458e8);
  CHECK(k.hbar == 1.054571817e-34);
  CHECK(k.G == 6.67430e-11);
  CHECK(std::abs(k.hbar_c / kHbarC - 1.0) < 1e-14);
  CHECK(std::abs(k.pi_sq_hbar_c_over_240 / kPiSqHbarCOver240 - 1.0) < 1e-14);
  CHECK(std::abs(k.pi_sq_hbar_c_over_720 / kPiSqHbarCOver720 - 1.0) < 1e-14);
}

TEST_CASE("derived prefactors are consistent") {
  const auto k = codata_constants();
  CHECK(k.pi_sq_hbar_c_over_720 * 3.0 == k.pi_sq_hbar_c_over_240);
  CHECK(k.hbar > 0);
  CHECK(k.pi_sq_hbar_c_over_720 > 0);
}

TEST_CASE("non-positive constants are rejected") {
  CHECK_THROWS_AS(PhysicalConstants::from_base(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants::from_base(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants::from_base(1.0, 1.0, NAN), std::invalid_argument);
}

TEST_CASE("energies and forces are linear in hbar") {
  const auto k = codata_constants();
  const auto k2 = PhysicalConstants::from_base(2.0 * k.hbar, k.c, k.G);
  const auto geom = CavityGeometry::disk(0.1, 5e-9, 1.46);

  CHECK(casimir_energy(geom, k2) == 2.0 * casimir_energy(geom, k));
  CHECK(casimir_pressure(7e-9, k2) == 2.0 * casimir_pressure(7e-9, k));
  CHECK(force_weak_field(geom, 9.81, k2) == 2.0 * force_weak_field(geom, 9.81, k));

  const auto earth = GravitationalSource::create(5.972e24, 6.371e6, k);
  const auto earth2 = GravitationalSource::create(5.972e24, 6.371e6, k2);
  CHECK(redshifted_energy(geom, earth2, k2) == 2.0 * redshifted_energy(geom, earth, k));
  CHECK(force_exact(geom, earth2, k2) == 2.0 * force_exact(geom, earth, k));

  StackConfig cfg;
  cfg.layers = 1000000;
  cfg.disk_diameter = 0.1;
  cfg.gap = 5e-9;
  cfg.layer_pitch = 1e-7;
  cfg.spacer = SpacerMaterial::silica();
  cfg.mirror = MirrorMaterial::aluminium(k);
  cfg.reduction_override = 0.07;
  CHECK(stack_force(cfg, k2).force_total == 2.0 * stack_force(cfg, k).force_total);

  // eta is a ratio of two hbar-linear pressures
  cfg.reduction_override.reset();
  StackOptions o;
  o.report_both_eta = false;
  CHECK(stack_force(cfg, k2, o).force_total == 2.0 * stack_force(cfg, k, o).force_total);
}
