#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/stack.hpp"

using namespace casimir;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

StackConfig reference_stack(double n, std::optional<double> eta = 0.07) {
  const auto k = codata_constants();
  StackConfig c;
  c.layers = 1000000;
  c.disk_diameter = 0.1;
  c.gap = 5e-9;
  c.spacer = SpacerMaterial::create(n);
  c.mirror = MirrorMaterial::aluminium(k);
  c.layer_pitch = 100e-9;
  c.g = 9.81;
  c.reduction_override = eta;
  return c;
}

StackConstraints constraints(double lo, double hi, double thickness, double overhead) {
  StackConstraints c;
  c.gap_min = lo;
  c.gap_max = hi;
  c.total_thickness = thickness;
  c.layer_overhead = overhead;
  c.disk_diameter = 0.1;
  return c;
}

}  // namespace

TEST_CASE("reference configuration") {
  const auto k = codata_constants();
  const auto vac = stack_force(reference_stack(1.0), k);
  CHECK(rel(vac.force_total, 6.2415273414360659275e-16) < 1e-13);
  CHECK(rel(vac.force_total, 6.2e-16) < 0.02);
  const auto silica = stack_force(reference_stack(1.46), k);
  CHECK(rel(silica.force_total, 2.005544533219649118e-16) < 1e-13);
  for (const auto& r : {vac, silica}) {
    CHECK(r.force_total >= 1e-16);
    CHECK(r.force_total <= 1e-14);
    CHECK(r.eta_source == "override");
    CHECK(std::find(r.notes.begin(), r.notes.end(), std::string(kStaticSignalNote)) !=
          r.notes.end());
    REQUIRE(r.reference_comparisons.size() == 1);
    CHECK(r.reference_comparisons[0].ratio > 1.0);
  }
  CHECK(rel(vac.total_thickness, 0.1) < 1e-15);
}

TEST_CASE("force factorizes into its physical ingredients") {
  const auto k = codata_constants();
  for (double n : {1.0, 1.46, 2.2}) {
    auto cfg = reference_stack(n, 0.31);
    cfg.layers = 12345;
    cfg.g = 3.7;
    const auto r = stack_force(cfg, k);
    const double na = n * cfg.gap;
    const double expected = 0.31 * 12345.0 * cfg.area() * kPi * kPi * k.hbar_c /
                            (240.0 * na * na * na) * cfg.g / (k.c * k.c);
    CHECK(rel(r.force_total, expected) < 1e-12);
    CHECK(r.force_total == static_cast<double>(cfg.layers) * r.force_per_layer);
  }
}

TEST_CASE("scaling with area and layers") {
  const auto k = codata_constants();
  auto cfg = reference_stack(1.46);
  const double base = stack_force(cfg, k).force_total;
  cfg.disk_diameter *= 2.0;
  CHECK(rel(stack_force(cfg, k).force_total, 4.0 * base) < 1e-14);
  cfg = reference_stack(1.46);
  cfg.layers *= 3;
  CHECK(rel(stack_force(cfg, k).force_total, 3.0 * base) < 1e-14);
}

TEST_CASE("lifshitz eta in the stack") {
  const auto k = codata_constants();
  auto cfg = reference_stack(1.46, std::nullopt);
  const auto r = stack_force(cfg, k);
  CHECK(r.eta_source == "lifshitz");
  REQUIRE(r.eta_optical_gap.has_value());
  REQUIRE(r.eta_physical_gap.has_value());
  CHECK(r.eta_used == *r.eta_optical_gap);
  CHECK(*r.eta_optical_gap > *r.eta_physical_gap);
  CHECK(r.force_total > 1e-16);

  cfg.eta_gap = EtaGap::physical;
  const auto p = stack_force(cfg, k);
  CHECK(p.eta_used == *p.eta_physical_gap);
  CHECK(p.eta_used == *r.eta_physical_gap);
}

TEST_CASE("detectability") {
  const auto k = codata_constants();
  auto rep = stack_force(reference_stack(1.0), k);
  const auto d = detectability(rep);
  CHECK(d.detectable);
  CHECK(rel(d.ratio, 6.2415273414360659275e-16 / 5e-17) < 1e-13);
  rep.force_total = 5e-17;
  CHECK_FALSE(detectability(rep).detectable);
  CHECK(detectability(rep).ratio == 1.0);
  rep.force_total = 4e-17;
  CHECK_FALSE(detectability(rep).detectable);
  CHECK_THROWS_AS(detectability(rep, 0.0), DomainError);
}

TEST_CASE("weight comparison") {
  const auto k = codata_constants();
  const auto cfg = reference_stack(1.0);
  CHECK(rel(body_weight(cfg, 2400.0), 18.491414359029523002) < 1e-13);
  const double r1 = force_to_weight_ratio(cfg, 2400.0, k);
  const double r2 = force_to_weight_ratio(cfg, 1200.0, k);
  CHECK(rel(r2, 2.0 * r1) < 1e-15);
  CHECK(r1 < 1e-16);
  CHECK_THROWS_AS(body_weight(cfg, -1.0), DomainError);
}

TEST_CASE("validation lists every violation") {
  const auto k = codata_constants();
  StackConfig bad;
  bad.layers = 0;
  bad.disk_diameter = -1.0;
  bad.gap = 200e-9;
  bad.layer_pitch = 100e-9;
  bad.reduction_override = 1.5;
  try {
    stack_force(bad, k);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.problems().size() == 4);
  }
}

TEST_CASE("layer accounting note") {
  const auto k = codata_constants();
  auto cfg = reference_stack(1.0);
  cfg.declared_total_thickness = 0.1;
  CHECK(stack_force(cfg, k).notes.size() == 1);
  cfg.declared_total_thickness = 0.2;
  CHECK(stack_force(cfg, k).notes.size() == 2);
}

TEST_CASE("layers for a gap") {
  const auto c = constraints(5e-9, 60e-9, 0.1, 95e-9);
  CHECK(layers_for_gap(c, 5e-9) == 1000000);
  CHECK(layers_for_gap(c, 15e-9) == 909090);
}

TEST_CASE("optimizer") {
  const auto k = codata_constants();
  const auto al = MirrorMaterial::aluminium(k);
  const auto silica = SpacerMaterial::silica();
  OptimizerOptions o;
  o.grid_points = 16;
  o.refine_iterations = 20;

  SUBCASE("best point is the argmax of the trace") {
    const auto r = optimize_stack(constraints(5e-9, 60e-9, 0.1, 95e-9), al, silica, k, o);
    for (const auto& p : r.trace) CHECK(p.force_total <= r.best_report.force_total);
    CHECK(r.best_config.gap >= 5e-9);
    CHECK(r.best_config.gap <= 60e-9);
    CHECK(r.best_config.layers == layers_for_gap(constraints(5e-9, 60e-9, 0.1, 95e-9),
                                                  r.best_config.gap));
    const auto again = optimize_stack(constraints(5e-9, 60e-9, 0.1, 95e-9), al, silica, k, o);
    CHECK(again.best_config.gap == r.best_config.gap);
    CHECK(again.best_report.force_total == r.best_report.force_total);
    REQUIRE(again.trace.size() == r.trace.size());
    for (std::size_t i = 0; i < r.trace.size(); ++i) CHECK(again.trace[i].gap == r.trace[i].gap);
  }
  SUBCASE("singleton range") {
    const auto r = optimize_stack(constraints(7e-9, 7e-9, 0.1, 95e-9), al, silica, k, o);
    CHECK(r.trace.size() == 1);
    CHECK(r.best_config.gap == 7e-9);
  }
  SUBCASE("thickness cap trims the range") {
    const auto r = optimize_stack(constraints(5e-9, 1e-6, 150e-9, 95e-9), al, silica, k, o);
    for (const auto& p : r.trace) {
      CHECK(p.gap <= 55e-9 * (1 + 1e-12));
      CHECK(p.layers >= 1);
    }
  }
  SUBCASE("infeasible constraints") {
    CHECK_THROWS_AS(optimize_stack(constraints(10e-9, 5e-9, 0.1, 95e-9), al, silica, k, o),
                    InfeasibleError);
    CHECK_THROWS_AS(optimize_stack(constraints(5e-9, 60e-9, 50e-9, 95e-9), al, silica, k, o),
                    InfeasibleError);
    CHECK_THROWS_AS(optimize_stack(constraints(-5e-9, 60e-9, 0.1, 95e-9), al, silica, k, o),
                    ValidationError);
  }
}
