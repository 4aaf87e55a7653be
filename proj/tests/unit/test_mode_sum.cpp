#include "doctest.h"

#include <chrono>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/ideal_cavity.hpp"
#include "casimir/mode_sum.hpp"

using namespace casimir;

namespace {
constexpr double kTarget = 1.0 / 120.0;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("abel-plana route") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = regularized_mode_sum(ModeSumSpec::abel_plana());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(rel(r.finite_part, kTarget) < 1e-8);
  CHECK(rel(r.energy_coefficient, -kPi * kPi / 720.0) < 1e-8);
  CHECK(r.error_estimate < 1e-10 * kTarget);
  CHECK(std::abs(r.finite_part - kTarget) <= r.error_estimate + 1e-17);
  CHECK(r.diagnostics.tail_bound < 1e-70);
  CHECK(secs < 1.0);
}

TEST_CASE("cutoff + richardson route") {
  const auto r = regularized_mode_sum(ModeSumSpec::exponential_cutoff());
  CHECK(rel(r.finite_part, kTarget) < 1e-4);
  CHECK(rel(r.energy_coefficient, -kPi * kPi / 720.0) < 1e-4);
  CHECK(std::abs(r.finite_part - kTarget) <= r.error_estimate);
  CHECK(r.diagnostics.steps.size() == 4);
  CHECK(r.diagnostics.extrapolated.size() == 4);
}

TEST_CASE("closed-form partial sum matches brute force") {
  for (double eps : {0.9, 0.5, 0.2, 0.1}) {
    long double s = 0.0L;
    for (int n = 1; n < 20000; ++n) {
      const long double nn = n;
      s += nn * nn * nn * std::exp(-static_cast<long double>(eps) * nn);
    }
    CHECK(rel(cutoff_partial_sum(eps), static_cast<double>(s)) < 1e-13);
  }
}

TEST_CASE("cutoff remainder converges quadratically in eps") {
  const auto r = regularized_mode_sum(ModeSumSpec::exponential_cutoff());
  const auto& st = r.diagnostics.steps;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    const double d0 = std::abs(st[i].remainder - kTarget);
    const double d1 = std::abs(st[i + 1].remainder - kTarget);
    const double slope = std::log(d0 / d1) / std::log(st[i].epsilon / st[i + 1].epsilon);
    CHECK(slope >= 1.8);
    CHECK(slope <= 2.2);
  }
}

TEST_CASE("tightening the tolerance does not move the answer away") {
  double prev_err = INFINITY;
  for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
    const auto r = regularized_mode_sum(ModeSumSpec::abel_plana(tol));
    const double err = std::abs(r.finite_part - kTarget);
    CHECK(err <= std::max(prev_err, 1e-16));
    CHECK(err <= tol * kTarget);
    prev_err = err;
  }
}

TEST_CASE("both routes agree within the looser estimate") {
  const auto a = regularized_mode_sum(ModeSumSpec::abel_plana());
  const auto c = regularized_mode_sum(ModeSumSpec::exponential_cutoff());
  CHECK(std::abs(a.finite_part - c.finite_part) <= std::max(a.error_estimate, c.error_estimate));
}

TEST_CASE("k integral reduction") {
  const auto k = codata_constants();
  CHECK(rel(k_integral_reduction(kPi, k), -5.2005030897910138388e-26) < 1e-14);
  CHECK(k_integral_reduction(0.0, k) == 0.0);
  CHECK_THROWS_AS(k_integral_reduction(-1.0, k), DomainError);
}

TEST_CASE("oracle energy reproduces the closed form") {
  const auto k = codata_constants();
  const auto spec = ModeSumSpec::abel_plana();
  for (int i = 0; i < 20; ++i) {
    const double a = 1e-9 * std::pow(1e6, i / 19.0);
    const auto g = CavityGeometry::from_area(1.0, a);
    const auto o = oracle_energy(g, spec, k);
    CHECK(std::abs(o.energy - casimir_energy(g, k)) <= o.error_estimate);
  }
}

TEST_CASE("invalid specs list every problem") {
  auto s = ModeSumSpec::exponential_cutoff({0.1, 0.2}, 1.0);
  try {
    regularized_mode_sum(s);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.problems().size() == 3);
  }
  CHECK_THROWS_AS(regularized_mode_sum(ModeSumSpec::exponential_cutoff({0.2, 0.1, 1.5})),
                  ValidationError);
  CHECK_THROWS_AS(regularization_method_from_string("zeta"), ValidationError);
  CHECK(regularization_method_from_string("cutoff") ==
        RegularizationMethod::exponential_cutoff_richardson);
}

TEST_CASE("non-convergence carries diagnostics") {
  try {
    regularized_mode_sum(ModeSumSpec::abel_plana(1e-13, 1));
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK_FALSE(e.diagnostics().empty());
  }
  try {
    // a coarse grid cannot reach this tolerance
    regularized_mode_sum(ModeSumSpec::exponential_cutoff({0.9, 0.8, 0.7}, 1e-12));
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.diagnostics().size() >= 3);
  }
}
