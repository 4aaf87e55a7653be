#include "casimir/real_mirrors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/ideal_cavity.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

// Integration variables: x = 2 kappa a, y = xi a / c, Omega = wp a / c.
// With k = x/2 and s = sqrt(k^2 + Omega^2) (the metal's kappa_m a):
//   r_TE = (k - s) / (k + s)                   = -Omega^2 / (k + s)^2
//   r_TM = (eps k - s) / (eps k + s), eps = 1 + Omega^2 / y^2
// Both amplitudes and 1 - r^2 are written in cancellation-free form so the
// integrand stays accurate near x -> 0 and for Omega >> x.

struct Reflection {
  double r;
  double one_minus_r_sq;
};

Reflection reflection_te(double k, double s, double omega_sq) {
  const double ks = k + s;
  const double r = -omega_sq / (ks * ks);
  const double one_plus = 2.0 * k / ks;
  const double one_minus = 1.0 + omega_sq / (ks * ks);
  return {r, one_plus * one_minus};
}

Reflection reflection_tm(double k, double s, double omega_sq, double y) {
  const double ks = k + s;
  const double y2 = y * y;
  const double den = (y2 + omega_sq) * k + y2 * s;
  const double r = omega_sq * (k - y2 / ks) / den;
  const double one_minus = y2 * (ks + omega_sq / ks) / den;
  return {r, one_minus * (2.0 - one_minus)};
}

// 1 - r^2 exp(-x), accurate when both factors approach one.
double one_minus_q(const Reflection& ref, double x) {
  return ref.one_minus_r_sq + ref.r * ref.r * -std::expm1(-x);
}

double pressure_term(const Reflection& ref, double x) {
  const double q = ref.r * ref.r * std::exp(-x);
  return q / one_minus_q(ref, x);
}

double energy_term(const Reflection& ref, double x) {
  const double q = ref.r * ref.r * std::exp(-x);
  return q < 0.5 ? std::log1p(-q) : std::log(one_minus_q(ref, x));
}

// Bound on int_X^inf x^p e^{-x} / (1 - e^{-X}) dx for p = 3 (pressure) or
// p = 2 (energy); |term| <= e^{-x} / (1 - e^{-x}) since r^2 <= 1.
double tail_bound(double X, int power) {
  const double e = std::exp(-X);
  const double poly = power == 3 ? X * X * X + 3.0 * X * X + 6.0 * X + 6.0 : X * X + 2.0 * X + 2.0;
  return e * poly / (1.0 - e);
}

enum class Quantity { pressure, energy };

void require_gap(double gap) {
  if (!std::isfinite(gap) || gap <= 0.0) {
    std::ostringstream os;
    os << "gap must be finite and > 0 (got " << gap << " m)";
    throw DomainError(os.str());
  }
}

// Pressure: I = int_0^X dx x^2 [ sum_p int_0^{x/2} dy q_p / (1 - q_p) ]
// Energy:   J = int_0^X dx x   [ sum_p int_0^{x/2} dy ln(1 - q_p) ]
// r_TE does not depend on y, so its inner integral is (x/2) times the term.
LifshitzIntegral lifshitz_integral(double omega, Quantity what, const LifshitzOptions& opts) {
  const double omega_sq = omega * omega;
  const bool pressure = what == Quantity::pressure;

  quadrature::Options inner_opts;
  inner_opts.rel_tol = opts.rel_tol * 0.1;
  inner_opts.max_subdivisions = opts.max_subdivisions;

  double max_inner_rel = 0.0;
  int max_inner_subdiv = 0;
  long evaluations = 0;
  bool inner_failed = false;

  auto outer = [&](double x) {
    const double k = 0.5 * x;
    const double s = std::sqrt(k * k + omega_sq);
    const Reflection te = reflection_te(k, s, omega_sq);
    const double te_part = k * (pressure ? pressure_term(te, x) : energy_term(te, x));

    auto inner = [&](double y) {
      const Reflection tm = reflection_tm(k, s, omega_sq, y);
      return pressure ? pressure_term(tm, x) : energy_term(tm, x);
    };
    const auto q = quadrature::integrate(inner, 0.0, k, inner_opts);
    evaluations += q.evaluations;
    max_inner_subdiv = std::max(max_inner_subdiv, q.subdivisions);
    if (!q.converged) inner_failed = true;
    if (q.value != 0.0) max_inner_rel = std::max(max_inner_rel, q.error / std::abs(q.value));

    const double weight = pressure ? x * x : x;
    return weight * (te_part + q.value);
  };

  quadrature::Options outer_opts;
  outer_opts.rel_tol = opts.rel_tol;
  outer_opts.max_subdivisions = opts.max_subdivisions;
  const auto q = quadrature::integrate(outer, 0.0, opts.x_max, outer_opts);

  LifshitzIntegral out;
  out.value = q.value;
  out.tail_bound = tail_bound(opts.x_max, pressure ? 3 : 2);
  // Every integrand contribution has the same sign, so the inner relative
  // error carries over to the total.
  out.error_estimate = q.error + max_inner_rel * std::abs(q.value) + out.tail_bound;
  out.outer_subdivisions = q.subdivisions;
  out.max_inner_subdivisions = max_inner_subdiv;
  out.evaluations = evaluations + q.evaluations;

  if (!q.converged || inner_failed) {
    std::ostringstream os;
    os << "outer_subdivisions=" << out.outer_subdivisions
       << " max_inner_subdivisions=" << out.max_inner_subdivisions
       << " evaluations=" << out.evaluations << " value=" << out.value
       << " error=" << out.error_estimate;
    throw ConvergenceError(std::string("Lifshitz quadrature did not converge (") +
                               (inner_failed ? "inner" : "outer") + " integral)",
                           {os.str()});
  }
  return out;
}

double omega_of(double gap, const MirrorMaterial& m, const PhysicalConstants& k) {
  return m.plasma_frequency * gap / k.c;
}

}  // namespace

MirrorMaterial MirrorMaterial::create(double plasma_wavelength, const PhysicalConstants& k) {
  if (!std::isfinite(plasma_wavelength) || plasma_wavelength <= 0.0) {
    throw ValidationError({"plasma wavelength must be finite and > 0"});
  }
  return MirrorMaterial{plasma_wavelength, 2.0 * kPi * k.c / plasma_wavelength};
}

SpacerMaterial SpacerMaterial::create(double refractive_index) {
  if (!std::isfinite(refractive_index) || refractive_index < 1.0) {
    throw ValidationError({"spacer refractive index must be >= 1"});
  }
  return SpacerMaterial{refractive_index};
}

double optical_gap(double gap, const SpacerMaterial& spacer) {
  require_gap(gap);
  return spacer.refractive_index * gap;
}

LifshitzPressure lifshitz_pressure(double gap, const MirrorMaterial& material,
                                   const PhysicalConstants& k, const LifshitzOptions& opts) {
  require_gap(gap);
  LifshitzPressure out;
  out.integral = lifshitz_integral(omega_of(gap, material, k), Quantity::pressure, opts);
  // P = -hbar c / (16 pi^2 a^4) * I; I = pi^4 / 15 for perfect mirrors.
  const double a2 = gap * gap;
  const double scale = k.hbar_c / (16.0 * kPi * kPi * a2 * a2);
  out.pressure = -scale * out.integral.value;
  out.error_estimate = scale * out.integral.error_estimate;
  return out;
}

LifshitzEnergy lifshitz_energy(double gap, const MirrorMaterial& material,
                               const PhysicalConstants& k, const LifshitzOptions& opts) {
  require_gap(gap);
  LifshitzEnergy out;
  out.integral = lifshitz_integral(omega_of(gap, material, k), Quantity::energy, opts);
  // E / A = hbar c / (16 pi^2 a^3) * J; J = -pi^4 / 45 for perfect mirrors.
  const double scale = k.hbar_c / (16.0 * kPi * kPi * gap * gap * gap);
  out.energy_per_area = scale * out.integral.value;
  out.error_estimate = scale * out.integral.error_estimate;
  return out;
}

ReductionFactor reduction_factor(double gap, const MirrorMaterial& material,
                                 const PhysicalConstants& k, const LifshitzOptions& opts) {
  const auto real = lifshitz_pressure(gap, material, k, opts);
  ReductionFactor out;
  out.real_value = real.pressure;
  out.ideal_value = casimir_pressure(gap, k);
  out.eta = real.pressure / out.ideal_value;
  out.error_estimate = real.error_estimate / std::abs(out.ideal_value);
  out.integral = real.integral;
  return out;
}

ReductionFactor energy_reduction_factor(double gap, const MirrorMaterial& material,
                                        const PhysicalConstants& k, const LifshitzOptions& opts) {
  const auto real = lifshitz_energy(gap, material, k, opts);
  const double ideal = -k.pi_sq_hbar_c_over_720 / (gap * gap * gap);
  ReductionFactor out;
  out.real_value = real.energy_per_area;
  out.ideal_value = ideal;
  out.eta = real.energy_per_area / ideal;
  out.error_estimate = real.error_estimate / std::abs(ideal);
  out.integral = real.integral;
  return out;
}

}  // namespace casimir
