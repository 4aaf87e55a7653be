#include "casimir/mode_sum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kAbelPlanaUpper = 30.0;

// Bound on int_T^inf t^3 / (exp(2 pi t) - 1) dt via the exponential majorant.
double abel_plana_tail(double T) {
  const double b = 2.0 * kPi;
  const double poly = T * T * T / b + 3.0 * T * T / (b * b) + 6.0 * T / (b * b * b) +
                      6.0 / (b * b * b * b);
  return std::exp(-b * T) * poly / (1.0 - std::exp(-b * T));
}

std::vector<std::string> describe(const RegularizationDiagnostics& d) {
  std::vector<std::string> out;
  std::ostringstream os;
  os.precision(17);
  if (d.method == RegularizationMethod::abel_plana_quadrature) {
    os << "subdivisions=" << d.subdivisions << " evaluations=" << d.evaluations
       << " upper_limit=" << d.upper_limit << " tail_bound=" << d.tail_bound;
    out.push_back(os.str());
  } else {
    for (const auto& s : d.steps) {
      os.str("");
      os << "eps=" << s.epsilon << " remainder=" << s.remainder;
      out.push_back(os.str());
    }
    for (std::size_t i = 0; i < d.extrapolated.size(); ++i) {
      os.str("");
      os << "richardson[" << i << "]=" << d.extrapolated[i];
      out.push_back(os.str());
    }
  }
  return out;
}

RegularizationResult abel_plana(const ModeSumSpec& spec) {
  // sum_{n>=1} n^3 continued to zeta(-3) = 2 int_0^inf t^3 / (exp(2 pi t) - 1) dt
  auto integrand = [](double t) {
    if (t == 0.0) return 0.0;
    return t * t * t / std::expm1(2.0 * kPi * t);
  };
  quadrature::Options opts;
  opts.rel_tol = spec.quadrature_tolerance;
  opts.max_subdivisions = spec.max_subdivisions;
  const auto q = quadrature::integrate(integrand, 0.0, kAbelPlanaUpper, opts);

  RegularizationResult r;
  r.diagnostics.method = spec.method;
  r.diagnostics.upper_limit = kAbelPlanaUpper;
  r.diagnostics.tail_bound = abel_plana_tail(kAbelPlanaUpper);
  r.diagnostics.subdivisions = q.subdivisions;
  r.diagnostics.evaluations = q.evaluations;
  r.finite_part = 2.0 * q.value;
  r.error_estimate = 2.0 * (q.error + r.diagnostics.tail_bound);
  r.energy_coefficient = -(kPi * kPi / 6.0) * r.finite_part;
  if (!q.converged) {
    throw ConvergenceError("Abel-Plana quadrature did not converge within " +
                               std::to_string(spec.max_subdivisions) + " subdivisions",
                           describe(r.diagnostics));
  }
  return r;
}

RegularizationResult cutoff_richardson(const ModeSumSpec& spec) {
  constexpr double u = std::numeric_limits<double>::epsilon();
  const auto& eps = spec.cutoff_values;
  const std::size_t n = eps.size();

  RegularizationResult r;
  r.diagnostics.method = spec.method;
  std::vector<double> row(n);
  std::vector<double> rounding(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = eps[i];
    const double divergence = 6.0 / (e * e * e * e);
    const double s = cutoff_partial_sum(e);
    row[i] = s - divergence;
    // Cancellation between S and 6/eps^4 dominates the rounding error.
    rounding[i] = 16.0 * u * divergence;
    r.diagnostics.steps.push_back({e, s, row[i]});
  }

  // Neville-style Richardson table in h = eps^2; column k removes eps^(2k).
  // The rounding budget is propagated through the same linear combinations.
  std::vector<double> err = rounding;
  r.diagnostics.extrapolated.push_back(row[n - 1]);
  double previous_best = row[n - 1];
  double step_change = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    std::vector<double> next_err(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      const double ratio = (eps[i] / eps[i + k]) * (eps[i] / eps[i + k]);
      const double w = 1.0 / (ratio - 1.0);
      next[i] = row[i + 1] + (row[i + 1] - row[i]) * w;
      next_err[i] = err[i + 1] * (1.0 + w) + err[i] * w;
    }
    row = std::move(next);
    err = std::move(next_err);
    step_change = std::abs(row.back() - previous_best);
    previous_best = row.back();
    r.diagnostics.extrapolated.push_back(row.back());
  }

  r.finite_part = row.back();
  r.diagnostics.rounding_bound = err.back();
  r.error_estimate = step_change + err.back();
  r.energy_coefficient = -(kPi * kPi / 6.0) * r.finite_part;

  if (!(r.error_estimate <= 10.0 * spec.quadrature_tolerance * std::abs(r.finite_part))) {
    std::ostringstream os;
    os << "Richardson extrapolation residual " << r.error_estimate
       << " exceeds 10x tolerance " << spec.quadrature_tolerance;
    throw ConvergenceError(os.str(), describe(r.diagnostics));
  }
  return r;
}

}  // namespace

const char* to_string(RegularizationMethod m) {
  switch (m) {
    case RegularizationMethod::abel_plana_quadrature:
      return "abel_plana_quadrature";
    case RegularizationMethod::exponential_cutoff_richardson:
      return "exponential_cutoff_richardson";
  }
  return "unknown";
}

RegularizationMethod regularization_method_from_string(const std::string& s) {
  if (s == "abel_plana_quadrature" || s == "abel-plana" || s == "abel_plana") {
    return RegularizationMethod::abel_plana_quadrature;
  }
  if (s == "exponential_cutoff_richardson" || s == "cutoff") {
    return RegularizationMethod::exponential_cutoff_richardson;
  }
  throw ValidationError({"unknown regularization method '" + s +
                         "' (expected abel-plana or cutoff)"});
}

ModeSumSpec ModeSumSpec::abel_plana(double tolerance, int max_subdivisions) {
  ModeSumSpec s;
  s.method = RegularizationMethod::abel_plana_quadrature;
  s.quadrature_tolerance = tolerance;
  s.max_subdivisions = max_subdivisions;
  return s;
}

ModeSumSpec ModeSumSpec::exponential_cutoff(std::vector<double> eps, double tolerance) {
  ModeSumSpec s;
  s.method = RegularizationMethod::exponential_cutoff_richardson;
  s.cutoff_values = std::move(eps);
  s.quadrature_tolerance = tolerance;
  return s;
}

void ModeSumSpec::validate() const {
  std::vector<std::string> problems;
  if (!(quadrature_tolerance > 1e-14 && quadrature_tolerance < 1e-2)) {
    problems.push_back("quadrature tolerance must lie in (1e-14, 1e-2)");
  }
  if (max_subdivisions < 1) problems.push_back("max_subdivisions must be >= 1");
  if (method == RegularizationMethod::exponential_cutoff_richardson) {
    if (cutoff_values.size() < 3) {
      problems.push_back("at least 3 cutoff values are required for extrapolation");
    }
    for (std::size_t i = 0; i < cutoff_values.size(); ++i) {
      const double e = cutoff_values[i];
      if (!(e > 0.0 && e < 1.0)) {
        problems.push_back("cutoff value " + std::to_string(e) + " is outside (0, 1)");
      }
      if (i > 0 && !(e < cutoff_values[i - 1])) {
        problems.push_back("cutoff values must be strictly decreasing");
      }
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

double k_integral_reduction(double mode_mass, const PhysicalConstants& k) {
  if (!(mode_mass >= 0.0)) {
    throw DomainError("mode mass must be >= 0");
  }
  return k.hbar_c * (-(mode_mass * mode_mass * mode_mass) / (6.0 * kPi));
}

double cutoff_partial_sum(double eps) {
  const double x = std::exp(-eps);
  const double one_minus_x = -std::expm1(-eps);
  const double d2 = one_minus_x * one_minus_x;
  return x * (1.0 + 4.0 * x + x * x) / (d2 * d2);
}

RegularizationResult regularized_mode_sum(const ModeSumSpec& spec) {
  spec.validate();
  if (spec.method == RegularizationMethod::abel_plana_quadrature) return abel_plana(spec);
  return cutoff_richardson(spec);
}

OracleEnergy oracle_energy(const CavityGeometry& geom, const ModeSumSpec& spec,
                           const PhysicalConstants& k) {
  OracleEnergy out;
  out.regularization = regularized_mode_sum(spec);
  // U = A sum_n hbar c (-(n pi / a)^3 / 6 pi) = A * reduction(pi / a) * sum n^3
  const double per_unit_sum = geom.area * k_integral_reduction(kPi / geom.optical_gap, k);
  out.energy = per_unit_sum * out.regularization.finite_part;
  out.error_estimate = std::abs(per_unit_sum) * out.regularization.error_estimate;
  if (!std::isfinite(out.energy)) {
    std::ostringstream os;
    os << "oracle energy is not representable for gap = " << geom.optical_gap << " m";
    throw DomainError(os.str());
  }
  return out;
}

}  // namespace casimir
