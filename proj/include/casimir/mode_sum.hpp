#pragma once

#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

// Numerical regularization of the divergent zero-point mode sum. The
// transverse momentum integral is continued analytically to -m^3 / (6 pi);
// only the remaining sum over n^3 is regularized numerically, by two
// independent routes.

enum class RegularizationMethod { abel_plana_quadrature, exponential_cutoff_richardson };

const char* to_string(RegularizationMethod m);
RegularizationMethod regularization_method_from_string(const std::string& s);

struct ModeSumSpec {
  RegularizationMethod method = RegularizationMethod::abel_plana_quadrature;
  std::vector<double> cutoff_values;  ///< dimensionless epsilon, cutoff method only
  double quadrature_tolerance = 1e-10;
  int max_subdivisions = 200;

  static ModeSumSpec abel_plana(double tolerance = 1e-10, int max_subdivisions = 200);
  static ModeSumSpec exponential_cutoff(std::vector<double> eps = {0.2, 0.1, 0.05, 0.025},
                                        double tolerance = 1e-5);

  /// Throws ValidationError listing every violated invariant.
  void validate() const;
};

struct CutoffStep {
  double epsilon = 0.0;
  double partial_sum = 0.0;  ///< S(eps) = sum n^3 exp(-eps n)
  double remainder = 0.0;    ///< S(eps) - 6 / eps^4
};

struct RegularizationDiagnostics {
  RegularizationMethod method = RegularizationMethod::abel_plana_quadrature;
  // cutoff route
  std::vector<CutoffStep> steps;
  std::vector<double> extrapolated;  ///< diagonal of the Richardson table
  double rounding_bound = 0.0;
  // quadrature route
  double upper_limit = 0.0;
  double tail_bound = 0.0;
  int subdivisions = 0;
  long evaluations = 0;
};

struct RegularizationResult {
  double finite_part = 0.0;         ///< regularized sum of n^3, target 1/120
  double energy_coefficient = 0.0;  ///< -(pi^2/6) finite_part, target -pi^2/720
  double error_estimate = 0.0;      ///< absolute, on finite_part
  RegularizationDiagnostics diagnostics;

  double relative_error_estimate() const { return error_estimate / finite_part; }
};

/// Analytically continued transverse integral of one mode of mass m (1/m):
/// hbar c * (-m^3 / (6 pi)), in J / m^2.
double k_integral_reduction(double mode_mass, const PhysicalConstants& k);

/// Closed form of sum_{n>=1} n^3 exp(-eps n) = x (1 + 4x + x^2) / (1 - x)^4,
/// x = exp(-eps).
double cutoff_partial_sum(double eps);

/// Throws ConvergenceError (with diagnostics) when the quadrature budget is
/// exhausted or the extrapolation residual exceeds 10x the tolerance.
RegularizationResult regularized_mode_sum(const ModeSumSpec& spec);

struct OracleEnergy {
  double energy = 0.0;          ///< J
  double error_estimate = 0.0;  ///< J, absolute
  RegularizationResult regularization;
};

/// Zero-point energy assembled mode by mode from the regularized sum; equals
/// casimir_energy() when finite_part = 1/120.
OracleEnergy oracle_energy(const CavityGeometry& geom, const ModeSumSpec& spec,
                           const PhysicalConstants& k);

}  // namespace casimir
