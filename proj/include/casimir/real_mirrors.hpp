#pragma once

#include "casimir/constants.hpp"

namespace casimir {

/// Lossless plasma-model metal, eps(i xi) = 1 + wp^2 / xi^2.
struct MirrorMaterial {
  double plasma_wavelength = 1.0e-7;  ///< m
  double plasma_frequency = 0.0;      ///< rad / s, 2 pi c / lambda_p

  static MirrorMaterial create(double plasma_wavelength, const PhysicalConstants& k);
  /// Aluminium, lambda_p = 100 nm.
  static MirrorMaterial aluminium(const PhysicalConstants& k) { return create(1.0e-7, k); }
};

/// Dielectric gap filling, modelled only through the optical path a -> n a.
struct SpacerMaterial {
  double refractive_index = 1.46;

  static SpacerMaterial create(double refractive_index);
  static SpacerMaterial silica() { return create(1.46); }
  static SpacerMaterial vacuum() { return create(1.0); }
};

/// n * gap.
double optical_gap(double gap, const SpacerMaterial& spacer);

struct LifshitzOptions {
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
  double x_max = 50.0;  ///< cutoff of x = 2 kappa a
};

/// Dimensionless Lifshitz integral and its quadrature bookkeeping.
struct LifshitzIntegral {
  double value = 0.0;
  double error_estimate = 0.0;  ///< absolute, includes the x > x_max tail bound
  double tail_bound = 0.0;
  int outer_subdivisions = 0;
  int max_inner_subdivisions = 0;
  long evaluations = 0;
};

struct LifshitzPressure {
  double pressure = 0.0;        ///< Pa, negative
  double error_estimate = 0.0;  ///< Pa, absolute
  LifshitzIntegral integral;
};

/// Zero-temperature Lifshitz pressure between two identical plasma-model
/// half-spaces separated by `gap` of vacuum. Throws ConvergenceError when the
/// quadrature budget is exhausted.
LifshitzPressure lifshitz_pressure(double gap, const MirrorMaterial& material,
                                   const PhysicalConstants& k, const LifshitzOptions& opts = {});

struct LifshitzEnergy {
  double energy_per_area = 0.0;  ///< J / m^2, negative
  double error_estimate = 0.0;
  LifshitzIntegral integral;
};

LifshitzEnergy lifshitz_energy(double gap, const MirrorMaterial& material,
                               const PhysicalConstants& k, const LifshitzOptions& opts = {});

struct ReductionFactor {
  double eta = 1.0;  ///< real / ideal pressure
  double error_estimate = 0.0;
  double real_value = 0.0;   ///< Pa (force variant) or J / m^2 (energy variant)
  double ideal_value = 0.0;
  LifshitzIntegral integral;
};

/// Force reduction factor of real mirrors at the given gap, in (0, 1].
ReductionFactor reduction_factor(double gap, const MirrorMaterial& material,
                                 const PhysicalConstants& k, const LifshitzOptions& opts = {});

/// Energy reduction factor, real / ideal energy; reported alongside eta.
ReductionFactor energy_reduction_factor(double gap, const MirrorMaterial& material,
                                        const PhysicalConstants& k,
                                        const LifshitzOptions& opts = {});

}  // namespace casimir
