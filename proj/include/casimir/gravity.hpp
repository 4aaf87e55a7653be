#pragma once

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

/// Static Schwarzschild source seen from a cavity at radial coordinate r.
struct GravitationalSource {
  double mass = 0.0;              ///< kg
  double radius = 0.0;            ///< m; may be +inf (flat limit)
  double alpha = 0.0;             ///< 2 G M / c^2, m
  double g_local = 0.0;           ///< G M / r^2, m / s^2
  double alpha_over_r = 0.0;      ///< alpha / r
  double potential_factor = 1.0;  ///< g00 = 1 - alpha / r
  bool weak_field = true;         ///< alpha / r < 1e-3

  /// Throws ValidationError for non-positive inputs and HorizonError when
  /// radius <= alpha.
  static GravitationalSource create(double mass, double radius, const PhysicalConstants& k);
};

/// Size ratio below which the cavity counts as small against r (L < r / ratio).
inline constexpr double kDefaultSizeRatio = 1e3;

/// Flat-space energy times the red-shift factor (1 - alpha/r)^(3/2).
/// Throws DomainError when sqrt(A) >= radius / size_ratio.
double redshifted_energy(const CavityGeometry& geom, const GravitationalSource& src,
                         const PhysicalConstants& k, double size_ratio = kDefaultSizeRatio);

/// Radial force -dU/dr from the red-shifted energy, exact in alpha/r.
/// Positive values point outward, against the gravitational acceleration.
double force_exact(const CavityGeometry& geom, const GravitationalSource& src,
                   const PhysicalConstants& k, double size_ratio = kDefaultSizeRatio);

/// Dimensionless potential difference across the gap, a g / c^2 (optical gap).
double potential_difference(const CavityGeometry& geom, double g, const PhysicalConstants& k);

/// Weak-field force pi^2 hbar c A g / (240 a^3 c^2), outward.
double force_weak_field(const CavityGeometry& geom, double g, const PhysicalConstants& k);

struct PotentialDifferenceForce {
  double casimir_force = 0.0;  ///< |F_C|, N
  double delta_phi = 0.0;      ///< a g / c^2
  double product = 0.0;        ///< N
};

/// The weak-field force written as a Casimir force times the potential
/// difference between the plates. `product` is bit-identical to
/// force_weak_field().
PotentialDifferenceForce force_as_potential_difference(const CavityGeometry& geom, double g,
                                                       const PhysicalConstants& k);

}  // namespace casimir
