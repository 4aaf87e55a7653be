#pragma once

#include <cmath>

namespace casimir {

/// Parallel-plate cavity: plate area, proper separation and the optical
/// separation seen by the field once a dielectric spacer of index n fills the
/// gap (a -> n a).
struct CavityGeometry {
  double area = 0.0;         ///< m^2
  double gap = 0.0;          ///< m
  double optical_gap = 0.0;  ///< m, n * gap

  /// Side length L of the equivalent square plate, sqrt(A).
  double side() const { return std::sqrt(area); }
  double refractive_index() const { return optical_gap / gap; }

  /// Throws ValidationError listing every violated invariant.
  static CavityGeometry from_area(double area, double gap, double refractive_index = 1.0);
  static CavityGeometry square(double side, double gap, double refractive_index = 1.0);
  /// Disk of the given diameter; area = pi d^2 / 4.
  static CavityGeometry disk(double diameter, double gap, double refractive_index = 1.0);
};

}  // namespace casimir
