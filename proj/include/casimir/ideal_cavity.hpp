#pragma once

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

// Closed-form Casimir quantities for perfectly conducting plates in flat
// space-time. All of them use the optical gap. Energies and attractive
// pressures are negative; force magnitudes are positive.

/// U = -A pi^2 hbar c / (720 a^3).
double casimir_energy(const CavityGeometry& geom, const PhysicalConstants& k);

/// P = -pi^2 hbar c / (240 a^4), a the separation passed in.
double casimir_pressure(double gap, const PhysicalConstants& k);

/// Fundamental mode frequency c / (2 a), in Hz.
double fundamental_frequency(double gap, const PhysicalConstants& k);

/// |F_C| = A pi^2 hbar c / (240 a^4).
double casimir_force_magnitude(const CavityGeometry& geom, const PhysicalConstants& k);

}  // namespace casimir
