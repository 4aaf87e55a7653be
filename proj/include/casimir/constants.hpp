#pragma once

namespace casimir {

/// Physical constants in SI units together with the combinations that the
/// Casimir formulas use repeatedly. Every formula takes one of these by
/// reference; nothing downstream carries its own literals.
struct PhysicalConstants {
  double hbar = 0.0;  ///< reduced Planck constant, J s
  double c = 0.0;     ///< speed of light, m / s
  double G = 0.0;     ///< Newtonian constant of gravitation, m^3 kg^-1 s^-2

  double hbar_c = 0.0;                 ///< J m
  double pi_sq_hbar_c_over_720 = 0.0;  ///< energy prefactor, J m
  double pi_sq_hbar_c_over_240 = 0.0;  ///< pressure prefactor, J m

  /// Builds a constant set from the base values and fills the derived fields.
  /// Throws std::invalid_argument unless all three are finite and positive.
  static PhysicalConstants from_base(double hbar, double c, double G);
};

/// CODATA 2018 recommended values.
PhysicalConstants codata_constants();

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace casimir
