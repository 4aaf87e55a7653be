#include "casimir/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

PhysicalConstants PhysicalConstants::from_base(double hbar, double c, double G) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument(std::string("physical constant '") + name +
                                  "' must be finite and positive");
    }
  };
  check(hbar, "hbar");
  check(c, "c");
  check(G, "G");

  PhysicalConstants k;
  k.hbar = hbar;
  k.c = c;
  k.G = G;
  k.hbar_c = hbar * c;
  // pi^2/720 is formed first so that the 240 prefactor is exactly three times
  // the 720 one (multiplication by 3 of the same rounded product).
  const double pi_sq = kPi * kPi;
  k.pi_sq_hbar_c_over_720 = pi_sq * k.hbar_c / 720.0;
  k.pi_sq_hbar_c_over_240 = k.pi_sq_hbar_c_over_720 * 3.0;
  return k;
}

PhysicalConstants codata_constants() {
  return PhysicalConstants::from_base(1.054571817e-34, 299792458.0, 6.67430e-11);
}

}  // namespace casimir
