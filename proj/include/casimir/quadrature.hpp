#pragma once

#include <functional>

namespace casimir::quadrature {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_subdivisions = 200;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error, >= 0
  int subdivisions = 0;
  long evaluations = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod integration on a finite
/// interval [a, b]. The interval with the largest error estimate is bisected
/// until the total error drops below max(abs_tol, rel_tol * |value|) or the
/// subdivision budget runs out (converged == false, value still returned).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options = {});

}  // namespace casimir::quadrature
