#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace casimir::units {

/// Physical dimension of a command-line quantity.
enum class Kind { length, area, frequency, force, mass, acceleration, density, dimensionless };

const char* to_string(Kind k);

/// Parses "<number><suffix>" into SI. Dimensional kinds require a suffix of
/// the matching kind; dimensionless values must not carry one. Throws
/// std::invalid_argument with a message naming the problem.
double parse_quantity(std::string_view text, Kind kind);

/// Every suffix accepted for a kind, with its SI scale factor.
struct Suffix {
  std::string_view text;
  Kind kind;
  double scale;
};
const std::vector<Suffix>& suffixes();

}  // namespace casimir::units
