#include "casimir/units.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace casimir::units {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::length: return "length";
    case Kind::area: return "area";
    case Kind::frequency: return "frequency";
    case Kind::force: return "force";
    case Kind::mass: return "mass";
    case Kind::acceleration: return "acceleration";
    case Kind::density: return "density";
    case Kind::dimensionless: return "dimensionless";
  }
  return "unknown";
}

const std::vector<Suffix>& suffixes() {
  static const std::vector<Suffix> table = {
      {"km", Kind::length, 1e3},
      {"m", Kind::length, 1.0},
      {"cm", Kind::length, 1e-2},
      {"mm", Kind::length, 1e-3},
      {"um", Kind::length, 1e-6},
      {"\xC2\xB5m", Kind::length, 1e-6},  // µm
      {"nm", Kind::length, 1e-9},
      {"pm", Kind::length, 1e-12},
      {"m2", Kind::area, 1.0},
      {"m^2", Kind::area, 1.0},
      {"cm2", Kind::area, 1e-4},
      {"mm2", Kind::area, 1e-6},
      {"um2", Kind::area, 1e-12},
      {"nm2", Kind::area, 1e-18},
      {"Hz", Kind::frequency, 1.0},
      {"kHz", Kind::frequency, 1e3},
      {"MHz", Kind::frequency, 1e6},
      {"GHz", Kind::frequency, 1e9},
      {"THz", Kind::frequency, 1e12},
      {"PHz", Kind::frequency, 1e15},
      {"N", Kind::force, 1.0},
      {"mN", Kind::force, 1e-3},
      {"uN", Kind::force, 1e-6},
      {"nN", Kind::force, 1e-9},
      {"pN", Kind::force, 1e-12},
      {"fN", Kind::force, 1e-15},
      {"aN", Kind::force, 1e-18},
      {"kg", Kind::mass, 1.0},
      {"g", Kind::mass, 1e-3},
      {"m/s2", Kind::acceleration, 1.0},
      {"m/s^2", Kind::acceleration, 1.0},
      {"kg/m3", Kind::density, 1.0},
      {"kg/m^3", Kind::density, 1.0},
      {"g/cm3", Kind::density, 1e3},
  };
  return table;
}

double parse_quantity(std::string_view text, Kind kind) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty value");

  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) {
    throw std::invalid_argument("malformed number in '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("value '" + std::string(text) + "' is not finite");
  }
  std::string_view suffix(ptr, static_cast<std::size_t>(end - ptr));
  while (!suffix.empty() && suffix.front() == ' ') suffix.remove_prefix(1);

  if (kind == Kind::dimensionless) {
    if (!suffix.empty()) {
      throw std::invalid_argument("dimensionless value '" + std::string(text) +
                                  "' must not carry a unit");
    }
    return value;
  }
  if (suffix.empty()) {
    throw std::invalid_argument("value '" + std::string(text) + "' needs an explicit " +
                                to_string(kind) + " unit");
  }
  for (const auto& u : suffixes()) {
    if (u.text != suffix) continue;
    if (u.kind != kind) {
      throw std::invalid_argument("unit mismatch in '" + std::string(text) + "': '" +
                                  std::string(suffix) + "' is a " + to_string(u.kind) +
                                  " unit, expected " + to_string(kind));
    }
    // Sub-unit prefixes divide by an exact power of ten, so "5nm" == 5e-9.
    if (u.scale < 1.0) return value / std::pow(10.0, std::round(-std::log10(u.scale)));
    return value * u.scale;
  }
  throw std::invalid_argument("unknown unit '" + std::string(suffix) + "' in '" +
                              std::string(text) + "'");
}

}  // namespace casimir::units
