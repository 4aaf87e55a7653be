#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/units.hpp"

namespace casimir {

enum class Subcommand { ideal, oracle, gravity, eta, stack, optimize, sweep };

const char* to_string(Subcommand s);
std::optional<Subcommand> subcommand_from_string(const std::string& s);

enum class ParamType { quantity, count, text, number_list };

/// One accepted key of a subcommand.
struct ParamSpec {
  std::string name;
  ParamType type = ParamType::quantity;
  units::Kind kind = units::Kind::dimensionless;
  std::optional<std::string> default_value;
  std::string help;
};

/// Keys accepted by an evaluating subcommand (not `sweep`).
const std::vector<ParamSpec>& parameter_schema(Subcommand s);

/// A validated parameter: raw text as given plus its SI value.
struct ParamValue {
  std::string raw;
  double value = 0.0;               ///< quantity or count, in SI
  std::vector<double> list;         ///< number_list
  bool from_default = false;
};

using ParamMap = std::map<std::string, ParamValue>;

enum class SweepScale { linear, log };

struct SweepSpec {
  std::string parameter;
  SweepScale scale = SweepScale::linear;
  double start = 0.0;  ///< SI
  double stop = 0.0;   ///< SI
  int points = 2;
  std::string start_raw, stop_raw;
};

enum class OutputFormat { json, csv, table };

struct OutputSpec {
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> path;  ///< standard output when empty
};

struct RunConfig {
  Subcommand subcommand = Subcommand::ideal;
  /// Evaluated subcommand; equals `subcommand` except for sweeps.
  Subcommand target = Subcommand::ideal;
  ParamMap parameters;
  std::optional<SweepSpec> sweep;
  OutputSpec output;

  bool has(const std::string& key) const { return parameters.count(key) != 0; }
  double value(const std::string& key) const { return parameters.at(key).value; }
  const std::string& raw(const std::string& key) const { return parameters.at(key).raw; }
};

/// Builds a RunConfig from command-line arguments (argv[0] excluded) and an
/// optional JSON config file named by --config. Flags override file values;
/// unknown keys, malformed values and unit problems are all collected and
/// reported in a single ValidationError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Same, with the file contents already loaded (used by tests).
RunConfig parse_config(const std::vector<std::string>& args, const std::string& file_text);

/// Re-validates one parameter after substitution (used by sweeps).
ParamValue parse_param(const ParamSpec& spec, const std::string& raw);

std::string usage();

}  // namespace casimir
