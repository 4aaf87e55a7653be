#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/constants.hpp"
#include "casimir/report_io.hpp"

namespace casimir {

/// Evaluates one subcommand with resolved parameters. The result carries the
/// constants, version and resolved configuration alongside the numbers.
json run_command(Subcommand target, const ParamMap& params, const PhysicalConstants& k);

struct SweepRow {
  int index = 0;
  double value = 0.0;  ///< SI value of the swept parameter
  std::optional<json> result;
  std::string error;  ///< non-empty for failed points

  bool ok() const { return error.empty(); }
};

struct SweepTable {
  Subcommand target = Subcommand::ideal;
  SweepSpec spec;
  std::vector<SweepRow> rows;  ///< in sweep order

  std::size_t failures() const;
};

/// Sweep values, endpoints exact; count parameters are rounded.
std::vector<double> sweep_values(const SweepSpec& spec, bool integral);

/// Evaluates the target at every sweep point. Failing points become error
/// rows; throws std::runtime_error when every point fails.
SweepTable run_sweep(const RunConfig& cfg, const PhysicalConstants& k);

json to_json(const SweepTable& table, const PhysicalConstants& k);

/// Writes a single result or a sweep document in the requested format.
void emit(std::ostream& os, const json& doc, OutputFormat format, bool is_sweep);

/// Full command-line behaviour. Returns the process exit status: 0 on
/// success with no error rows, 1 when a computation or sweep point failed,
/// 2 for invalid usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir
