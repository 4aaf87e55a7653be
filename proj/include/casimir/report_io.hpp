#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "casimir/geometry.hpp"
#include "casimir/gravity.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/real_mirrors.hpp"
#include "casimir/stack.hpp"

namespace casimir {

using json = nlohmann::json;

// JSON field names below are part of the tool's output format; keep them
// stable.

void to_json(json& j, const PhysicalConstants& k);
void from_json(const json& j, PhysicalConstants& k);
void to_json(json& j, const CavityGeometry& g);
void from_json(const json& j, CavityGeometry& g);
void to_json(json& j, const MirrorMaterial& m);
void from_json(const json& j, MirrorMaterial& m);
void to_json(json& j, const SpacerMaterial& s);
void from_json(const json& j, SpacerMaterial& s);
void to_json(json& j, const ForceReference& r);
void from_json(const json& j, ForceReference& r);
void to_json(json& j, const StackConfig& c);
void from_json(const json& j, StackConfig& c);
void to_json(json& j, const ReferenceComparison& r);
void from_json(const json& j, ReferenceComparison& r);
void to_json(json& j, const ForceReport& r);
void from_json(const json& j, ForceReport& r);

void to_json(json& j, const GravitationalSource& s);
void to_json(json& j, const RegularizationResult& r);
void to_json(json& j, const OracleEnergy& e);
void to_json(json& j, const LifshitzIntegral& i);
void to_json(json& j, const ReductionFactor& r);
void to_json(json& j, const Detectability& d);
void to_json(json& j, const TracePoint& p);
void to_json(json& j, const OptimizationResult& r);

namespace io {

/// Scalar leaves of a JSON document keyed by dotted path ("a.b.0.c").
using FlatRow = std::vector<std::pair<std::string, json>>;
FlatRow flatten(const json& doc);

/// Number formatting shared by every text emitter: 17 significant digits,
/// enough for a lossless round trip.
std::string format_number(double v);

/// CSV with a header row. Columns are the union of all row keys in order of
/// first appearance; missing cells are empty.
void write_csv(std::ostream& os, const std::vector<FlatRow>& rows);

/// Minimal CSV reader for the files write_csv produces (quoted fields,
/// doubled quotes). Returns header followed by data rows.
std::vector<std::vector<std::string>> read_csv(std::istream& is);

/// Aligned key/value listing for a single row, or aligned columns for many.
void write_table(std::ostream& os, const std::vector<FlatRow>& rows);

}  // namespace io
}  // namespace casimir
