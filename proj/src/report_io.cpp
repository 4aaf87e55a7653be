#include "casimir/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>

namespace casimir {

void to_json(json& j, const PhysicalConstants& k) {
  j = json{{"hbar", k.hbar},
           {"c", k.c},
           {"G", k.G},
           {"hbar_c", k.hbar_c},
           {"pi_sq_hbar_c_over_720", k.pi_sq_hbar_c_over_720},
           {"pi_sq_hbar_c_over_240", k.pi_sq_hbar_c_over_240}};
}

void from_json(const json& j, PhysicalConstants& k) {
  k = PhysicalConstants::from_base(j.at("hbar").get<double>(), j.at("c").get<double>(),
                                   j.at("G").get<double>());
}

void to_json(json& j, const CavityGeometry& g) {
  j = json{{"area", g.area}, {"gap", g.gap}, {"optical_gap", g.optical_gap}};
}

void from_json(const json& j, CavityGeometry& g) {
  g.area = j.at("area").get<double>();
  g.gap = j.at("gap").get<double>();
  g.optical_gap = j.at("optical_gap").get<double>();
}

void to_json(json& j, const MirrorMaterial& m) {
  j = json{{"plasma_wavelength", m.plasma_wavelength}, {"plasma_frequency", m.plasma_frequency}};
}

void from_json(const json& j, MirrorMaterial& m) {
  m.plasma_wavelength = j.at("plasma_wavelength").get<double>();
  m.plasma_frequency = j.at("plasma_frequency").get<double>();
}

void to_json(json& j, const SpacerMaterial& s) { j = json{{"refractive_index", s.refractive_index}}; }

void from_json(const json& j, SpacerMaterial& s) {
  s.refractive_index = j.at("refractive_index").get<double>();
}

void to_json(json& j, const ForceReference& r) { j = json{{"label", r.label}, {"force", r.force}}; }

void from_json(const json& j, ForceReference& r) {
  r.label = j.at("label").get<std::string>();
  r.force = j.at("force").get<double>();
}

void to_json(json& j, const StackConfig& c) {
  j = json{{"layers", c.layers},
           {"disk_diameter", c.disk_diameter},
           {"gap", c.gap},
           {"spacer", c.spacer},
           {"mirror", c.mirror},
           {"layer_pitch", c.layer_pitch},
           {"g", c.g},
           {"reduction_override", c.reduction_override ? json(*c.reduction_override) : json()},
           {"eta_gap", to_string(c.eta_gap)},
           {"declared_total_thickness",
            c.declared_total_thickness ? json(*c.declared_total_thickness) : json()},
           {"references", c.references}};
}

namespace {

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(); }

}  // namespace

void from_json(const json& j, StackConfig& c) {
  c.layers = j.at("layers").get<std::int64_t>();
  c.disk_diameter = j.at("disk_diameter").get<double>();
  c.gap = j.at("gap").get<double>();
  c.spacer = j.at("spacer").get<SpacerMaterial>();
  c.mirror = j.at("mirror").get<MirrorMaterial>();
  c.layer_pitch = j.at("layer_pitch").get<double>();
  c.g = j.at("g").get<double>();
  c.reduction_override = optional_number(j, "reduction_override");
  c.eta_gap = eta_gap_from_string(j.at("eta_gap").get<std::string>());
  c.declared_total_thickness = optional_number(j, "declared_total_thickness");
  c.references = j.at("references").get<std::vector<ForceReference>>();
}

void to_json(json& j, const ReferenceComparison& r) {
  j = json{{"label", r.label}, {"reference_force", r.reference_force}, {"ratio", r.ratio}};
}

void from_json(const json& j, ReferenceComparison& r) {
  r.label = j.at("label").get<std::string>();
  r.reference_force = j.at("reference_force").get<double>();
  r.ratio = j.at("ratio").get<double>();
}

void to_json(json& j, const ForceReport& r) {
  j = json{{"force_total", r.force_total},
           {"force_per_layer", r.force_per_layer},
           {"direction", "outward"},
           {"eta_used", r.eta_used},
           {"eta_source", r.eta_source},
           {"eta_optical_gap", optional_json(r.eta_optical_gap)},
           {"eta_physical_gap", optional_json(r.eta_physical_gap)},
           {"eta_error_estimate", r.eta_error_estimate},
           {"optical_gap", r.optical_gap},
           {"area", r.area},
           {"total_thickness", r.total_thickness},
           {"reference_comparisons", r.reference_comparisons},
           {"notes", r.notes},
           {"config", r.config},
           {"constants", r.constants},
           {"version", r.version}};
}

void from_json(const json& j, ForceReport& r) {
  r.force_total = j.at("force_total").get<double>();
  r.force_per_layer = j.at("force_per_layer").get<double>();
  r.eta_used = j.at("eta_used").get<double>();
  r.eta_source = j.at("eta_source").get<std::string>();
  r.eta_optical_gap = optional_number(j, "eta_optical_gap");
  r.eta_physical_gap = optional_number(j, "eta_physical_gap");
  r.eta_error_estimate = j.at("eta_error_estimate").get<double>();
  r.optical_gap = j.at("optical_gap").get<double>();
  r.area = j.at("area").get<double>();
  r.total_thickness = j.at("total_thickness").get<double>();
  r.reference_comparisons = j.at("reference_comparisons").get<std::vector<ReferenceComparison>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.config = j.at("config").get<StackConfig>();
  r.constants = j.at("constants").get<PhysicalConstants>();
  r.version = j.at("version").get<std::string>();
}

void to_json(json& j, const GravitationalSource& s) {
  j = json{{"mass", s.mass},
           {"radius", s.radius},
           {"alpha", s.alpha},
           {"alpha_over_r", s.alpha_over_r},
           {"g_local", s.g_local},
           {"potential_factor", s.potential_factor},
           {"weak_field", s.weak_field}};
}

void to_json(json& j, const RegularizationResult& r) {
  const auto& d = r.diagnostics;
  json diag{{"method", to_string(d.method)}};
  if (d.method == RegularizationMethod::abel_plana_quadrature) {
    diag["upper_limit"] = d.upper_limit;
    diag["tail_bound"] = d.tail_bound;
    diag["subdivisions"] = d.subdivisions;
    diag["evaluations"] = d.evaluations;
  } else {
    json steps = json::array();
    for (const auto& s : d.steps) {
      steps.push_back({{"epsilon", s.epsilon}, {"partial_sum", s.partial_sum}, {"remainder", s.remainder}});
    }
    diag["steps"] = steps;
    diag["richardson_diagonal"] = d.extrapolated;
    diag["rounding_bound"] = d.rounding_bound;
  }
  j = json{{"method", to_string(d.method)},
           {"finite_part", r.finite_part},
           {"energy_coefficient", r.energy_coefficient},
           {"error_estimate", r.error_estimate},
           {"relative_error_estimate", r.relative_error_estimate()},
           {"diagnostics", diag}};
}

void to_json(json& j, const OracleEnergy& e) {
  j = json{{"energy", e.energy}, {"error_estimate", e.error_estimate}};
}

void to_json(json& j, const LifshitzIntegral& i) {
  j = json{{"value", i.value},
           {"error_estimate", i.error_estimate},
           {"tail_bound", i.tail_bound},
           {"outer_subdivisions", i.outer_subdivisions},
           {"max_inner_subdivisions", i.max_inner_subdivisions},
           {"evaluations", i.evaluations}};
}

void to_json(json& j, const ReductionFactor& r) {
  j = json{{"eta", r.eta},
           {"error_estimate", r.error_estimate},
           {"real_value", r.real_value},
           {"ideal_value", r.ideal_value},
           {"quadrature", r.integral}};
}

void to_json(json& j, const Detectability& d) {
  j = json{{"ratio", d.ratio}, {"detectable", d.detectable}, {"noise_floor", d.noise_floor}};
}

void to_json(json& j, const TracePoint& p) {
  j = json{{"gap", p.gap},
           {"layers", p.layers},
           {"eta", p.eta},
           {"force_total", p.force_total},
           {"stage", p.stage}};
}

void to_json(json& j, const OptimizationResult& r) {
  j = json{{"best_config", r.best_config}, {"best_report", r.best_report}, {"trace", r.trace}};
}

namespace io {

namespace {

void flatten_into(const json& node, const std::string& prefix, FlatRow& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten_into(node[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    out.emplace_back(prefix, node);
  }
}

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  return format_number(v.get<double>());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> union_columns(const std::vector<FlatRow>& rows) {
  std::vector<std::string> cols;
  std::map<std::string, bool> seen;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row) {
      if (seen.emplace(key, true).second) cols.push_back(key);
    }
  }
  return cols;
}

}  // namespace

FlatRow flatten(const json& doc) {
  FlatRow out;
  flatten_into(doc, "", out);
  return out;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<FlatRow>& rows) {
  const auto cols = union_columns(rows);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
  os << '\n';
  for (const auto& row : rows) {
    std::map<std::string, const json*> cells;
    for (const auto& [key, value] : row) cells[key] = &value;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ',';
      auto it = cells.find(cols[i]);
      if (it != cells.end()) os << csv_escape(cell_text(*it->second));
    }
    os << '\n';
  }
}

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool any = false;
  char ch;
  while (is.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (is.peek() == '"') {
          cell += '"';
          is.get();
        } else {
          quoted = false;
        }
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      out.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      cell += ch;
    }
  }
  if (any) {
    row.push_back(std::move(cell));
    out.push_back(std::move(row));
  }
  return out;
}

void write_table(std::ostream& os, const std::vector<FlatRow>& rows) {
  if (rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& [key, _] : rows.front()) width = std::max(width, key.size());
    for (const auto& [key, value] : rows.front()) {
      os << key << std::string(width - key.size() + 2, ' ') << cell_text(value) << '\n';
    }
    return;
  }
  const auto cols = union_columns(rows);
  std::vector<std::vector<std::string>> cells(rows.size(), std::vector<std::string>(cols.size()));
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::map<std::string, const json*> lookup;
    for (const auto& [key, value] : rows[r]) lookup[key] = &value;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto it = lookup.find(cols[c]);
      if (it != lookup.end()) cells[r][c] = cell_text(*it->second);
      width[c] = std::max(width[c], cells[r][c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      os << line[c] << std::string(width[c] - line[c].size() + (c + 1 < cols.size() ? 2 : 0), ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace io
}  // namespace casimir
