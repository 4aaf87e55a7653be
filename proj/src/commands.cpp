#include "casimir/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "casimir/errors.hpp"
#include "casimir/gravity.hpp"
#include "casimir/ideal_cavity.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/real_mirrors.hpp"
#include "casimir/stack.hpp"

#ifndef CASIMIR_VERSION
#define CASIMIR_VERSION "dev"
#endif

namespace casimir {

namespace {

json resolved_config(Subcommand target, const ParamMap& params) {
  json cfg = json::object();
  const auto& schema = parameter_schema(target);
  for (const auto& [key, v] : params) {
    json entry{{"input", v.raw}};
    for (const auto& s : schema) {
      if (s.name != key) continue;
      if (s.type == ParamType::quantity || s.type == ParamType::count) entry["si"] = v.value;
      if (s.type == ParamType::number_list) entry["si"] = v.list;
    }
    cfg[key] = entry;
  }
  return cfg;
}

CavityGeometry plate_geometry(const ParamMap& p, double gap) {
  const double index = p.at("index").value;
  const int given = static_cast<int>(p.count("area") + p.count("diameter") + p.count("side"));
  if (given > 1) throw ValidationError({"give only one of --area, --diameter, --side"});
  if (p.count("diameter")) return CavityGeometry::disk(p.at("diameter").value, gap, index);
  if (p.count("side")) return CavityGeometry::square(p.at("side").value, gap, index);
  const double area = p.count("area") ? p.at("area").value : 1.0;
  return CavityGeometry::from_area(area, gap, index);
}

double required(const ParamMap& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw ValidationError({std::string("missing required --") + key});
  return it->second.value;
}

LifshitzOptions lifshitz_options(const ParamMap& p) {
  LifshitzOptions o;
  if (p.count("tolerance")) o.rel_tol = p.at("tolerance").value;
  return o;
}

json cmd_ideal(const ParamMap& p, const PhysicalConstants& k) {
  const auto geom = plate_geometry(p, required(p, "gap"));
  return json{{"geometry", geom},
              {"energy", casimir_energy(geom, k)},
              {"pressure", casimir_pressure(geom.optical_gap, k)},
              {"force_magnitude", casimir_force_magnitude(geom, k)},
              {"fundamental_frequency", fundamental_frequency(geom.optical_gap, k)}};
}

json cmd_oracle(const ParamMap& p, const PhysicalConstants& k) {
  const auto method = regularization_method_from_string(p.at("method").raw);
  ModeSumSpec spec = method == RegularizationMethod::abel_plana_quadrature
                         ? ModeSumSpec::abel_plana()
                         : ModeSumSpec::exponential_cutoff(p.at("eps").list);
  if (p.count("tolerance")) spec.quadrature_tolerance = p.at("tolerance").value;
  spec.max_subdivisions = static_cast<int>(p.at("max-subdivisions").value);

  json out;
  const double target = -kPi * kPi / 720.0;
  if (p.count("gap")) {
    const auto geom = plate_geometry(p, p.at("gap").value);
    const auto oe = oracle_energy(geom, spec, k);
    const double closed = casimir_energy(geom, k);
    out["regularization"] = oe.regularization;
    out["geometry"] = geom;
    out["oracle_energy"] = oe;
    out["closed_form_energy"] = closed;
    out["relative_difference"] = std::abs(oe.energy - closed) / std::abs(closed);
    out["within_error_estimate"] = std::abs(oe.energy - closed) <= oe.error_estimate;
  } else {
    out["regularization"] = regularized_mode_sum(spec);
  }
  const double coeff = out["regularization"]["energy_coefficient"].get<double>();
  out["closed_form_coefficient"] = target;
  out["coefficient_relative_deviation"] = std::abs(coeff - target) / std::abs(target);
  return out;
}

json cmd_gravity(const ParamMap& p, const PhysicalConstants& k) {
  const auto geom = plate_geometry(p, required(p, "gap"));
  const bool has_mr = p.count("mass") || p.count("radius");
  if (has_mr && p.count("g")) {
    throw ValidationError({"give either --mass and --radius, or --g, not both"});
  }
  json out{{"geometry", geom}};
  if (has_mr) {
    const auto src = GravitationalSource::create(required(p, "mass"), required(p, "radius"), k);
    const double ratio = p.at("size-ratio").value;
    const double exact = force_exact(geom, src, k, ratio);
    const double weak = force_weak_field(geom, src.g_local, k);
    out["source"] = src;
    out["flat_energy"] = casimir_energy(geom, k);
    out["redshifted_energy"] = redshifted_energy(geom, src, k, ratio);
    out["force_exact"] = exact;
    out["force_weak_field"] = weak;
    out["g_used"] = src.g_local;
    out["relative_difference"] = std::abs(exact - weak) / exact;
    const auto pd = force_as_potential_difference(geom, src.g_local, k);
    out["potential_difference"] = {
        {"casimir_force", pd.casimir_force}, {"delta_phi", pd.delta_phi}, {"product", pd.product}};
  } else {
    const double g = required(p, "g");
    const auto pd = force_as_potential_difference(geom, g, k);
    out["g_used"] = g;
    out["force_weak_field"] = force_weak_field(geom, g, k);
    out["potential_difference"] = {
        {"casimir_force", pd.casimir_force}, {"delta_phi", pd.delta_phi}, {"product", pd.product}};
  }
  out["direction"] = "outward";
  return out;
}

json eta_block(double gap, const MirrorMaterial& m, const PhysicalConstants& k,
               const LifshitzOptions& o) {
  const auto force = reduction_factor(gap, m, k, o);
  const auto energy = energy_reduction_factor(gap, m, k, o);
  return json{{"gap", gap},
              {"eta", force.eta},
              {"eta_energy", energy.eta},
              {"force_variant", force},
              {"energy_variant", energy}};
}

json cmd_eta(const ParamMap& p, const PhysicalConstants& k) {
  const double gap = required(p, "gap");
  const auto mirror = MirrorMaterial::create(p.at("plasma-wavelength").value, k);
  const auto spacer = SpacerMaterial::create(p.at("index").value);
  const auto opts = lifshitz_options(p);
  const double opt_gap = optical_gap(gap, spacer);
  json out{{"mirror", mirror}, {"spacer", spacer}, {"gap", gap}, {"optical_gap", opt_gap}};
  const json physical = eta_block(gap, mirror, k, opts);
  out["eta"] = physical["eta"];
  out["eta_energy"] = physical["eta_energy"];
  out["at_physical_gap"] = physical;
  out["at_optical_gap"] = opt_gap == gap ? physical : eta_block(opt_gap, mirror, k, opts);
  return out;
}

StackConfig stack_config(const ParamMap& p, const PhysicalConstants& k) {
  StackConfig c;
  c.layers = static_cast<std::int64_t>(p.at("layers").value);
  c.disk_diameter = p.at("diameter").value;
  c.gap = p.at("gap").value;
  c.layer_pitch = p.at("pitch").value;
  c.spacer = SpacerMaterial::create(p.at("index").value);
  c.mirror = MirrorMaterial::create(p.at("plasma-wavelength").value, k);
  c.g = p.at("g").value;
  if (p.count("eta")) c.reduction_override = p.at("eta").value;
  c.eta_gap = eta_gap_from_string(p.at("eta-gap").raw);
  if (p.count("thickness")) c.declared_total_thickness = p.at("thickness").value;
  c.references = {{"gw_detector_reference", p.at("noise-floor").value}};
  return c;
}

json cmd_stack(const ParamMap& p, const PhysicalConstants& k) {
  StackOptions opts;
  opts.lifshitz = lifshitz_options(p);
  const auto report = stack_force(stack_config(p, k), k, opts);
  const double density = p.at("density").value;
  return json{{"report", report},
              {"detectability", detectability(report, p.at("noise-floor").value)},
              {"weight", body_weight(report.config, density)},
              {"force_to_weight_ratio", force_to_weight_ratio(report, density)}};
}

json cmd_optimize(const ParamMap& p, const PhysicalConstants& k) {
  StackConstraints c;
  c.gap_min = p.at("gap-min").value;
  c.gap_max = p.at("gap-max").value;
  c.total_thickness = p.at("thickness").value;
  c.layer_overhead = p.at("overhead").value;
  c.disk_diameter = p.at("diameter").value;
  c.g = p.at("g").value;
  OptimizerOptions o;
  o.grid_points = static_cast<int>(p.at("grid-points").value);
  o.refine_iterations = static_cast<int>(p.at("refine-iterations").value);
  o.eta_gap = eta_gap_from_string(p.at("eta-gap").raw);
  o.lifshitz = lifshitz_options(p);
  const auto mirror = MirrorMaterial::create(p.at("plasma-wavelength").value, k);
  const auto spacer = SpacerMaterial::create(p.at("index").value);
  const auto result = optimize_stack(c, mirror, spacer, k, o);
  json out = result;
  out["detectability"] = detectability(result.best_report, p.at("noise-floor").value);
  return out;
}

}  // namespace

json run_command(Subcommand target, const ParamMap& params, const PhysicalConstants& k) {
  json out;
  switch (target) {
    case Subcommand::ideal: out = cmd_ideal(params, k); break;
    case Subcommand::oracle: out = cmd_oracle(params, k); break;
    case Subcommand::gravity: out = cmd_gravity(params, k); break;
    case Subcommand::eta: out = cmd_eta(params, k); break;
    case Subcommand::stack: out = cmd_stack(params, k); break;
    case Subcommand::optimize: out = cmd_optimize(params, k); break;
    case Subcommand::sweep: throw std::logic_error("run_command cannot evaluate a sweep");
  }
  out["subcommand"] = to_string(target);
  out["version"] = CASIMIR_VERSION;
  out["constants"] = k;
  out["config"] = resolved_config(target, params);
  return out;
}

std::size_t SweepTable::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.ok() ? 0 : 1;
  return n;
}

std::vector<double> sweep_values(const SweepSpec& s, bool integral) {
  std::vector<double> v(s.points);
  const int last = s.points - 1;
  for (int i = 0; i <= last; ++i) {
    const double t = static_cast<double>(i) / last;
    if (i == 0) {
      v[i] = s.start;
    } else if (i == last) {
      v[i] = s.stop;
    } else if (s.scale == SweepScale::log) {
      v[i] = std::exp(std::log(s.start) + t * (std::log(s.stop) - std::log(s.start)));
    } else {
      v[i] = s.start + t * (s.stop - s.start);
    }
    if (integral) v[i] = std::round(v[i]);
  }
  return v;
}

SweepTable run_sweep(const RunConfig& cfg, const PhysicalConstants& k) {
  if (!cfg.sweep) throw std::logic_error("run_sweep called without a sweep definition");
  SweepTable table;
  table.target = cfg.target;
  table.spec = *cfg.sweep;

  bool integral = false;
  for (const auto& s : parameter_schema(cfg.target)) {
    if (s.name == table.spec.parameter) integral = s.type == ParamType::count;
  }

  const auto values = sweep_values(table.spec, integral);
  for (std::size_t i = 0; i < values.size(); ++i) {
    SweepRow row;
    row.index = static_cast<int>(i);
    row.value = values[i];
    ParamMap params = cfg.parameters;
    ParamValue pv;
    pv.raw = io::format_number(values[i]);
    pv.value = values[i];
    params[table.spec.parameter] = pv;
    try {
      row.result = run_command(cfg.target, params, k);
    } catch (const std::exception& e) {
      row.error = e.what();
      if (row.error.empty()) row.error = "unknown error";
    }
    table.rows.push_back(std::move(row));
  }
  if (!table.rows.empty() && table.failures() == table.rows.size()) {
    throw std::runtime_error("every sweep point failed; first error: " + table.rows.front().error);
  }
  return table;
}

json to_json(const SweepTable& t, const PhysicalConstants& k) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row{{"index", r.index},
             {"sweep_value", r.value},
             {"status", r.ok() ? "ok" : "error"},
             {"error", r.error}};
    if (r.result) row["result"] = *r.result;
    rows.push_back(row);
  }
  return json{{"subcommand", "sweep"},
              {"target", to_string(t.target)},
              {"sweep",
               {{"parameter", t.spec.parameter},
                {"scale", t.spec.scale == SweepScale::log ? "log" : "linear"},
                {"start", t.spec.start},
                {"stop", t.spec.stop},
                {"points", t.spec.points}}},
              {"failures", t.failures()},
              {"rows", rows},
              {"version", CASIMIR_VERSION},
              {"constants", k}};
}

void emit(std::ostream& os, const json& doc, OutputFormat format, bool is_sweep) {
  if (format == OutputFormat::json) {
    os << doc.dump(2) << '\n';
    return;
  }
  std::vector<io::FlatRow> rows;
  if (is_sweep) {
    for (const auto& r : doc.at("rows")) rows.push_back(io::flatten(r));
  } else {
    rows.push_back(io::flatten(doc));
  }
  if (format == OutputFormat::csv) {
    io::write_csv(os, rows);
  } else {
    io::write_table(os, rows);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? 2 : 0;
  }

  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const ValidationError& e) {
    err << e.what() << "\nrun 'casimir --help' for usage\n";
    return 2;
  }

  const auto k = codata_constants();
  json doc;
  int status = 0;
  try {
    if (cfg.sweep) {
      const auto table = run_sweep(cfg, k);
      doc = to_json(table, k);
      status = table.failures() == 0 ? 0 : 1;
    } else {
      doc = run_command(cfg.target, cfg.parameters, k);
    }
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& d : e.diagnostics()) err << "  " << d << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.output.path) {
    std::ofstream file(*cfg.output.path);
    if (!file) {
      err << "error: cannot write '" << *cfg.output.path << "'\n";
      return 1;
    }
    emit(file, doc, cfg.output.format, cfg.sweep.has_value());
  } else {
    emit(out, doc, cfg.output.format, cfg.sweep.has_value());
  }
  return status;
}

}  // namespace casimir
