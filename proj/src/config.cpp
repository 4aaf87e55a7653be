#include "casimir/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "casimir/errors.hpp"
#include "json.hpp"

namespace casimir {

namespace {

using units::Kind;
using json = nlohmann::json;

ParamSpec quantity(std::string name, Kind kind, std::optional<std::string> def, std::string help) {
  return {std::move(name), ParamType::quantity, kind, std::move(def), std::move(help)};
}
ParamSpec count(std::string name, std::optional<std::string> def, std::string help) {
  return {std::move(name), ParamType::count, Kind::dimensionless, std::move(def), std::move(help)};
}
ParamSpec text(std::string name, std::optional<std::string> def, std::string help) {
  return {std::move(name), ParamType::text, Kind::dimensionless, std::move(def), std::move(help)};
}

std::vector<ParamSpec> plate_params() {
  return {quantity("area", Kind::area, std::nullopt, "plate area (default 1m2)"),
          quantity("diameter", Kind::length, std::nullopt, "disk diameter, alternative to area"),
          quantity("side", Kind::length, std::nullopt, "square side L, alternative to area"),
          quantity("index", Kind::dimensionless, "1", "spacer refractive index n")};
}

std::vector<ParamSpec> with(std::vector<ParamSpec> base, std::vector<ParamSpec> more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

const std::set<std::string> kGlobalKeys = {"config", "format", "out"};
const std::set<std::string> kSweepKeys = {"target", "param", "scale", "start", "stop", "points"};

}  // namespace

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::ideal: return "ideal";
    case Subcommand::oracle: return "oracle";
    case Subcommand::gravity: return "gravity";
    case Subcommand::eta: return "eta";
    case Subcommand::stack: return "stack";
    case Subcommand::optimize: return "optimize";
    case Subcommand::sweep: return "sweep";
  }
  return "unknown";
}

std::optional<Subcommand> subcommand_from_string(const std::string& s) {
  for (auto c : {Subcommand::ideal, Subcommand::oracle, Subcommand::gravity, Subcommand::eta,
                 Subcommand::stack, Subcommand::optimize, Subcommand::sweep}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

const std::vector<ParamSpec>& parameter_schema(Subcommand s) {
  static const std::vector<ParamSpec> ideal =
      with({quantity("gap", Kind::length, std::nullopt, "plate separation a")}, plate_params());
  static const std::vector<ParamSpec> oracle = with(
      {text("method", "abel-plana", "abel-plana | cutoff"),
       quantity("tolerance", Kind::dimensionless, std::nullopt,
                "relative target (default 1e-10 abel-plana, 1e-5 cutoff)"),
       count("max-subdivisions", "200", "quadrature subdivision budget"),
       {"eps", ParamType::number_list, Kind::dimensionless, "0.2,0.1,0.05,0.025",
        "cutoff values, strictly decreasing"},
       quantity("gap", Kind::length, std::nullopt, "also assemble the cavity energy at this gap")},
      plate_params());
  static const std::vector<ParamSpec> gravity = with(
      {quantity("gap", Kind::length, std::nullopt, "plate separation a"),
       quantity("mass", Kind::mass, std::nullopt, "source mass M"),
       quantity("radius", Kind::length, std::nullopt, "radial coordinate r"),
       quantity("g", Kind::acceleration, std::nullopt, "local acceleration, instead of M and r"),
       quantity("size-ratio", Kind::dimensionless, "1000", "require sqrt(A) < r / ratio")},
      plate_params());
  static const std::vector<ParamSpec> eta = {
      quantity("gap", Kind::length, std::nullopt, "plate separation a"),
      quantity("plasma-wavelength", Kind::length, "100nm", "metal plasma wavelength"),
      quantity("index", Kind::dimensionless, "1", "spacer index; eta is reported at a and n a"),
      quantity("tolerance", Kind::dimensionless, "1e-8", "quadrature relative tolerance")};
  static const std::vector<ParamSpec> stack = {
      count("layers", "1e6", "number of layers N_l"),
      quantity("diameter", Kind::length, "10cm", "disk diameter"),
      quantity("gap", Kind::length, "5nm", "plate separation a"),
      quantity("pitch", Kind::length, "100nm", "thickness of one layer"),
      quantity("thickness", Kind::length, std::nullopt, "declared total thickness (checked)"),
      quantity("index", Kind::dimensionless, "1.46", "spacer refractive index n"),
      quantity("plasma-wavelength", Kind::length, "100nm", "metal plasma wavelength"),
      quantity("g", Kind::acceleration, "9.81m/s2", "local gravitational acceleration"),
      quantity("eta", Kind::dimensionless, std::nullopt, "override the reduction factor"),
      text("eta-gap", "optical", "optical | physical gap for eta"),
      quantity("noise-floor", Kind::force, "5e-17N", "reference detectable force"),
      quantity("density", Kind::density, "2400kg/m3", "mean density for the weight ratio"),
      quantity("tolerance", Kind::dimensionless, "1e-8", "quadrature relative tolerance")};
  static const std::vector<ParamSpec> optimize = {
      quantity("gap-min", Kind::length, "5nm", "smallest admissible gap"),
      quantity("gap-max", Kind::length, "60nm", "largest admissible gap"),
      quantity("thickness", Kind::length, "10cm", "total thickness budget"),
      quantity("overhead", Kind::length, "95nm", "non-gap material per layer"),
      quantity("diameter", Kind::length, "10cm", "disk diameter"),
      quantity("g", Kind::acceleration, "9.81m/s2", "local gravitational acceleration"),
      quantity("index", Kind::dimensionless, "1.46", "spacer refractive index n"),
      quantity("plasma-wavelength", Kind::length, "100nm", "metal plasma wavelength"),
      text("eta-gap", "optical", "optical | physical gap for eta"),
      count("grid-points", "128", "uniform grid size before refinement"),
      count("refine-iterations", "60", "golden-section iterations"),
      quantity("noise-floor", Kind::force, "5e-17N", "reference detectable force"),
      quantity("tolerance", Kind::dimensionless, "1e-8", "quadrature relative tolerance")};
  static const std::vector<ParamSpec> none;

  switch (s) {
    case Subcommand::ideal: return ideal;
    case Subcommand::oracle: return oracle;
    case Subcommand::gravity: return gravity;
    case Subcommand::eta: return eta;
    case Subcommand::stack: return stack;
    case Subcommand::optimize: return optimize;
    case Subcommand::sweep: return none;
  }
  return none;
}

ParamValue parse_param(const ParamSpec& spec, const std::string& raw) {
  ParamValue v;
  v.raw = raw;
  switch (spec.type) {
    case ParamType::quantity:
      v.value = units::parse_quantity(raw, spec.kind);
      break;
    case ParamType::count: {
      const double x = units::parse_quantity(raw, Kind::dimensionless);
      if (x < 0.0 || x != std::floor(x) || x > 9.0e18) {
        throw std::invalid_argument("'" + raw + "' is not a non-negative integer");
      }
      v.value = x;
      break;
    }
    case ParamType::text:
      break;
    case ParamType::number_list: {
      std::stringstream ss(raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        v.list.push_back(units::parse_quantity(item, Kind::dimensionless));
      }
      if (v.list.empty()) throw std::invalid_argument("empty list");
      break;
    }
  }
  return v;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  std::string file_text;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw ValidationError({"cannot read config file '" + path + "'"});
      std::ostringstream ss;
      ss << in.rdbuf();
      file_text = ss.str();
    }
  }
  return parse_config(args, file_text);
}

RunConfig parse_config(const std::vector<std::string>& args, const std::string& file_text) {
  std::vector<std::string> problems;
  std::map<std::string, std::string> flags;
  std::optional<std::string> sub_name;

  std::size_t i = 0;
  if (!args.empty() && args[0].rfind("--", 0) != 0) {
    sub_name = args[0];
    i = 1;
  }
  for (; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0 || tok.size() == 2) {
      problems.push_back("unexpected argument '" + tok + "'");
      continue;
    }
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      flags[tok.substr(2, eq - 2)] = tok.substr(eq + 1);
    } else if (i + 1 < args.size()) {
      flags[tok.substr(2)] = args[++i];
    } else {
      problems.push_back("flag '" + tok + "' is missing a value");
    }
  }

  // Config file layer.
  std::map<std::string, std::string> file_params;
  std::map<std::string, std::string> file_sweep;
  std::map<std::string, std::string> file_output;
  std::optional<std::string> file_sub, file_target;
  if (!file_text.empty()) {
    auto scalar_text = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    try {
      const json doc = json::parse(file_text);
      if (!doc.is_object()) throw std::invalid_argument("top level must be an object");
      for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "subcommand") {
          file_sub = scalar_text(v);
        } else if (key == "target") {
          file_target = scalar_text(v);
        } else if (key == "parameters" || key == "sweep" || key == "output") {
          if (!v.is_object()) {
            problems.push_back("config file: '" + key + "' must be an object");
            continue;
          }
          auto& dest = key == "parameters" ? file_params : key == "sweep" ? file_sweep : file_output;
          for (auto p = v.begin(); p != v.end(); ++p) {
            dest[p.key()] = p.value().is_array() ? [&] {
              std::string joined;
              for (const auto& e : p.value()) joined += (joined.empty() ? "" : ",") + scalar_text(e);
              return joined;
            }() : scalar_text(p.value());
          }
        } else {
          problems.push_back("config file: unknown key '" + key + "'");
        }
      }
    } catch (const json::exception& e) {
      problems.push_back(std::string("config file is not valid JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      problems.push_back(std::string("config file: ") + e.what());
    }
  }

  RunConfig cfg;
  const std::string sub_text = sub_name ? *sub_name : file_sub.value_or("");
  if (sub_text.empty()) {
    problems.push_back("no subcommand given");
    throw ValidationError(std::move(problems));
  }
  const auto sub = subcommand_from_string(sub_text);
  if (!sub) {
    problems.push_back("unknown subcommand '" + sub_text + "'");
    throw ValidationError(std::move(problems));
  }
  cfg.subcommand = *sub;
  cfg.target = *sub;

  // Sweep keys: flags override the file's sweep block.
  std::map<std::string, std::string> sweep_raw;
  for (const auto& [k, v] : file_sweep) {
    const std::string key = k == "parameter" ? "param" : k;
    if (!kSweepKeys.count(key) || key == "target") {
      problems.push_back("config file: unknown sweep key '" + k + "'");
    } else {
      sweep_raw[key] = v;
    }
  }
  if (file_target) sweep_raw["target"] = *file_target;

  std::map<std::string, std::string> params = file_params;
  for (const auto& [k, v] : flags) {
    if (k == "config") continue;
    if (k == "format") {
      file_output["format"] = v;
    } else if (k == "out") {
      file_output["path"] = v;
    } else if (kSweepKeys.count(k)) {
      sweep_raw[k] = v;
    } else {
      params[k] = v;
    }
  }

  if (cfg.subcommand == Subcommand::sweep) {
    auto t = sweep_raw.count("target") ? subcommand_from_string(sweep_raw["target"]) : std::nullopt;
    if (!t || *t == Subcommand::sweep) {
      problems.push_back("sweep needs --target <ideal|oracle|gravity|eta|stack|optimize>");
      throw ValidationError(std::move(problems));
    }
    cfg.target = *t;
  } else if (!sweep_raw.empty()) {
    for (const auto& [k, _] : sweep_raw) {
      problems.push_back("'" + k + "' is only valid for the sweep subcommand");
    }
  }

  const auto& schema = parameter_schema(cfg.target);
  auto find_spec = [&](const std::string& key) -> const ParamSpec* {
    for (const auto& s : schema) {
      if (s.name == key) return &s;
    }
    return nullptr;
  };

  for (const auto& [k, raw] : params) {
    const ParamSpec* spec = find_spec(k);
    if (!spec) {
      problems.push_back("unknown key '" + k + "' for " + to_string(cfg.target));
      continue;
    }
    try {
      cfg.parameters[k] = parse_param(*spec, raw);
    } catch (const std::invalid_argument& e) {
      problems.push_back(k + ": " + e.what());
    }
  }
  for (const auto& spec : schema) {
    if (cfg.parameters.count(spec.name) || !spec.default_value) continue;
    ParamValue v = parse_param(spec, *spec.default_value);
    v.from_default = true;
    cfg.parameters[spec.name] = v;
  }

  if (cfg.subcommand == Subcommand::sweep) {
    SweepSpec sw;
    const ParamSpec* spec = nullptr;
    if (!sweep_raw.count("param")) {
      problems.push_back("sweep needs --param <name>");
    } else {
      sw.parameter = sweep_raw["param"];
      spec = find_spec(sw.parameter);
      if (!spec || !(spec->type == ParamType::quantity || spec->type == ParamType::count)) {
        problems.push_back("sweep parameter '" + sw.parameter + "' is not a numeric field of " +
                           to_string(cfg.target));
        spec = nullptr;
      }
    }
    const std::string scale = sweep_raw.count("scale") ? sweep_raw["scale"] : "linear";
    if (scale == "linear") {
      sw.scale = SweepScale::linear;
    } else if (scale == "log") {
      sw.scale = SweepScale::log;
    } else {
      problems.push_back("sweep scale must be linear or log (got '" + scale + "')");
    }
    for (const char* end : {"start", "stop"}) {
      if (!sweep_raw.count(end)) {
        problems.push_back(std::string("sweep needs --") + end);
        continue;
      }
      if (!spec) continue;
      try {
        const double v = units::parse_quantity(sweep_raw[end], spec->kind);
        (std::string(end) == "start" ? sw.start : sw.stop) = v;
        (std::string(end) == "start" ? sw.start_raw : sw.stop_raw) = sweep_raw[end];
      } catch (const std::invalid_argument& e) {
        problems.push_back(std::string("sweep ") + end + ": " + e.what());
      }
    }
    try {
      const double pts = sweep_raw.count("points")
                             ? units::parse_quantity(sweep_raw["points"], Kind::dimensionless)
                             : 2.0;
      if (pts < 2 || pts != std::floor(pts) || pts > 1e6) {
        problems.push_back("sweep points must be an integer >= 2");
      } else {
        sw.points = static_cast<int>(pts);
      }
    } catch (const std::invalid_argument& e) {
      problems.push_back(std::string("sweep points: ") + e.what());
    }
    if (sw.scale == SweepScale::log && spec && !(sw.start > 0.0 && sw.stop > 0.0)) {
      problems.push_back("log sweep needs positive start and stop");
    }
    cfg.sweep = sw;
  }

  for (const auto& [k, v] : file_output) {
    if (k == "format") {
      if (v == "json") {
        cfg.output.format = OutputFormat::json;
      } else if (v == "csv") {
        cfg.output.format = OutputFormat::csv;
      } else if (v == "table") {
        cfg.output.format = OutputFormat::table;
      } else {
        problems.push_back("format must be json, csv or table (got '" + v + "')");
      }
    } else if (k == "path") {
      if (!v.empty() && v != "-") cfg.output.path = v;
    } else {
      problems.push_back("config file: unknown output key '" + k + "'");
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return cfg;
}

std::string usage() {
  std::ostringstream os;
  os << "usage: casimir <subcommand> [--key value ...] [--config file.json]\n"
        "                [--format json|csv|table] [--out path]\n\n"
        "subcommands:\n";
  for (auto s : {Subcommand::ideal, Subcommand::oracle, Subcommand::gravity, Subcommand::eta,
                 Subcommand::stack, Subcommand::optimize}) {
    os << "  " << to_string(s) << "\n";
    for (const auto& p : parameter_schema(s)) {
      os << "      --" << p.name;
      if (p.default_value) os << " (default " << *p.default_value << ")";
      os << "  " << p.help << "\n";
    }
  }
  os << "  sweep --target <subcommand> --param <key> --scale linear|log --start X --stop Y"
        " --points N [target flags]\n\n"
        "units: lengths m km cm mm um nm pm; areas m2 cm2 mm2 um2 nm2; Hz kHz MHz GHz THz PHz;\n"
        "       forces N mN uN nN pN fN aN; masses kg g; m/s2; kg/m3 g/cm3\n";
  return os.str();
}

}  // namespace casimir
