#include "casimir/stack.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

#ifndef CASIMIR_VERSION
#define CASIMIR_VERSION "dev"
#endif

namespace casimir {

const char* const kStaticSignalNote =
    "static signal: the computed force is constant in time, while detector reference "
    "levels apply to signals at tens of Hz; detection requires modulating the force";

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double eta_for(const StackConfig& cfg, EtaGap which, const PhysicalConstants& k,
               const LifshitzOptions& opts, double* error = nullptr) {
  const double gap = which == EtaGap::optical ? cfg.optical_gap() : cfg.gap;
  const auto r = reduction_factor(gap, cfg.mirror, k, opts);
  if (error) *error = r.error_estimate;
  return r.eta;
}

// Same expression as stack_force, used by the optimizer's inner loop.
double eq7_per_layer(double eta, double area, double optical_gap, double g,
                     const PhysicalConstants& k) {
  const double na3 = optical_gap * optical_gap * optical_gap;
  return eta * area * k.pi_sq_hbar_c_over_240 / na3 * (g / (k.c * k.c));
}

}  // namespace

const char* to_string(EtaGap g) { return g == EtaGap::optical ? "optical" : "physical"; }

EtaGap eta_gap_from_string(const std::string& s) {
  if (s == "optical") return EtaGap::optical;
  if (s == "physical") return EtaGap::physical;
  throw ValidationError({"eta gap must be 'optical' or 'physical' (got '" + s + "')"});
}

void StackConfig::validate() const {
  std::vector<std::string> problems;
  if (layers < 1) problems.push_back("layers must be >= 1 (got " + std::to_string(layers) + ")");
  if (!positive_finite(disk_diameter)) problems.push_back("disk diameter must be > 0");
  if (!positive_finite(gap)) problems.push_back("gap must be > 0");
  if (!positive_finite(layer_pitch)) problems.push_back("layer pitch must be > 0");
  if (positive_finite(gap) && positive_finite(layer_pitch) && !(gap < layer_pitch)) {
    problems.push_back("gap (" + fmt(gap) + " m) must be smaller than the layer pitch (" +
                       fmt(layer_pitch) + " m)");
  }
  if (!std::isfinite(g) || g < 0.0) problems.push_back("g must be finite and >= 0");
  if (!std::isfinite(spacer.refractive_index) || spacer.refractive_index < 1.0) {
    problems.push_back("spacer refractive index must be >= 1");
  }
  if (!positive_finite(mirror.plasma_wavelength)) {
    problems.push_back("plasma wavelength must be > 0");
  }
  if (reduction_override && !(*reduction_override > 0.0 && *reduction_override <= 1.0)) {
    problems.push_back("reduction override must lie in (0, 1]");
  }
  if (declared_total_thickness && !positive_finite(*declared_total_thickness)) {
    problems.push_back("declared total thickness must be > 0");
  }
  for (const auto& r : references) {
    if (!positive_finite(r.force)) problems.push_back("reference force '" + r.label + "' must be > 0");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

ForceReport stack_force(const StackConfig& cfg, const PhysicalConstants& k,
                        const StackOptions& opts) {
  cfg.validate();

  ForceReport rep;
  rep.config = cfg;
  rep.constants = k;
  rep.version = CASIMIR_VERSION;
  rep.optical_gap = cfg.optical_gap();
  rep.area = cfg.area();
  rep.total_thickness = cfg.total_thickness();

  if (cfg.reduction_override) {
    rep.eta_used = *cfg.reduction_override;
    rep.eta_source = "override";
  } else {
    rep.eta_source = "lifshitz";
    double err = 0.0;
    const double used = eta_for(cfg, cfg.eta_gap, k, opts.lifshitz, &err);
    rep.eta_used = used;
    rep.eta_error_estimate = err;
    const EtaGap other = cfg.eta_gap == EtaGap::optical ? EtaGap::physical : EtaGap::optical;
    std::optional<double> other_eta;
    if (opts.report_both_eta) {
      other_eta = cfg.optical_gap() == cfg.gap ? used : eta_for(cfg, other, k, opts.lifshitz);
    }
    if (cfg.eta_gap == EtaGap::optical) {
      rep.eta_optical_gap = used;
      rep.eta_physical_gap = other_eta;
    } else {
      rep.eta_physical_gap = used;
      rep.eta_optical_gap = other_eta;
    }
  }

  rep.force_per_layer = eq7_per_layer(rep.eta_used, rep.area, rep.optical_gap, cfg.g, k);
  rep.force_total = static_cast<double>(cfg.layers) * rep.force_per_layer;

  for (const auto& r : cfg.references) {
    rep.reference_comparisons.push_back({r.label, r.force, std::abs(rep.force_total) / r.force});
  }
  rep.notes.emplace_back(kStaticSignalNote);
  if (cfg.declared_total_thickness) {
    const double declared = *cfg.declared_total_thickness;
    if (std::abs(rep.total_thickness - declared) > 1e-6 * declared) {
      rep.notes.push_back("layer accounting: layers * pitch = " + fmt(rep.total_thickness) +
                          " m differs from the declared total thickness " + fmt(declared) +
                          " m; layers * pitch is used");
    }
  }
  return rep;
}

Detectability detectability(const ForceReport& report, double noise_floor) {
  if (!positive_finite(noise_floor)) throw DomainError("noise floor must be > 0");
  Detectability d;
  d.noise_floor = noise_floor;
  d.ratio = std::abs(report.force_total) / noise_floor;
  d.detectable = d.ratio > 1.0;
  return d;
}

double body_weight(const StackConfig& cfg, double mean_density) {
  if (!positive_finite(mean_density)) throw DomainError("mean density must be > 0");
  return cfg.area() * cfg.total_thickness() * mean_density * cfg.g;
}

double force_to_weight_ratio(const ForceReport& report, double mean_density) {
  return std::abs(report.force_total) / body_weight(report.config, mean_density);
}

double force_to_weight_ratio(const StackConfig& cfg, double mean_density,
                             const PhysicalConstants& k) {
  StackOptions opts;
  opts.report_both_eta = false;
  return force_to_weight_ratio(stack_force(cfg, k, opts), mean_density);
}

std::int64_t layers_for_gap(const StackConstraints& c, double gap) {
  const double ratio = c.total_thickness / (c.layer_overhead + gap);
  return static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-9)));
}

OptimizationResult optimize_stack(const StackConstraints& c, const MirrorMaterial& mirror,
                                  const SpacerMaterial& spacer, const PhysicalConstants& k,
                                  const OptimizerOptions& opts) {
  std::vector<std::string> problems;
  if (!positive_finite(c.gap_min)) problems.push_back("gap_min must be > 0");
  if (!positive_finite(c.gap_max)) problems.push_back("gap_max must be > 0");
  if (!positive_finite(c.total_thickness)) problems.push_back("total_thickness must be > 0");
  if (!positive_finite(c.layer_overhead)) problems.push_back("layer_overhead must be > 0");
  if (!positive_finite(c.disk_diameter)) problems.push_back("disk_diameter must be > 0");
  if (!std::isfinite(c.g) || c.g < 0.0) problems.push_back("g must be finite and >= 0");
  if (opts.grid_points < 2) problems.push_back("grid_points must be >= 2");
  if (!problems.empty()) throw ValidationError(std::move(problems));

  if (c.gap_min > c.gap_max) {
    throw InfeasibleError("gap_min (" + fmt(c.gap_min) + " m) exceeds gap_max (" +
                          fmt(c.gap_max) + " m)");
  }
  const double lo = c.gap_min;
  const double hi = std::min(c.gap_max, c.total_thickness - c.layer_overhead);
  if (layers_for_gap(c, lo) < 1 || hi < lo) {
    throw InfeasibleError("total_thickness (" + fmt(c.total_thickness) +
                          " m) cannot hold one layer of layer_overhead + gap_min (" +
                          fmt(c.layer_overhead + c.gap_min) + " m)");
  }

  const double area = kPi * c.disk_diameter * c.disk_diameter / 4.0;
  OptimizationResult out;

  auto evaluate = [&](double gap, const char* stage) {
    TracePoint p;
    p.gap = gap;
    p.layers = layers_for_gap(c, gap);
    p.stage = stage;
    const double opt_gap = spacer.refractive_index * gap;
    const double eval_gap = opts.eta_gap == EtaGap::optical ? opt_gap : gap;
    p.eta = reduction_factor(eval_gap, mirror, k, opts.lifshitz).eta;
    p.force_total = static_cast<double>(p.layers) * eq7_per_layer(p.eta, area, opt_gap, c.g, k);
    out.trace.push_back(p);
    return p.force_total;
  };

  if (hi == lo) {
    evaluate(lo, "grid");
  } else {
    const int n = opts.grid_points;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
      grid[i] = i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    int best = 0;
    double best_f = -1.0;
    for (int i = 0; i < n; ++i) {
      const double f = evaluate(grid[i], "grid");
      if (f > best_f) {
        best_f = f;
        best = i;
      }
    }

    // Golden-section maximization inside the neighbouring grid cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid[std::max(best - 1, 0)];
    double b = grid[std::min(best + 1, n - 1)];
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = evaluate(x1, "refine");
    double f2 = evaluate(x2, "refine");
    for (int it = 0; it < opts.refine_iterations && (b - a) > 1e-9 * b; ++it) {
      if (f1 >= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = evaluate(x1, "refine");
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = evaluate(x2, "refine");
      }
    }
  }

  // Argmax over everything evaluated; ties resolve to the smaller gap.
  const TracePoint* best = &out.trace.front();
  for (const auto& p : out.trace) {
    if (p.force_total > best->force_total ||
        (p.force_total == best->force_total && p.gap < best->gap)) {
      best = &p;
    }
  }

  StackConfig cfg;
  cfg.layers = best->layers;
  cfg.disk_diameter = c.disk_diameter;
  cfg.gap = best->gap;
  cfg.spacer = spacer;
  cfg.mirror = mirror;
  cfg.layer_pitch = c.layer_overhead + best->gap;
  cfg.g = c.g;
  cfg.eta_gap = opts.eta_gap;
  out.best_config = cfg;

  StackOptions sopts;
  sopts.lifshitz = opts.lifshitz;
  out.best_report = stack_force(cfg, k, sopts);
  return out;
}

}  // namespace casimir
