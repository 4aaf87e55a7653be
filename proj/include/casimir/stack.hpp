#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/real_mirrors.hpp"

namespace casimir {

/// Which separation the finite-conductivity factor is evaluated at.
enum class EtaGap { optical, physical };

const char* to_string(EtaGap g);
EtaGap eta_gap_from_string(const std::string& s);

struct ForceReference {
  std::string label;
  double force = 0.0;  ///< N
};

inline constexpr double kDefaultNoiseFloor = 5e-17;  // N

/// N_l identical rigid cavities stacked along the radial direction.
struct StackConfig {
  std::int64_t layers = 1;
  double disk_diameter = 0.0;  ///< m
  double gap = 0.0;            ///< m, physical plate separation
  SpacerMaterial spacer;
  MirrorMaterial mirror;
  double layer_pitch = 0.0;  ///< m, metal plates + spacer per layer
  double g = 9.81;           ///< m / s^2
  std::optional<double> reduction_override;
  EtaGap eta_gap = EtaGap::optical;
  /// Optional declared total; only checked against layers * layer_pitch.
  std::optional<double> declared_total_thickness;
  std::vector<ForceReference> references{{"gw_detector_reference", kDefaultNoiseFloor}};

  double area() const { return kPi * disk_diameter * disk_diameter / 4.0; }
  double total_thickness() const { return static_cast<double>(layers) * layer_pitch; }
  double optical_gap() const { return spacer.refractive_index * gap; }

  /// Throws ValidationError listing every violated invariant.
  void validate() const;
};

struct ReferenceComparison {
  std::string label;
  double reference_force = 0.0;  ///< N
  double ratio = 0.0;            ///< |F_total| / reference
};

struct ForceReport {
  double force_total = 0.0;      ///< N, radial, positive outward
  double force_per_layer = 0.0;  ///< N
  double eta_used = 1.0;
  std::string eta_source;  ///< "override" or "lifshitz"
  std::optional<double> eta_optical_gap;
  std::optional<double> eta_physical_gap;
  double eta_error_estimate = 0.0;
  double optical_gap = 0.0;  ///< m
  double area = 0.0;         ///< m^2
  double total_thickness = 0.0;
  StackConfig config;
  PhysicalConstants constants;
  std::vector<ReferenceComparison> reference_comparisons;
  std::vector<std::string> notes;
  std::string version;
};

struct StackOptions {
  LifshitzOptions lifshitz;
  /// Evaluate eta at both the optical and the physical gap (only the
  /// configured one is used for the force).
  bool report_both_eta = true;
};

/// Total weak-field force on the stack,
///   F = eta N_l A pi^2 hbar c / (240 (n a)^3) * g / c^2, outward.
ForceReport stack_force(const StackConfig& cfg, const PhysicalConstants& k,
                        const StackOptions& opts = {});

struct Detectability {
  double ratio = 0.0;
  bool detectable = false;
  double noise_floor = kDefaultNoiseFloor;
};

/// |F_total| / noise_floor; detectable only when strictly above one.
Detectability detectability(const ForceReport& report, double noise_floor = kDefaultNoiseFloor);

/// Weight of the whole body, A * total thickness * density * g.
double body_weight(const StackConfig& cfg, double mean_density);

double force_to_weight_ratio(const ForceReport& report, double mean_density);
double force_to_weight_ratio(const StackConfig& cfg, double mean_density,
                             const PhysicalConstants& k);

struct StackConstraints {
  double gap_min = 0.0;          ///< m
  double gap_max = 0.0;          ///< m
  double total_thickness = 0.0;  ///< m
  double layer_overhead = 0.0;   ///< m, non-gap material per layer
  double disk_diameter = 0.0;    ///< m
  double g = 9.81;               ///< m / s^2
};

struct OptimizerOptions {
  int grid_points = 128;
  int refine_iterations = 60;
  EtaGap eta_gap = EtaGap::optical;
  LifshitzOptions lifshitz;
};

struct TracePoint {
  double gap = 0.0;
  std::int64_t layers = 0;
  double eta = 0.0;
  double force_total = 0.0;
  std::string stage;  ///< "grid" or "refine"
};

struct OptimizationResult {
  StackConfig best_config;
  ForceReport best_report;
  std::vector<TracePoint> trace;
};

/// Layer count that fits in the thickness budget, floor(T / (overhead + a)),
/// with a 1e-9 relative allowance for representation error in T / pitch.
std::int64_t layers_for_gap(const StackConstraints& c, double gap);

/// Maximizes the total force over the gap with layers = layers_for_gap(gap):
/// a uniform grid over the feasible gap range followed by golden-section
/// refinement around the best grid point. Returns the best point evaluated.
/// Throws InfeasibleError naming the violated constraint.
OptimizationResult optimize_stack(const StackConstraints& constraints,
                                  const MirrorMaterial& mirror, const SpacerMaterial& spacer,
                                  const PhysicalConstants& k, const OptimizerOptions& opts = {});

/// Text attached to every stack report about the static nature of the signal.
extern const char* const kStaticSignalNote;

}  // namespace casimir
