#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "casimir/commands.hpp"
#include "casimir/errors.hpp"
#include "casimir/gravity.hpp"
#include "casimir/ideal_cavity.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/real_mirrors.hpp"
#include "casimir/report_io.hpp"
#include "casimir/stack.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace casimir;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vacuum-fluctuation force on a rigid Casimir cavity in a weak gravitational field";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def_static("from_base", &PhysicalConstants::from_base, py::arg("hbar"), py::arg("c"),
                  py::arg("G"))
      .def_readonly("hbar", &PhysicalConstants::hbar)
      .def_readonly("c", &PhysicalConstants::c)
      .def_readonly("G", &PhysicalConstants::G)
      .def_readonly("hbar_c", &PhysicalConstants::hbar_c)
      .def_readonly("pi_sq_hbar_c_over_720", &PhysicalConstants::pi_sq_hbar_c_over_720)
      .def_readonly("pi_sq_hbar_c_over_240", &PhysicalConstants::pi_sq_hbar_c_over_240);
  m.def("codata_constants", &codata_constants);

  py::class_<CavityGeometry>(m, "CavityGeometry")
      .def_static("from_area", &CavityGeometry::from_area, py::arg("area"), py::arg("gap"),
                  py::arg("refractive_index") = 1.0)
      .def_static("square", &CavityGeometry::square, py::arg("side"), py::arg("gap"),
                  py::arg("refractive_index") = 1.0)
      .def_static("disk", &CavityGeometry::disk, py::arg("diameter"), py::arg("gap"),
                  py::arg("refractive_index") = 1.0)
      .def_readonly("area", &CavityGeometry::area)
      .def_readonly("gap", &CavityGeometry::gap)
      .def_readonly("optical_gap", &CavityGeometry::optical_gap)
      .def("side", &CavityGeometry::side);

  m.def("casimir_energy", &casimir_energy, py::arg("geom"), py::arg("consts"));
  m.def("casimir_pressure", &casimir_pressure, py::arg("gap"), py::arg("consts"));
  m.def("fundamental_frequency", &fundamental_frequency, py::arg("gap"), py::arg("consts"));
  m.def("casimir_force_magnitude", &casimir_force_magnitude, py::arg("geom"), py::arg("consts"));

  py::enum_<RegularizationMethod>(m, "RegularizationMethod")
      .value("abel_plana_quadrature", RegularizationMethod::abel_plana_quadrature)
      .value("exponential_cutoff_richardson", RegularizationMethod::exponential_cutoff_richardson);

  py::class_<ModeSumSpec>(m, "ModeSumSpec")
      .def_static("abel_plana", &ModeSumSpec::abel_plana, py::arg("tolerance") = 1e-10,
                  py::arg("max_subdivisions") = 200)
      .def_static("exponential_cutoff", &ModeSumSpec::exponential_cutoff,
                  py::arg("eps") = std::vector<double>{0.2, 0.1, 0.05, 0.025},
                  py::arg("tolerance") = 1e-5)
      .def_readwrite("method", &ModeSumSpec::method)
      .def_readwrite("cutoff_values", &ModeSumSpec::cutoff_values)
      .def_readwrite("quadrature_tolerance", &ModeSumSpec::quadrature_tolerance)
      .def_readwrite("max_subdivisions", &ModeSumSpec::max_subdivisions);

  py::class_<RegularizationResult>(m, "RegularizationResult")
      .def_readonly("finite_part", &RegularizationResult::finite_part)
      .def_readonly("energy_coefficient", &RegularizationResult::energy_coefficient)
      .def_readonly("error_estimate", &RegularizationResult::error_estimate);
  py::class_<OracleEnergy>(m, "OracleEnergy")
      .def_readonly("energy", &OracleEnergy::energy)
      .def_readonly("error_estimate", &OracleEnergy::error_estimate)
      .def_readonly("regularization", &OracleEnergy::regularization);

  m.def("k_integral_reduction", &k_integral_reduction, py::arg("mode_mass"), py::arg("consts"));
  m.def("regularized_mode_sum", &regularized_mode_sum, py::arg("spec"));
  m.def("oracle_energy", &oracle_energy, py::arg("geom"), py::arg("spec"), py::arg("consts"));

  py::class_<GravitationalSource>(m, "GravitationalSource")
      .def_static("create", &GravitationalSource::create, py::arg("mass"), py::arg("radius"),
                  py::arg("consts"))
      .def_readonly("mass", &GravitationalSource::mass)
      .def_readonly("radius", &GravitationalSource::radius)
      .def_readonly("alpha", &GravitationalSource::alpha)
      .def_readonly("g_local", &GravitationalSource::g_local)
      .def_readonly("potential_factor", &GravitationalSource::potential_factor)
      .def_readonly("weak_field", &GravitationalSource::weak_field);

  m.def("redshifted_energy", &redshifted_energy, py::arg("geom"), py::arg("source"),
        py::arg("consts"), py::arg("size_ratio") = kDefaultSizeRatio);
  m.def("force_exact", &force_exact, py::arg("geom"), py::arg("source"), py::arg("consts"),
        py::arg("size_ratio") = kDefaultSizeRatio);
  m.def("force_weak_field", &force_weak_field, py::arg("geom"), py::arg("g"), py::arg("consts"));
  m.def(
      "force_as_potential_difference",
      [](const CavityGeometry& geom, double g, const PhysicalConstants& k) {
        const auto r = force_as_potential_difference(geom, g, k);
        return py::make_tuple(r.casimir_force, r.delta_phi, r.product);
      },
      py::arg("geom"), py::arg("g"), py::arg("consts"));

  py::class_<MirrorMaterial>(m, "MirrorMaterial")
      .def_static("create", &MirrorMaterial::create, py::arg("plasma_wavelength"),
                  py::arg("consts"))
      .def_static("aluminium", &MirrorMaterial::aluminium, py::arg("consts"))
      .def_readonly("plasma_wavelength", &MirrorMaterial::plasma_wavelength)
      .def_readonly("plasma_frequency", &MirrorMaterial::plasma_frequency);
  py::class_<SpacerMaterial>(m, "SpacerMaterial")
      .def_static("create", &SpacerMaterial::create, py::arg("refractive_index"))
      .def_static("silica", &SpacerMaterial::silica)
      .def_readonly("refractive_index", &SpacerMaterial::refractive_index);

  m.def("optical_gap", &optical_gap, py::arg("gap"), py::arg("spacer"));
  m.def(
      "lifshitz_pressure",
      [](double gap, const MirrorMaterial& mat, const PhysicalConstants& k, double tol) {
        LifshitzOptions o;
        o.rel_tol = tol;
        const auto r = lifshitz_pressure(gap, mat, k, o);
        return py::make_tuple(r.pressure, r.error_estimate);
      },
      py::arg("gap"), py::arg("material"), py::arg("consts"), py::arg("tolerance") = 1e-8,
      "Returns (pressure in Pa, absolute error estimate).");
  m.def(
      "reduction_factor",
      [](double gap, const MirrorMaterial& mat, const PhysicalConstants& k, double tol) {
        LifshitzOptions o;
        o.rel_tol = tol;
        return reduction_factor(gap, mat, k, o).eta;
      },
      py::arg("gap"), py::arg("material"), py::arg("consts"), py::arg("tolerance") = 1e-8);
  m.def(
      "energy_reduction_factor",
      [](double gap, const MirrorMaterial& mat, const PhysicalConstants& k) {
        return energy_reduction_factor(gap, mat, k).eta;
      },
      py::arg("gap"), py::arg("material"), py::arg("consts"));

  py::enum_<EtaGap>(m, "EtaGap").value("optical", EtaGap::optical).value("physical", EtaGap::physical);

  py::class_<StackConfig>(m, "StackConfig")
      .def(py::init<>())
      .def_readwrite("layers", &StackConfig::layers)
      .def_readwrite("disk_diameter", &StackConfig::disk_diameter)
      .def_readwrite("gap", &StackConfig::gap)
      .def_readwrite("spacer", &StackConfig::spacer)
      .def_readwrite("mirror", &StackConfig::mirror)
      .def_readwrite("layer_pitch", &StackConfig::layer_pitch)
      .def_readwrite("g", &StackConfig::g)
      .def_readwrite("reduction_override", &StackConfig::reduction_override)
      .def_readwrite("eta_gap", &StackConfig::eta_gap)
      .def("area", &StackConfig::area)
      .def("total_thickness", &StackConfig::total_thickness);

  py::class_<ForceReport>(m, "ForceReport")
      .def_readonly("force_total", &ForceReport::force_total)
      .def_readonly("force_per_layer", &ForceReport::force_per_layer)
      .def_readonly("eta_used", &ForceReport::eta_used)
      .def_readonly("eta_optical_gap", &ForceReport::eta_optical_gap)
      .def_readonly("eta_physical_gap", &ForceReport::eta_physical_gap)
      .def_readonly("optical_gap", &ForceReport::optical_gap)
      .def_readonly("notes", &ForceReport::notes)
      .def_readonly("config", &ForceReport::config)
      .def("to_json", [](const ForceReport& r) { return json(r).dump(); });

  m.def(
      "stack_force",
      [](const StackConfig& cfg, const PhysicalConstants& k) { return stack_force(cfg, k); },
      py::arg("config"), py::arg("consts"));
  m.def(
      "detectability",
      [](const ForceReport& r, double floor) {
        const auto d = detectability(r, floor);
        return py::make_tuple(d.ratio, d.detectable);
      },
      py::arg("report"), py::arg("noise_floor") = kDefaultNoiseFloor);
  m.def(
      "force_to_weight_ratio",
      [](const StackConfig& cfg, double density, const PhysicalConstants& k) {
        return force_to_weight_ratio(cfg, density, k);
      },
      py::arg("config"), py::arg("mean_density"), py::arg("consts"));

  py::class_<StackConstraints>(m, "StackConstraints")
      .def(py::init<>())
      .def_readwrite("gap_min", &StackConstraints::gap_min)
      .def_readwrite("gap_max", &StackConstraints::gap_max)
      .def_readwrite("total_thickness", &StackConstraints::total_thickness)
      .def_readwrite("layer_overhead", &StackConstraints::layer_overhead)
      .def_readwrite("disk_diameter", &StackConstraints::disk_diameter)
      .def_readwrite("g", &StackConstraints::g);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best_config", &OptimizationResult::best_config)
      .def_readonly("best_report", &OptimizationResult::best_report)
      .def_property_readonly("trace", [](const OptimizationResult& r) {
        py::list out;
        for (const auto& p : r.trace) {
          out.append(py::make_tuple(p.gap, p.layers, p.eta, p.force_total, p.stage));
        }
        return out;
      });

  m.def(
      "optimize_stack",
      [](const StackConstraints& c, const MirrorMaterial& mirror, const SpacerMaterial& spacer,
         const PhysicalConstants& k, int grid_points) {
        OptimizerOptions o;
        o.grid_points = grid_points;
        return optimize_stack(c, mirror, spacer, k, o);
      },
      py::arg("constraints"), py::arg("mirror"), py::arg("spacer"), py::arg("consts"),
      py::arg("grid_points") = 128);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (status, stdout, stderr).");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
