// Python bindings for the spectral core, Besov toolkit, admissibility
// checker and solver. Coefficients cross the boundary as numpy arrays of
// shape (ncomp, N, N[, N]).

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leray/io.hpp"
#include "leray/product_checks.hpp"
#include "leray/semigroup_checks.hpp"
#include "leray/suites.hpp"

namespace py = pybind11;
using namespace leray;

namespace {

py::array_t<std::complex<double>> coeffs_array(const SpectralField& f) {
  std::vector<py::ssize_t> shape{f.ncomp};
  for (int d = 0; d < f.grid.n; ++d) shape.push_back(f.grid.N);
  py::array_t<std::complex<double>> out(shape);
  std::copy(f.coeffs.begin(), f.coeffs.end(), out.mutable_data());
  return out;
}

SpectralField field_from_array(const TorusGrid& grid, py::array_t<std::complex<double>> arr) {
  auto buf = arr.request();
  if (buf.ndim != grid.n + 1) throw std::invalid_argument("coeffs must have shape (ncomp, N, ...)");
  const int ncomp = static_cast<int>(buf.shape[0]);
  for (int d = 0; d < grid.n; ++d) {
    if (buf.shape[d + 1] != grid.N) throw std::invalid_argument("coeffs shape does not match grid");
  }
  SpectralField f(grid, ncomp);
  auto contiguous = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>(arr);
  std::copy(contiguous.data(), contiguous.data() + f.coeffs.size(), f.coeffs.begin());
  return f;
}

py::dict report_dict(const EstimateReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["case"] = r.case_label;
  d["params"] = r.params;
  d["grid"] = r.grid_desc;
  d["n_samples"] = r.n_samples;
  d["fitted_constant"] = r.fitted_constant;
  d["fitted_exponent"] = r.fitted_exponent;
  d["predicted_exponent"] = r.predicted_exponent;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(pyleray, m) {
  m.doc() = "pseudo-spectral generalized Leray-alpha solver and estimate verification toolkit";

  py::class_<TorusGrid>(m, "TorusGrid")
      .def(py::init<int, int, double>(), py::arg("n"), py::arg("N"), py::arg("L") = 2.0 * M_PI)
      .def_readonly("n", &TorusGrid::n)
      .def_readonly("N", &TorusGrid::N)
      .def_readonly("L", &TorusGrid::L)
      .def("modes", &TorusGrid::modes)
      .def("__repr__", [](const TorusGrid& g) {
        return "TorusGrid(n=" + std::to_string(g.n) + ", N=" + std::to_string(g.N) + ")";
      });

  py::class_<SpectralField>(m, "SpectralField")
      .def(py::init([](const TorusGrid& g, int ncomp) { return SpectralField(g, ncomp); }),
           py::arg("grid"), py::arg("ncomp"))
      .def_static("from_coeffs", &field_from_array, py::arg("grid"), py::arg("coeffs"))
      .def_readonly("grid", &SpectralField::grid)
      .def_readonly("ncomp", &SpectralField::ncomp)
      .def_readonly("div_free", &SpectralField::div_free)
      .def("coeffs", &coeffs_array)
      .def("l2_norm", &SpectralField::l2_norm)
      .def("divergence_residual", &SpectralField::divergence_residual)
      .def("hermitian_residual", &SpectralField::hermitian_residual)
      .def("hermitian_symmetrize", &SpectralField::hermitian_symmetrize);

  py::class_<SymbolSpec>(m, "SymbolSpec")
      .def_readonly("gamma", &SymbolSpec::gamma)
      .def("g_value", &SymbolSpec::g_value)
      .def("g_derivative", &SymbolSpec::g_derivative)
      .def("symbol", &SymbolSpec::symbol)
      .def("semigroup_factor", &SymbolSpec::semigroup_factor)
      .def("__repr__", &SymbolSpec::describe);

  m.def("registered_g", &registered_g, py::arg("id"), py::arg("gamma"),
        py::arg("params") = std::vector<double>{});

  m.def("apply_multiplier", &apply_multiplier);
  m.def("semigroup_apply", &semigroup_apply);
  m.def("helmholtz_forward", &helmholtz_forward);
  m.def("helmholtz_inverse", &helmholtz_inverse);
  m.def("leray_project", &leray_project);
  m.def("divergence", &divergence);
  m.def("tensor_product", &tensor_product);
  py::enum_<WForm>(m, "WForm")
      .value("OneMinusAlphaL2", WForm::OneMinusAlphaL2)
      .value("OnePlusAlphaL2", WForm::OnePlusAlphaL2);
  m.def("nonlinear_W", &nonlinear_W, py::arg("u"), py::arg("v"), py::arg("alpha"), py::arg("s2"),
        py::arg("form") = WForm::OneMinusAlphaL2);
  m.def("inner_product_l2", &inner_product_l2);
  m.def("lp_norm_physical", &lp_norm_physical);
  m.def("sobolev_norm", &sobolev_norm);

  py::class_<SpectralTensorField>(m, "SpectralTensorField")
      .def_readonly("grid", &SpectralTensorField::grid);

  py::class_<LPFilterBank>(m, "LPFilterBank")
      .def(py::init<const TorusGrid&>())
      .def("j_max", &LPFilterBank::j_max)
      .def("covered_radius", &LPFilterBank::covered_radius)
      .def("partition_residual", &LPFilterBank::partition_residual);

  py::class_<BesovParams>(m, "BesovParams")
      .def(py::init<double, double, double>(), py::arg("s"), py::arg("p"), py::arg("q"))
      .def_readonly("s", &BesovParams::s)
      .def_readonly("p", &BesovParams::p)
      .def_readonly("q", &BesovParams::q);

  m.def("lp_block", &lp_block);
  m.def("besov_norm", &besov_norm);
  m.def("paraproduct_decompose", [](const SpectralField& f, const SpectralField& g, const LPFilterBank& b) {
    auto parts = paraproduct_decompose(f, g, b);
    return py::make_tuple(parts.low_high, parts.high_low, parts.resonant);
  });
  m.def("dealiased_product", &dealiased_product);

  py::enum_<TheoremVariant>(m, "TheoremVariant")
      .value("A", TheoremVariant::A)
      .value("B", TheoremVariant::B);

  py::class_<AdmissibilityParams>(m, "AdmissibilityParams")
      .def(py::init<>())
      .def_readwrite("gamma1", &AdmissibilityParams::gamma1)
      .def_readwrite("gamma2", &AdmissibilityParams::gamma2)
      .def_readwrite("n", &AdmissibilityParams::n)
      .def_readwrite("p", &AdmissibilityParams::p)
      .def_readwrite("s1", &AdmissibilityParams::s1)
      .def_readwrite("s2", &AdmissibilityParams::s2)
      .def_readwrite("log_variant", &AdmissibilityParams::log_variant)
      .def_readwrite("eps_log", &AdmissibilityParams::eps_log);

  py::class_<AdmissibilityResult>(m, "AdmissibilityResult")
      .def_readonly("admissible", &AdmissibilityResult::admissible)
      .def_readonly("failed_inequality", &AdmissibilityResult::failed_inequality)
      .def_property_readonly("checks", [](const AdmissibilityResult& r) {
        py::list out;
        for (const auto& c : r.checks) {
          py::dict d;
          d["text"] = c.text;
          d["holds"] = c.holds;
          d["lhs"] = c.lhs;
          d["rhs"] = c.rhs;
          out.append(d);
        }
        return out;
      })
      .def_property_readonly("witness_k", [](const AdmissibilityResult& r) -> py::object {
        if (r.witness_k) return py::float_(*r.witness_k);
        return py::none();
      });

  m.def("check_admissibility", &check_admissibility);

  py::class_<InitialDataSpec>(m, "InitialDataSpec")
      .def(py::init<>())
      .def_readwrite("kind", &InitialDataSpec::kind)
      .def_readwrite("sigma", &InitialDataSpec::sigma)
      .def_readwrite("amplitude", &InitialDataSpec::amplitude)
      .def_readwrite("mode", &InitialDataSpec::mode)
      .def_readwrite("direction", &InitialDataSpec::direction);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("n", &SolverConfig::n)
      .def_readwrite("N", &SolverConfig::N)
      .def_readwrite("L", &SolverConfig::L)
      .def_readwrite("alpha", &SolverConfig::alpha)
      .def_readwrite("nu", &SolverConfig::nu)
      .def_readwrite("gamma1", &SolverConfig::gamma1)
      .def_readwrite("g1_id", &SolverConfig::g1_id)
      .def_readwrite("g1_params", &SolverConfig::g1_params)
      .def_readwrite("gamma2", &SolverConfig::gamma2)
      .def_readwrite("g2_id", &SolverConfig::g2_id)
      .def_readwrite("g2_params", &SolverConfig::g2_params)
      .def_readwrite("s1", &SolverConfig::s1)
      .def_readwrite("s2", &SolverConfig::s2)
      .def_readwrite("p", &SolverConfig::p)
      .def_readwrite("q", &SolverConfig::q)
      .def_readwrite("T", &SolverConfig::T)
      .def_readwrite("dt", &SolverConfig::dt)
      .def_readwrite("w_variant", &SolverConfig::w_variant)
      .def_readwrite("seed", &SolverConfig::seed)
      .def_readwrite("output_cadence", &SolverConfig::output_cadence)
      .def_readwrite("initial_data", &SolverConfig::initial_data)
      .def_readwrite("disable_nonlinear", &SolverConfig::disable_nonlinear)
      .def_readwrite("blowup_factor", &SolverConfig::blowup_factor)
      .def("validate", &SolverConfig::validate);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("u", &TrajectorySample::u)
      .def_readonly("l2", &TrajectorySample::l2)
      .def_readonly("hs1", &TrajectorySample::hs1)
      .def_readonly("bs1", &TrajectorySample::bs1)
      .def_readonly("bs2", &TrajectorySample::bs2)
      .def_readonly("weighted_bs2", &TrajectorySample::weighted_bs2);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("blown_up", &Trajectory::blown_up)
      .def_readonly("blowup_time", &Trajectory::blowup_time)
      .def_readonly("steps_taken", &Trajectory::steps_taken);

  m.def("make_initial_data", &make_initial_data);
  m.def("integrate", &integrate, py::call_guard<py::gil_scoped_release>());
  m.def("picard_iterate", [](const SpectralField& u0, const SolverConfig& cfg, int n_iter) {
    const PicardResult r = picard_iterate(u0, cfg, n_iter);
    py::dict d;
    d["times"] = r.times;
    d["contraction_ratios"] = r.contraction_ratios;
    d["x_distances"] = r.x_distances;
    d["blown_up"] = r.blown_up;
    d["final"] = r.final_iterate;
    return d;
  });

  m.def("monitor_X_norm", [](const Trajectory& traj, double s1, double s2, double p, double q, double g1) {
    const XNormReport r = monitor_X_norm(traj, s1, s2, p, q, g1);
    py::dict d;
    d["sup_deviation_bs1"] = r.sup_deviation_bs1;
    d["sup_weighted_bs2"] = r.sup_weighted_bs2;
    d["small_time_weighted"] = r.small_time_weighted;
    return d;
  });

  m.def("smoothing_diagnostic", [](const Trajectory& traj, const std::vector<double>& rs, double s1, double g1) {
    py::list out;
    for (const auto& row : smoothing_diagnostic(traj, rs, s1, g1)) {
      py::dict d;
      d["r"] = row.r;
      d["supremum"] = row.supremum;
      d["attained_t"] = row.attained_t;
      d["supremum_half"] = row.supremum_half;
      out.append(d);
    }
    return out;
  });

  m.def("global_criterion_monitor", [](const SolverConfig& cfg) {
    const GlobalCriterionResult r = global_criterion_monitor(cfg);
    py::dict d;
    d["verdict"] = r.verdict == GlobalVerdict::GlobalRegime ? "GLOBAL-REGIME" : "LOCAL-ONLY";
    d["rate_condition"] = r.rate_condition;
    d["integral_divergent"] = r.integral_verdict == IntegralVerdict::Divergent;
    d["warnings"] = r.warnings;
    return d;
  });

  m.def("check_mikhlin",
        [](const SymbolSpec& s, int k_max) { return report_dict(check_mikhlin(s, k_max)); });
  m.def("check_kernel_condition", [](const SymbolSpec& s, double gamma, int n) {
    return report_dict(check_kernel_condition(s, gamma, n));
  });
  m.def("check_global_integral", [](const SymbolSpec& g1, const SymbolSpec& g2) {
    const auto r = check_global_integral(g1, g2);
    py::dict d = report_dict(r.report);
    d["verdict"] = r.verdict == IntegralVerdict::Divergent ? "DIVERGENT" : "CONVERGENT";
    d["partial_integral"] = r.partial_integral;
    return d;
  });
  m.def("verify_semigroup_lp_lq", [](const SymbolSpec& s, int n, double p, double q) {
    return report_dict(verify_semigroup_lp_lq(s, n, p, q));
  });
  m.def("verify_sobolev_smoothing", [](const SymbolSpec& s, double s1, double s2, double p) {
    return report_dict(verify_sobolev_smoothing(s, s1, s2, p));
  });

  m.def("run_suite", [](const std::string& name) {
    const SuiteResult r = run_suite(name, std::nullopt);
    py::list reps;
    for (const auto& rep : r.reports) reps.append(report_dict(rep));
    py::dict d;
    d["reports"] = reps;
    d["all_pass"] = r.all_pass;
    return d;
  });

  m.def("write_checkpoint", [](const std::string& path, const SpectralField& f) {
    write_checkpoint(path, f);
  });
  m.def("read_checkpoint", [](const std::string& path) { return read_checkpoint(path); });

  m.attr("__version__") = LERAY_VERSION;
}
