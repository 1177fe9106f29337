#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mjue/asymptotics.hpp"
#include "mjue/errors.hpp"
#include "mjue/fredholm.hpp"
#include "mjue/harness.hpp"
#include "mjue/kernels.hpp"
#include "mjue/orthopoly.hpp"
#include "mjue/quadrature.hpp"
#include "mjue/special_functions.hpp"

namespace py = pybind11;
using namespace mjue;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> to_array(const Matrix& m) {
  py::array_t<double> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto r = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return out;
}

py::tuple rule_tuple(const QuadratureRule& r) {
  return py::make_tuple(to_array(r.nodes), to_array(r.weights));
}

ChebSeries h_from(const py::object& h) {
  if (py::isinstance<py::str>(h)) {
    const auto name = h.cast<std::string>();
    if (!name.empty() && name.front() == '@') return read_cheb_series(name.substr(1));
    return builtin_h(name);
  }
  if (py::isinstance<ChebSeries>(h)) return h.cast<ChebSeries>();
  return ChebSeries(h.cast<std::vector<double>>());
}

py::dict report_dict(const ConvergenceReport& r, const std::string& path) {
  if (!path.empty()) emit_csv(r, path);
  py::list rows;
  for (const auto& s : r.samples) {
    py::dict d;
    d["n"] = s.n;
    d["max_err"] = s.max_err;
    d["fit_err"] = s.fit_err;
    d["target"] = s.target;
    rows.append(d);
  }
  py::dict out;
  out["rows"] = rows;
  out["order"] = r.samples.size() >= 2 ? py::cast(r.fit.order) : py::none();
  out["constant"] = r.samples.size() >= 2 ? py::cast(r.fit.constant) : py::none();
  out["pass"] = r.pass;
  out["csv"] = to_csv(r);
  return out;
}

py::dict run_study_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  const ExperimentConfig cfg = config_from_json(j);
  py::dict out;
  switch (cfg.study) {
    case StudyKind::density:
      out = report_dict(run_density_study(cfg), cfg.out);
      break;
    case StudyKind::bulk:
      out = report_dict(run_bulk_study(cfg), cfg.out);
      break;
    case StudyKind::edge:
      out = report_dict(run_edge_study(cfg), cfg.out);
      break;
    case StudyKind::gap: {
      const GapReport r = run_gap_study(cfg);
      py::list rows;
      for (const auto& g : r.rows) {
        py::dict d;
        d["s"] = g.s;
        d["n"] = g.n;
        d["P_finite"] = g.p_finite;
        d["P_limit"] = g.p_limit;
        d["abs_diff"] = g.abs_diff;
        rows.append(d);
      }
      out["rows"] = rows;
      out["pass"] = r.monotone;
      out["csv"] = to_csv(r);
      if (!cfg.out.empty()) emit_csv(r, cfg.out);
      break;
    }
    case StudyKind::asymptotics: {
      const AsymptoticsReport r = run_asymptotics_study(cfg);
      py::list rows;
      for (const auto& a : r.rows) {
        py::dict d;
        d["n"] = a.n;
        d["bulk_err"] = a.bulk_err;
        d["edge_err"] = a.edge_err;
        rows.append(d);
      }
      out["rows"] = rows;
      out["bulk_ratios"] = r.bulk_ratios;
      out["edge_ratios"] = r.edge_ratios;
      out["pass"] = r.pass;
      out["csv"] = to_csv(r);
      if (!cfg.out.empty()) emit_csv(r, cfg.out);
      break;
    }
    case StudyKind::recurrence: {
      const RecurrenceTable t = run_recurrence_study(cfg);
      out["a"] = to_array(t.a);
      out["b"] = to_array(t.b);
      out["pass"] = true;
      out["csv"] = to_csv(t);
      if (!cfg.out.empty()) emit_csv(t, cfg.out);
      break;
    }
  }
  out["study"] = to_string(cfg.study);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthogonal polynomials, kernels and gap probabilities for modified Jacobi weights";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def("gamma", &gamma_real, py::arg("x"));
  m.def(
      "bessel_j",
      [](double order, double z) {
        const BesselEval e = bessel_eval(order, z);
        return py::make_tuple(e.value, e.derivative);
      },
      py::arg("order"), py::arg("z"), "J_order(z) and its derivative.");

  m.def(
      "gauss_legendre", [](int n, double lo, double hi) { return rule_tuple(gauss_legendre_rule(n, lo, hi)); },
      py::arg("m"), py::arg("lo") = -1.0, py::arg("hi") = 1.0);
  m.def(
      "gauss_jacobi", [](int n, double a, double b) { return rule_tuple(gauss_jacobi_rule(n, a, b)); },
      py::arg("m"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "gauss_jacobi_shifted",
      [](int n, double a, double s) { return rule_tuple(gauss_jacobi_shifted_rule(n, a, s)); },
      py::arg("m"), py::arg("alpha"), py::arg("length"), "Rule for u^alpha on (0, length).");

  py::class_<ChebSeries>(m, "ChebSeries")
      .def(py::init<std::vector<double>>(), py::arg("coefficients"))
      .def("__call__", &ChebSeries::operator(), py::arg("x"))
      .def_property_readonly("coefficients",
                             [](const ChebSeries& c) {
                               const auto s = c.coefficients();
                               return std::vector<double>(s.begin(), s.end());
                             })
      .def("__len__", &ChebSeries::size);
  m.def("builtin_h", [](const std::string& name) { return builtin_h(name); }, py::arg("name"));
  m.def("cheb_fit", &cheb_fit, py::arg("f"), py::arg("tol") = kChebFitTolerance,
        py::arg("max_degree") = kChebFitMaxDegree);

  py::class_<ModifiedJacobiWeight>(m, "Weight")
      .def(py::init([](double a, double b, const py::object& h) {
             return ModifiedJacobiWeight(a, b, h_from(h));
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("h") = "one")
      .def_property_readonly("alpha", &ModifiedJacobiWeight::alpha)
      .def_property_readonly("beta", &ModifiedJacobiWeight::beta)
      .def_property_readonly("h", &ModifiedJacobiWeight::h)
      .def("__call__", [](const ModifiedJacobiWeight& w, double x) { return weight_eval(w, x); });

  py::class_<RecurrenceTable>(m, "RecurrenceTable")
      .def_readonly("N", &RecurrenceTable::N)
      .def_property_readonly("a", [](const RecurrenceTable& t) { return to_array(t.a); })
      .def_property_readonly("b", [](const RecurrenceTable& t) { return to_array(t.b); })
      .def("mass", &RecurrenceTable::mass);
  m.def("recurrence_table", &recurrence_table, py::arg("weight"), py::arg("N"));
  m.def(
      "orthonormal_values",
      [](const RecurrenceTable& t, int n, double x) {
        const OrthonormalValues v = eval_orthonormal(t, n, x);
        return py::make_tuple(to_array(v.values), to_array(v.derivatives));
      },
      py::arg("table"), py::arg("n"), py::arg("x"));
  m.def("scaled_monic_value", &scaled_monic_value, py::arg("table"), py::arg("n"), py::arg("x"),
        "2^n pi_n(x).");

  py::class_<KernelContext>(m, "KernelContext")
      .def(py::init<ModifiedJacobiWeight, int>(), py::arg("weight"), py::arg("n"))
      .def(py::init<ModifiedJacobiWeight, RecurrenceTable, int>(), py::arg("weight"),
           py::arg("table"), py::arg("n"))
      .def_property_readonly("n", &KernelContext::n)
      .def_property_readonly("weight", &KernelContext::weight)
      .def_property_readonly("table", &KernelContext::table);
  m.def("kernel", &kernel_cd, py::arg("ctx"), py::arg("x"), py::arg("y"));
  m.def("kernel_sum", &kernel_sum, py::arg("ctx"), py::arg("x"), py::arg("y"));
  m.def("scaled_bulk", &scaled_bulk, py::arg("ctx"), py::arg("x"), py::arg("u"), py::arg("v"));
  m.def("scaled_edge", &scaled_edge, py::arg("ctx"), py::arg("u"), py::arg("v"));
  m.def("scaled_edge_reduced", &scaled_edge_reduced, py::arg("ctx"), py::arg("u"), py::arg("v"));
  m.def(
      "scaled_edge_reduced_matrix",
      [](const KernelContext& ctx, const std::vector<double>& u) {
        return to_array(scaled_edge_reduced_matrix(ctx, u));
      },
      py::arg("ctx"), py::arg("nodes"));
  m.def("sine_kernel", &sine_kernel, py::arg("u"), py::arg("v"));
  m.def("bessel_kernel", &bessel_kernel, py::arg("alpha"), py::arg("u"), py::arg("v"));
  m.def("bessel_kernel_reduced", &bessel_kernel_reduced, py::arg("alpha"), py::arg("u"),
        py::arg("v"));

  py::class_<SzegoData>(m, "SzegoData")
      .def_static("from_weight", &SzegoData::from_weight, py::arg("weight"))
      .def_readonly("d_infty", &SzegoData::d_infty);
  m.def("phi", &phi_map, py::arg("z"));
  m.def("psi", &psi_phase, py::arg("data"), py::arg("x"));
  m.def("szego_exterior", &szego_exterior, py::arg("data"), py::arg("z"));
  m.def(
      "szego_boundary",
      [](const SzegoData& d, double x, const std::string& side) {
        if (side != "above" && side != "below") throw DomainError("side must be 'above' or 'below'");
        return szego_boundary(d, x, side == "above" ? Side::above : Side::below);
      },
      py::arg("data"), py::arg("x"), py::arg("side") = "above");
  m.def("arcsine_density", &arcsine_density, py::arg("x"));
  m.def("bulk_pi_asymptotic", &bulk_pi_asymptotic_scaled, py::arg("data"), py::arg("n"),
        py::arg("x"), py::arg("delta") = kRegionDelta, "Leading-order 2^n pi_n(x) in the bulk.");
  m.def("edge_pi_asymptotic", &edge_pi_asymptotic_scaled, py::arg("data"), py::arg("n"),
        py::arg("x"), py::arg("delta") = kRegionDelta, "Leading-order 2^n pi_n(x) near x = 1.");

  m.def("bessel_gap_probability", &bessel_gap_probability, py::arg("alpha"), py::arg("s"),
        py::arg("m") = 64);
  m.def("finite_gap_probability", &finite_gap_probability, py::arg("ctx"), py::arg("s"),
        py::arg("m") = 64);

  m.def("run_study_json", &run_study_json, py::arg("config_json"));
}
