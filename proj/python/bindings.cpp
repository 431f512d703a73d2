#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "erfpoly/asymptotics.hpp"
#include "erfpoly/commands.hpp"
#include "erfpoly/contour_oracle.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/figures.hpp"
#include "erfpoly/polynomial.hpp"
#include "erfpoly/ray.hpp"
#include "erfpoly/saddle.hpp"
#include "erfpoly/special_functions.hpp"
#include "erfpoly/verify.hpp"

namespace py = pybind11;
using namespace erfpoly;

namespace {

py::tuple log_tuple(const LogValue& v) { return py::make_tuple(v.sign, v.log_magnitude); }

py::object to_pyint(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

Regime regime_from(const std::string& name) {
  const auto r = parse_regime(name);
  if (!r) throw py::value_error("unknown regime " + name);
  return *r;
}

}  // namespace

PYBIND11_MODULE(_erfpoly, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.def("poly_coeffs", [](int n) {
    const Polynomial p = poly_at(n);
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_pyint(c));
    return out;
  });
  m.def("poly_value", [](int n, const std::string& x) { return eval_exact(poly_at(n), parse_rational(x)).get_str(); });
  m.def("log_scaled", [](int n, double x) { return log_tuple(eval_log_scaled(poly_at(n), exact_rational(x))); });
  m.def("inverf_deriv", &cmd_inverf_deriv);

  m.def("erf", &erfpoly::erf);
  m.def("erfc", &erfpoly::erfc);
  m.def("inverf", &inverf);
  m.def("lambert_w0", &lambert_w0);
  m.def("zeta", [](double x) { return log_tuple(zeta_fn(x)); });

  m.def("estimate", [](const std::string& regime, double x, int n) {
    switch (regime_from(regime)) {
      case Regime::kPsi1: return log_tuple(psi1(x, n).value);
      case Regime::kPsi1Refined: return log_tuple(psi1_refined(x, n).value);
      case Regime::kPsi2: return log_tuple(psi2(n * x, n).value);
      case Regime::kPsi3: return log_tuple(psi3(x, n).value);
      case Regime::kPsi4: return log_tuple(psi4(x, n).value);
    }
    throw py::value_error("unknown regime");
  }, py::arg("regime"), py::arg("x"), py::arg("n"));

  m.def("solve_saddle", [](double x, double n, bool negative) {
    return solve_saddle(x, n, negative ? Branch::kNegative : Branch::kPositive).s;
  }, py::arg("x"), py::arg("n"), py::arg("negative") = false);

  m.def("contour_oracle", [](double x, int n) { return contour_oracle(x, n).real_part; });

  m.def("ray_state", [](double t, double s) {
    const RayState r = ray_state(t, s);
    py::dict d;
    d["t"] = r.t; d["s"] = r.s; d["x"] = r.x; d["n"] = r.n;
    d["p"] = r.p; d["q"] = r.q; d["f"] = r.f; d["g"] = r.g; d["J"] = r.J;
    return d;
  });

  m.def("figure", [](const std::string& id, const std::optional<std::string>& grid) {
    const auto f = parse_figure_id(id);
    if (!f) throw py::value_error("unknown figure " + id);
    const Table t = make_figure(*f, grid ? parse_grid(*grid) : GridOverride{});
    return py::make_tuple(t.columns, t.rows);
  }, py::arg("id"), py::arg("grid") = std::nullopt);

  m.def("verify", [](const std::string& suite) {
    const auto s = parse_suite(suite);
    if (!s) throw py::value_error("unknown suite " + suite);
    py::list out;
    for (const auto& rep : run_suite(*s)) {
      for (const auto& c : rep.checks) out.append(py::make_tuple(rep.suite, c.name, c.measured, c.tolerance, c.passed));
    }
    return out;
  });
}
