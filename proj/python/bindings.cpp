#include "polyexp/checks.hpp"
#include "polyexp/exact.hpp"
#include "polyexp/mellin.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/series.hpp"
#include "polyexp/transforms.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polyexp;

namespace {

/// Coefficients as fractions.Fraction, ascending powers.
py::list fractions(const std::vector<exact::BigRational>& coeffs) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::list out;
    for (const auto& c : coeffs) {
        out.append(fraction(exact::to_string(c)));
    }
    return out;
}

py::list fractions(const exact::ExactPoly& p) { return fractions(p.coefficients()); }

py::object fraction(const exact::BigRational& q) {
    return py::module_::import("fractions").attr("Fraction")(exact::to_string(q));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polyexponential functions e_s(x, lambda) and related transforms";

    // ParseError is registered last so it is matched before its base.
    auto error = py::register_exception<Error>(m, "PolyexpError");
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("abs_err", &EvalResult::abs_err)
        .def_readonly("work", &EvalResult::work)
        .def_property_readonly("method", [](const EvalResult& r) { return std::string(to_string(r.method)); })
        .def("__repr__", [](const EvalResult& r) {
            return "EvalResult(value=" + py::repr(py::cast(r.value)).cast<std::string>() +
                   ", abs_err=" + std::to_string(r.abs_err) + ", method=" + std::string(to_string(r.method)) + ")";
        });

    m.def("evaluate", &evaluate, py::arg("s"), py::arg("lam"), py::arg("x"), py::arg("tol") = default_tol);
    m.def("evaluate_scaled", &evaluate_scaled, py::arg("s"), py::arg("lam"), py::arg("x"),
          py::arg("tol") = default_tol);
    m.def("eval_series", &eval_series, py::arg("s"), py::arg("lam"), py::arg("x"), py::arg("tol") = default_tol);
    m.def("eval_negint", &eval_negint, py::arg("p"), py::arg("lam"), py::arg("x"));
    m.def("eval_via_recursion", &eval_via_recursion, py::arg("p"), py::arg("lam"), py::arg("x"),
          py::arg("tol") = 1e-11);
    m.def(
        "eval_hankel", [](Complex s, Complex l, Complex x, double tol) { return eval_hankel(s, l, x, tol); },
        py::arg("s"), py::arg("lam"), py::arg("x"), py::arg("tol") = default_tol);
    m.def("taylor_shift", &taylor_shift, py::arg("s"), py::arg("lam"), py::arg("z"), py::arg("x"), py::arg("terms"),
          py::arg("tol") = default_tol);
    m.def("generating_sum", &generating_sum, py::arg("lam"), py::arg("x"), py::arg("z"), py::arg("terms"),
          py::arg("tol") = default_tol);
    m.def("asymptotic_lambda", &asymptotic_lambda, py::arg("s"), py::arg("lam"), py::arg("x"), py::arg("order"));

    m.def(
        "riemann_zeta",
        [](Complex s, const std::string& route, double tol) {
            if (route != "eta" && route != "laplace") {
                throw Error(ErrorKind::domain, "route must be 'eta' or 'laplace'");
            }
            return riemann_zeta(s, route == "eta" ? ZetaRoute::eta : ZetaRoute::laplace, tol);
        },
        py::arg("s"), py::arg("route") = "eta", py::arg("tol") = 1e-10);
    m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def("eta", &eta, py::arg("s"), py::arg("lam") = Complex(1.0), py::arg("tol") = 1e-10);
    m.def("lerch_phi", &lerch_phi, py::arg("x"), py::arg("s"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def("mellin_transform_polyexp", &mellin_transform_polyexp, py::arg("s"), py::arg("p"), py::arg("lam"),
          py::arg("tol") = 1e-10);
    m.def("vanishing_moment", &vanishing_moment, py::arg("p"), py::arg("lam"), py::arg("tol") = 1e-12);

    m.def(
        "inverse_mellin",
        [](const std::string& rational, double x, double c) {
            const auto r = mellin::parse_rational(rational);
            return mellin::eval_expression(mellin::eval_theorem63(r, c), x);
        },
        py::arg("rational"), py::arg("x"), py::arg("c") = 1.0);
    m.def(
        "inverse_mellin_json",
        [](const std::string& rational, double c) {
            return mellin::to_json(mellin::eval_theorem63(mellin::parse_rational(rational), c));
        },
        py::arg("rational"), py::arg("c") = 1.0);
    m.def(
        "line_integral",
        [](const std::string& rational, double x, double c) {
            const auto r = mellin::parse_rational(rational);
            return mellin::oracle_line_integral(r, x, c, mellin::line_integral_height(r, x, c));
        },
        py::arg("rational"), py::arg("x"), py::arg("c") = 1.0);

    m.def(
        "h_series",
        [](Complex s, Complex l, Complex w, Complex x, double tol) { return h_direct({s, l, w, x}, tol); },
        py::arg("s"), py::arg("lam") = Complex(1.0), py::arg("w") = Complex(1.0), py::arg("x") = Complex(0.0),
        py::arg("tol") = default_tol);
    m.def("h1_closed", &h1_closed, py::arg("w"), py::arg("x"));
    m.def("h_neg_eval", &h_neg_eval, py::arg("p"), py::arg("x"));

    auto ex = m.def_submodule("exact", "Exact rational tables");
    ex.def("bernoulli", [](unsigned n) { return fraction(exact::bernoulli(n)); }, py::arg("n"));
    ex.def("stirling2", [](unsigned n, unsigned k) { return py::int_(py::str(exact::stirling2(n, k).get_str())); },
           py::arg("n"), py::arg("k"));
    ex.def("phi_poly", [](unsigned n) { return fractions(exact::phi_poly(n)); }, py::arg("n"));
    ex.def("euler_poly", [](unsigned p) { return fractions(exact::euler_poly(p)); }, py::arg("p"));
    ex.def("faulhaber_poly", [](unsigned p) { return fractions(exact::faulhaber_poly(p)); }, py::arg("p"));
    ex.def("h_neg_closed_poly", [](unsigned p) { return fractions(exact::h_neg_closed_poly(p)); }, py::arg("p"));
    ex.def("zeta_neg_int", [](unsigned p) { return fraction(exact::zeta_neg_int(p)); }, py::arg("p"));

    m.def("check_suites", &checks::suite_names);
    m.def(
        "run_checks",
        [](const std::string& suite) {
            const auto records = checks::run_suite(suite);
            return checks::to_json(suite, records);
        },
        py::arg("suite") = "all");
}
