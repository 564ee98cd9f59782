#include "hkdfkit/bessel.hpp"
#include "hkdfkit/gauss_integrals.hpp"
#include "hkdfkit/hermite.hpp"
#include "hkdfkit/operational.hpp"
#include "hkdfkit/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hkdf;

namespace {

GaussianRational parse_g(const std::string& s) { return gaussian_from_string(s); }

ParamSet make_params(const std::map<std::string, unsigned>& indices,
                     const std::map<std::string, std::string>& scalars) {
    ParamSet ps;
    ps.indices = indices;
    for (const auto& [k, v] : scalars) ps.scalars[k] = parse_g(v);
    return ps;
}

py::dict result_dict(const IntegralResult& r) {
    py::dict d;
    d["closed_form"] = r.closed_form_value;
    d["oracle"] = r.oracle_value;
    d["error_estimate"] = r.oracle_error_estimate;
    d["relative_discrepancy"] = r.relative_discrepancy;
    d["converged"] = r.converged;
    d["pass"] = r.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hkdfkit, m) {
    m.doc() = "Exact Hermite-family polynomial algebra with numerical oracles";

    py::class_<MultiPoly>(m, "Poly")
        .def(py::init<>())
        .def_static("constant", [](const std::string& c) { return MultiPoly::constant(parse_g(c)); })
        .def_static("variable", &MultiPoly::variable)
        .def_static("from_json", &MultiPoly::from_json)
        .def("to_json", &MultiPoly::to_json)
        .def("__str__", &MultiPoly::to_string)
        .def("__repr__", &MultiPoly::to_string)
        .def("__add__", [](const MultiPoly& a, const MultiPoly& b) { return a + b; })
        .def("__sub__", [](const MultiPoly& a, const MultiPoly& b) { return a - b; })
        .def("__mul__", [](const MultiPoly& a, const MultiPoly& b) { return a * b; })
        .def("__eq__", [](const MultiPoly& a, const MultiPoly& b) { return a == b; })
        .def("is_zero", &MultiPoly::is_zero)
        .def("total_degree", &MultiPoly::total_degree)
        .def("degree_in", &MultiPoly::degree_in)
        .def("vars", &MultiPoly::vars)
        .def("diff", &MultiPoly::diff, py::arg("var"), py::arg("k") = 1)
        .def("substitute",
             [](const MultiPoly& p, const std::string& var, const std::string& value) {
                 return p.substitute(var, parse_g(value));
             })
        .def("eval", [](const MultiPoly& p, const std::map<std::string, Complex>& at) {
            return p.eval(at);
        });

    m.def("family", &family_from_id, py::arg("id"));
    m.def("hkdf2", [](unsigned n, unsigned m_) { return hkdf2(n, m_); }, py::arg("n"),
          py::arg("m"));
    m.def("hkdf_multi", &hkdf_multi, py::arg("n"), py::arg("m"));
    m.def("two_index", &two_index, py::arg("m"), py::arg("n"));
    m.def("incomplete", &incomplete, py::arg("m"), py::arg("n"));
    m.def("composite", &composite, py::arg("m"), py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("s"));
    m.def("classical_he", [](unsigned n) { return classical(n, Classical::He); });
    m.def("classical_h", [](unsigned n) { return classical(n, Classical::HPhys); });

    m.def("exp_diff",
          [](const MultiPoly& p, const std::string& v, unsigned k, const std::string& c) {
              return exp_diff(p, v, k, parse_g(c));
          });
    m.def("exp_shift", [](const MultiPoly& p, const std::string& v, const std::string& a) {
        return exp_shift(p, v, parse_g(a));
    });
    m.def("umbral_number",
          [](unsigned m_, unsigned r) { return to_fraction_string(umbral_number(m_, r)); });
    m.def("umbral_hermite", &umbral_hermite, py::arg("n"), py::arg("m"));

    m.def("integral_ids", [] {
        std::vector<std::string> out;
        for (IntegralId id : all_integral_ids()) out.push_back(to_string(id));
        return out;
    });
    m.def("closed_form",
          [](const std::string& id, const std::map<std::string, unsigned>& indices,
             const std::map<std::string, std::string>& scalars) {
              return closed_form(integral_id_from_string(id), make_params(indices, scalars));
          });
    m.def("verify_integral",
          [](const std::string& id, const std::map<std::string, unsigned>& indices,
             const std::map<std::string, std::string>& scalars, double tol) {
              IntegralId iid = integral_id_from_string(id);
              ParamSet ps = make_params(indices, scalars);
              double t = tol > 0 ? tol : default_rel_tol(iid);
              return result_dict(verify(iid, ps, default_quadrature_config(iid), t));
          },
          py::arg("id"), py::arg("indices"), py::arg("scalars"), py::arg("tol") = 0.0);

    auto series_pair = [](const SeriesValue& v) { return py::make_tuple(v.value, v.tail_bound); };
    m.def("bessel_j", [=](int n, double x, unsigned K) { return series_pair(bessel_j(n, x, {K})); },
          py::arg("n"), py::arg("x"), py::arg("K") = 40);
    m.def("bessel_i", [=](int n, double x, unsigned K) { return series_pair(bessel_i(n, x, {K})); },
          py::arg("n"), py::arg("x"), py::arg("K") = 40);
    m.def("bessel_2var",
          [=](int n, double x, double y, unsigned K) {
              return series_pair(bessel_2var(n, x, y, {K}));
          },
          py::arg("n"), py::arg("x"), py::arg("y"), py::arg("K") = 40);
    m.def("ji4",
          [=](int n, double x, double y, unsigned K) { return series_pair(ji4(n, x, y, {K})); },
          py::arg("n"), py::arg("x"), py::arg("y"), py::arg("K") = 40);
    m.def("hermite_bessel",
          [=](unsigned n, double x, double y, unsigned K) {
              return series_pair(hermite_bessel(n, x, y, {K}));
          },
          py::arg("n"), py::arg("x"), py::arg("y"), py::arg("K") = 25);

    m.def("run_suite", [](const std::string& name, std::uint64_t seed) {
        py::list out;
        for (const auto& rep : run_suites(name, seed)) {
            for (const auto& c : rep.checks) {
                out.append(py::make_tuple(rep.suite, c.name, c.pass, c.detail));
            }
        }
        return out;
    }, py::arg("name"), py::arg("seed") = 12345);
    m.def("suite_names", [] { return suite_names(); });
}
