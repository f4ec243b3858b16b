// Python bindings for the main operations: series coefficients, the
// Delta-family tables, invariant reports and the verification suite.
// Exact rationals cross the boundary as strings.

#include "lp2dt/json_io.hpp"
#include "lp2dt/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lp2dt;

namespace {

std::vector<std::string> series_strings(const PowerSeries& s) {
    std::vector<std::string> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(to_string(s[n]));
    return out;
}

py::object json_to_py(const ordered_json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Donaldson-Thomas invariants of rank-2 sheaves on local P^2";

    m.def(
        "eta_series",
        [](int exponent, int order) { return series_strings(eta_power_series(exponent, order)); },
        py::arg("exponent"), py::arg("order"),
        "coefficients of prod_{n>=1} (1-q^n)^exponent as exact fractions");

    m.def(
        "series",
        [](const std::string& kind, int order) {
            if (kind == "k1") return series_strings(series_k1(order));
            if (kind == "k2a1") return series_strings(series_k2_a1(order));
            if (kind == "mu") return series_strings(mu_stable_series(order));
            throw Error("unknown series kind: " + kind);
        },
        py::arg("kind"), py::arg("order"), "named series: k1, k2a1 or mu");

    m.def(
        "hilb_chi", [](int n) { return hilb_chi(n); }, py::arg("n"),
        "Euler characteristic of the Hilbert scheme of n points on P^2");

    m.def(
        "moduli_dimension", [](int k, int a, int b) { return moduli_dimension(k, a, b); },
        py::arg("k"), py::arg("a"), py::arg("b"));

    m.def(
        "table",
        [](int b) {
            auto rows = enumerate_delta_families(b);
            py::list out;
            for (const auto& row : rows) out.append(json_to_py(row_to_json(row)));
            return out;
        },
        py::arg("b"), "canonical Delta-family table for one b");

    m.def(
        "dt_report",
        [](int b) {
            auto rows = enumerate_delta_families(b);
            return json_to_py(report_to_json(make_report(b, rows)));
        },
        py::arg("b"), "full invariant report for one b");

    m.def(
        "verify",
        [](int order, const std::vector<int>& bs) {
            VerifyOptions opts;
            opts.order = order;
            opts.bs = bs;
            auto results = run_verification(opts);
            py::list out;
            bool ok = true;
            for (const auto& r : results) {
                out.append(py::make_tuple(r.name, r.passed, r.detail));
                ok = ok && r.passed;
            }
            return py::make_tuple(ok, out);
        },
        py::arg("order") = 20, py::arg("bs") = std::vector<int>{0, -2},
        "run the identity suite; returns (all_passed, [(name, passed, detail)])");
}
