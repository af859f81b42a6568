#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rbfc/anf.hpp"
#include "rbfc/construct.hpp"
#include "rbfc/errors.hpp"
#include "rbfc/tables.hpp"

namespace py = pybind11;
using namespace rbfc;

namespace {

py::dict cert_dict(const CertifiedProfile& c) {
    py::dict d;
    d["n"] = c.n;
    d["m"] = c.m;
    d["resiliency_at_least"] = c.resiliency_at_least;
    d["nl_lower"] = py::int_(py::str(c.nl_lower.to_string()));
    d["nl_lower_terms"] = c.nl_lower_terms;
    if (c.nl_exact) d["nl_exact"] = *c.nl_exact;
    d["degree_lower"] = c.degree_lower;
    d["degree_upper"] = c.degree_upper;
    d["exact"] = c.exact_mode;
    return d;
}

py::dict profile_dict(const FunctionProfile& p) {
    py::dict d;
    d["n"] = p.n;
    d["resiliency"] = p.resiliency;
    d["degree"] = p.degree;
    d["nonlinearity"] = p.nonlinearity;
    d["balanced"] = p.balanced;
    d["almost_optimal"] = p.almost_optimal;
    return d;
}

ConstructResult run_construct(const std::string& variant, int n, int m,
                              const std::string& seed_text, bool plan_only,
                              bool optimize_degree) {
    ConstructOptions opt;
    opt.plan_only = plan_only;
    opt.optimize_degree = optimize_degree;
    if (variant == "c1") return construct1(n, m, opt);
    if (variant == "c2") return construct2(n, m, opt);
    if (variant == "c3") {
        std::istringstream ss(seed_text);
        return construct3(n, m, load_seed_functions(ss), opt);
    }
    throw parse_error("variant must be c1, c2 or c3");
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "resilient Boolean function construction toolkit";

    py::register_exception<Error>(mod, "RbfcError");

    py::class_<TruthTable>(mod, "TruthTable")
        .def(py::init<int>(), py::arg("n"))
        .def_readonly("n", &TruthTable::n)
        .def("__len__", &TruthTable::size)
        .def("get", &TruthTable::get)
        .def("set", &TruthTable::set)
        .def("weight", &TruthTable::weight)
        .def("to_hex", &TruthTable::to_hex)
        .def_static("from_hex", &TruthTable::from_hex, py::arg("n"), py::arg("hex"))
        .def_static("linear", &TruthTable::linear, py::arg("n"), py::arg("mask"))
        .def("__eq__", [](const TruthTable& a, const TruthTable& b) { return a == b; });

    mod.def("fast_walsh", [](const TruthTable& t) { return fast_walsh(t).values; });
    mod.def("naive_walsh", [](const TruthTable& t) { return naive_walsh(t).values; });
    mod.def("nonlinearity", [](const TruthTable& t) { return nonlinearity(fast_walsh(t)); });
    mod.def("resiliency", [](const TruthTable& t) { return resiliency_order(fast_walsh(t)); });
    mod.def("degree", [](const TruthTable& t) { return anf(t).degree(); });
    mod.def("anf_string", [](const TruthTable& t) { return anf(t).to_string(); });
    mod.def("profile", [](const TruthTable& t) { return profile_dict(profile(t)); });
    mod.def("concatenate", &concatenate);
    mod.def("mm_bent", &mm_bent, py::arg("k"), py::arg("degree"));

    mod.def(
        "construct",
        [](const std::string& variant, int n, int m, const std::string& seeds, bool plan_only,
           bool optimize_degree) {
            ConstructResult res = run_construct(variant, n, m, seeds, plan_only, optimize_degree);
            py::dict d;
            d["certificate"] = cert_dict(res.cert);
            if (res.table) d["table"] = *res.table;
            if (res.measured) d["measured"] = profile_dict(*res.measured);
            std::ostringstream plan_text;
            write_plan(plan_text, res.plan);
            d["plan"] = plan_text.str();
            return d;
        },
        py::arg("variant"), py::arg("n"), py::arg("m"), py::arg("seeds") = "",
        py::arg("plan_only") = false, py::arg("optimize_degree") = false);

    mod.def("table_bound", [](int n, int m) {
        BoundRoute r = degree_optimized_bound(n, m);
        py::dict d;
        d["terms"] = r.terms;
        d["nl_lower"] = py::int_(py::str(r.nl_lower.to_string()));
        d["degree"] = r.degree;
        d["variant"] = variant_name(r.variant);
        return d;
    });
}
