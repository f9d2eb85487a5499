// Python bindings for the main operations. Integers cross the boundary as
// Python ints via exact decimal strings, so values of any size survive.

#include "circ16/document.hpp"
#include "circ16/oracle.hpp"
#include "circ16/properties.hpp"
#include "circ16/witness.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using circ16::Int;
using circ16::Json;

namespace {

Int to_int(const py::object& obj) {
    return circ16::parse_int(py::str(obj).cast<std::string>());
}

py::object to_py_int(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

circ16::Vec16 to_vec16(const py::sequence& seq) {
    if (py::len(seq) != 16) throw py::value_error("expected 16 coefficients");
    circ16::Vec16 v;
    for (int i = 0; i < 16; ++i) v[i] = to_int(seq[i]);
    return v;
}

py::list to_py_vector(const circ16::Vec16& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py_int(x));
    return out;
}

py::object json_to_py(const Json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_circ16, m) {
    m.doc() = "exact arithmetic for order-16 integer circulant determinants";

    m.def(
        "det",
        [](const py::sequence& coeffs) {
            circ16::CoeffVec v;
            for (py::handle h : coeffs) v.push_back(to_int(py::reinterpret_borrow<py::object>(h)));
            return to_py_int(circ16::det_bareiss(v));
        },
        py::arg("coefficients"),
        "Exact circulant determinant of any order by fraction-free elimination.");

    m.def(
        "det_via_norms",
        [](const py::sequence& coeffs) { return to_py_int(circ16::det_via_norms(to_vec16(coeffs))); },
        py::arg("coefficients"), "Order-16 determinant as the product of the five norm factors.");

    m.def(
        "norms",
        [](const py::sequence& coeffs) {
            return json_to_py(circ16::json_norms(circ16::norms(to_vec16(coeffs))));
        },
        py::arg("coefficients"),
        "Norm factorization N1, N2, N4, N8, N16 with alpha1, alpha2 and the b/c/d/e transforms "
        "(integers rendered as decimal strings).");

    m.def(
        "classify",
        [](const py::object& value, std::uint64_t seed) {
            circ16::MembershipVerdict verdict = circ16::classify(to_int(value), seed);
            circ16::verify_verdict(verdict);
            return json_to_py(circ16::json_verdict(verdict));
        },
        py::arg("value"), py::arg("seed") = 1,
        "Membership verdict for the order-16 circulant determinant spectrum.");

    m.def(
        "witness",
        [](const py::object& value, std::uint64_t seed) {
            circ16::MembershipVerdict verdict = circ16::classify(to_int(value), seed);
            circ16::verify_verdict(verdict);
            if (!verdict.member) {
                Json refusal;
                refusal["refused"] = true;
                refusal["verdict"] = circ16::json_verdict(verdict);
                return json_to_py(refusal);
            }
            verdict.plan = circ16::plan_for(verdict);
            circ16::Vec16 vec = circ16::realize(*verdict.plan);
            return json_to_py(circ16::json_witness_certificate(verdict, vec));
        },
        py::arg("value"), py::arg("seed") = 1,
        "Verified witness certificate for a member value, or a refusal document.");

    m.def(
        "build_witness_vector",
        [](const py::object& value, std::uint64_t seed) {
            circ16::MembershipVerdict verdict = circ16::classify(to_int(value), seed);
            return to_py_vector(circ16::build_witness(verdict));
        },
        py::arg("value"), py::arg("seed") = 1,
        "The 16 witness coefficients as Python ints (raises for non-members).");

    m.def(
        "convolve",
        [](const py::sequence& u, const py::sequence& w) {
            return to_py_vector(circ16::cyclic_convolve(to_vec16(u), to_vec16(w)));
        },
        py::arg("u"), py::arg("w"), "Cyclic convolution mod x^16 - 1; determinants multiply.");

    m.def(
        "find_value",
        [](const py::object& target, int n, long lo, long hi,
           std::uint64_t max_work) -> py::object {
            circ16::EnumerateOptions opts;
            opts.max_work = max_work;
            auto hit = circ16::find_value(to_int(target), circ16::SearchBox{n, lo, hi}, opts);
            if (!hit) return py::none();
            py::list out;
            for (long x : *hit) out.append(x);
            return out;
        },
        py::arg("target"), py::arg("n") = 16, py::arg("lo") = -1, py::arg("hi") = 1,
        py::arg("max_work") = 0,
        "First vector in enumeration order attaining the target, or None.");

    m.def(
        "spectrum",
        [](int n, long lo, long hi, int jobs) {
            circ16::EnumerateOptions opts;
            opts.jobs = jobs;
            return json_to_py(circ16::json_spectrum(circ16::spectrum(circ16::SearchBox{n, lo, hi}, opts)));
        },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("jobs") = 1,
        "Exhaustive value set of a box with first witnesses.");

    m.def(
        "selftest",
        [](bool full, std::uint64_t vectors, std::uint64_t seed) {
            circ16::PropertyOptions opts;
            opts.vectors = vectors;
            opts.seed = seed;
            auto suites = full ? circ16::selftest_full(opts) : circ16::selftest_quick(opts);
            return json_to_py(circ16::json_suites(suites));
        },
        py::arg("full") = false, py::arg("vectors") = 2000, py::arg("seed") = 0x5eed0c16,
        "Run the lemma property suites; returns one record per suite.");

    m.def(
        "base128",
        [] { return to_py_vector(circ16::base128_witness()); },
        "The embedded determinant-128 constant.");

    m.attr("__version__") = "1.0.0";
}
