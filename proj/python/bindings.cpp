#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "xdeficit/deficit.hpp"
#include "xdeficit/measurement.hpp"
#include "xdeficit/oracle.hpp"
#include "xdeficit/xstate.hpp"

namespace py = pybind11;
using namespace xdeficit;

namespace {

XStateParams params_of(double r3, double s3, double c1, double c2, double c3) { return {r3, s3, c1, c2, c3}; }

py::dict result_dict(const DeficitResult& r) {
    py::dict d;
    d["deficit"] = r.deficit;
    d["phi_star"] = r.phi_star;
    d["g_max"] = r.g_max;
    d["s_rho"] = r.s_rho;
    d["method"] = std::string(to_string(r.method));
    d["case_label"] = std::string(to_string(r.case_label));
    d["side"] = std::string(to_string(r.side));
    d["closed_form_rejected"] = r.closed_form_rejected;
    return d;
}

Side side_of(const std::string& s) {
    if (s == "b" || s == "measure_b") return Side::measure_b;
    if (s == "a" || s == "measure_a") return Side::measure_a;
    throw py::value_error("side must be 'a' or 'b'");
}

Region region_of(const std::string& s) {
    if (s == "paper") return Region::paper_region;
    if (s == "psd") return Region::psd_only;
    throw py::value_error("region must be 'paper' or 'psd'");
}

std::tuple<double, double, double, double, double> as_tuple(const XStateParams& p) {
    return {p.r3, p.s3, p.c1, p.c2, p.c3};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum deficit of two-qubit X states";

    py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_ValueError);
    py::register_exception<CaseMismatchError>(m, "CaseMismatchError", PyExc_ValueError);

    m.def(
        "validate_state",
        [](double r3, double s3, double c1, double c2, double c3) {
            const Validity v = validate_state(params_of(r3, s3, c1, c2, c3));
            return py::make_tuple(v.ok, v.reason);
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"),
        "Return (ok, reason) for the given Bloch parameters.");

    m.def(
        "spectrum",
        [](double r3, double s3, double c1, double c2, double c3) {
            return state_spectrum(params_of(r3, s3, c1, c2, c3)).values;
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"),
        "Eigenvalues of rho in descending order.");

    m.def(
        "entropy",
        [](double r3, double s3, double c1, double c2, double c3) {
            return von_neumann_entropy(state_spectrum(params_of(r3, s3, c1, c2, c3)));
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"),
        "Von Neumann entropy of rho in bits.");

    m.def(
        "G",
        [](double r3, double s3, double c1, double c2, double c3, double phi) {
            return G(params_of(r3, s3, c1, c2, c3), phi);
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("phi"));

    m.def(
        "maximize_G",
        [](double r3, double s3, double c1, double c2, double c3) {
            const GMaximum g = maximize_G(params_of(r3, s3, c1, c2, c3));
            return py::make_tuple(g.phi_star, g.g_max);
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"),
        "Return (phi_star, g_max); ties go to the smallest phi.");

    m.def(
        "classify_case",
        [](double r3, double s3, double c1, double c2, double c3) {
            return std::string(to_string(classify_case(params_of(r3, s3, c1, c2, c3))));
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"));

    m.def(
        "deficit",
        [](double r3, double s3, double c1, double c2, double c3, const std::string& side, const std::string& method) {
            const XStateParams p = params_of(r3, s3, c1, c2, c3);
            const Side s = side_of(side);
            if (method == "auto") return result_dict(deficit_exact(p, s));
            if (method == "numeric") return result_dict(deficit_numeric(p, s));
            throw py::value_error("method must be 'auto' or 'numeric'");
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::kw_only(),
        py::arg("side") = "b", py::arg("method") = "auto", "Deficit record as a dict.");

    m.def("bell_diagonal_deficit", &bell_diagonal_deficit, py::arg("c1"), py::arg("c2"), py::arg("c3"));

    m.def(
        "su2_to_bloch",
        [](double t, double y1, double y2, double y3) {
            const MeasurementDirection d = su2_to_bloch({t, y1, y2, y3});
            return py::make_tuple(d.z1, d.z2, d.z3);
        },
        py::arg("t"), py::arg("y1"), py::arg("y2"), py::arg("y3"));

    m.def(
        "measured_spectrum",
        [](double r3, double s3, double c1, double c2, double c3, double z1, double z2, double z3) {
            return measured_spectrum(params_of(r3, s3, c1, c2, c3), {z1, z2, z3}).values;
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("z1"), py::arg("z2"),
        py::arg("z3"));

    m.def(
        "grid_oracle",
        [](double r3, double s3, double c1, double c2, double c3, int n_alpha, int n_phi) {
            return grid_oracle(params_of(r3, s3, c1, c2, c3), n_alpha, n_phi);
        },
        py::arg("r3"), py::arg("s3"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::kw_only(),
        py::arg("n_alpha") = 101, py::arg("n_phi") = 101);

    m.def(
        "random_states",
        [](std::uint64_t seed, std::size_t count, const std::string& region) {
            std::vector<std::tuple<double, double, double, double, double>> out;
            for (const XStateParams& p : random_states({seed, region_of(region), count})) out.push_back(as_tuple(p));
            return out;
        },
        py::arg("seed") = 42, py::arg("count") = 1, py::arg("region") = "paper");

    m.attr("RNG_ALGORITHM") = std::string(kRngAlgorithm);
}
