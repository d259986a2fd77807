#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jacobiq/cli.hpp"
#include "jacobiq/cycles.hpp"
#include "jacobiq/disc.hpp"
#include "jacobiq/lattice.hpp"

namespace py = pybind11;
using namespace jacobiq;

namespace {

// Rationals cross the boundary as strings; the Python side wraps them in Fraction.
using StrMatrix = std::vector<std::vector<std::string>>;
using StrVec = std::vector<std::string>;

RationalMatrix to_matrix(const StrMatrix& rows) {
    if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
    RationalMatrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.cols()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
        for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = parse_rat(rows[i][j]);
    }
    return M;
}

RatVec to_vec(const StrVec& v) {
    RatVec out;
    for (const auto& s : v) out.push_back(parse_rat(s));
    return out;
}

StrVec from_vec(const RatVec& v) {
    StrVec out;
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

StrMatrix from_matrix(const RationalMatrix& M) {
    StrMatrix out(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) out[i] = from_vec(M.row(i));
    return out;
}

}  // namespace

PYBIND11_MODULE(_jacobiq, m) {
    m.doc() = "Exact lattice, discriminant form and Jacobi form computations";

    static py::exception<Error> error(m, "JacobiqError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            int code = cli::run(args, out);
            return py::make_tuple(code, out.str());
        },
        py::arg("args"), "Runs one CLI subcommand; returns (exit code, JSON text).");

    m.def("rd", [](const StrMatrix& M) { return to_string(rd(to_matrix(M))); }, py::arg("M"));
    m.def("md", [](const StrMatrix& M) { return to_string(md(to_matrix(M))); }, py::arg("M"));
    m.def("rd_upper_bound", [](const StrMatrix& M) { return to_string(rd_upper_bound(to_matrix(M))); }, py::arg("M"));
    m.def("is_admissible", [](const StrMatrix& M) { return is_admissible_index(to_matrix(M)); }, py::arg("M"));
    m.def(
        "disc_reps",
        [](const StrMatrix& M) {
            std::vector<StrVec> out;
            for (const auto& r : disc_group(to_matrix(M)).reps) out.push_back(from_vec(r));
            return out;
        },
        py::arg("M"));
    m.def(
        "qvalue",
        [](const StrMatrix& M, const StrVec& nu) {
            DiscGroup G = disc_group(to_matrix(M));
            return to_string(qvalue(G, canonicalize(G, to_vec(nu))));
        },
        py::arg("M"), py::arg("nu"));
    m.def("generator_bound", [](long n) { return to_string(generator_bound(n)); }, py::arg("n"));
    m.def(
        "cycle_generators",
        [](int r, long n, long d) {
            std::vector<StrMatrix> out;
            for (const auto& t : cycle_generators(r, n, d).matrices) out.push_back(from_matrix(t.T));
            return out;
        },
        py::arg("r"), py::arg("n"), py::arg("d") = 1);
}
