#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "memsfront/cli.hpp"
#include "memsfront/mcverify.hpp"

namespace py = pybind11;
using namespace memsfront;

namespace {

py::array_t<std::complex<double>> to_array(const Matrix4c& m) {
    py::array_t<std::complex<double>> arr({4, 4});
    auto buf = arr.mutable_unchecked<2>();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) buf(i, j) = m(i, j);
    return arr;
}

Matrix4c from_array(const py::array_t<std::complex<double>>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != 4 || arr.shape(1) != 4)
        throw std::invalid_argument("expected a 4x4 complex array");
    auto buf = arr.unchecked<2>();
    Matrix4c m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = buf(i, j);
    return m;
}

DensityMatrix state_from(const py::array_t<std::complex<double>>& arr) {
    return DensityMatrix(from_array(arr));
}

py::dict point_dict(const FrontierPoint& p) {
    py::dict d;
    d["mixedness"] = p.mixedness;
    d["entanglement"] = p.entanglement;
    d["branch"] = branch_name(p.branch);
    d["a"] = p.a;
    d["r"] = p.r;
    return d;
}

}  // namespace

PYBIND11_MODULE(_memsfront, m) {
    m.doc() = "two-qubit entanglement/mixedness measures, MEMS families and frontiers";

    // state constructors
    m.def("werner", [](double r) { return to_array(werner(r).matrix()); }, py::arg("r"));
    m.def("bell_phi_plus", [] { return to_array(bell_phi_plus()); });
    m.def("mems_ef_sl", [](double r) { return to_array(mems_ef_sl(r).matrix()); }, py::arg("r"));
    m.def(
        "mems_n_sl",
        [](double r, int family) { return to_array(mems_n_sl(r, family).matrix()); },
        py::arg("r"), py::arg("family"));
    m.def(
        "mems_ef_sv",
        [](double c, const std::string& branch) {
            const EfSvBranch b = branch == "rank3" ? EfSvBranch::rank3 : EfSvBranch::werner;
            if (branch != "rank3" && branch != "werner")
                throw std::invalid_argument("branch must be 'rank3' or 'werner'");
            return to_array(mems_ef_sv(c, b).matrix());
        },
        py::arg("c"), py::arg("branch"));
    m.def("gisin_c", [](double r) { return to_array(gisin_c(r).matrix()); }, py::arg("r"));
    m.def(
        "bell_diagonal_rank2",
        [](double r) { return to_array(bell_diagonal_rank2(r).matrix()); }, py::arg("r"));
    m.def(
        "from_x_params",
        [](double x, double y, double a, double b, double r) {
            return to_array(from_x_params(XStateParams{x, y, a, b, r}).matrix());
        },
        py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"), py::arg("r"));
    m.def(
        "maximal_form_from_spectrum",
        [](const std::array<double, 4>& values) {
            return to_array(maximal_form_from_spectrum(Spectrum{values}).matrix());
        },
        py::arg("spectrum"));
    m.def(
        "random_density",
        [](int rank, std::uint64_t seed) { return to_array(random_density(rank, seed).matrix()); },
        py::arg("rank"), py::arg("seed"));

    // matrix operations
    m.def("partial_transpose",
          [](const py::array_t<std::complex<double>>& rho) {
              return to_array(partial_transpose(from_array(rho)));
          });
    m.def("hermitian_eigensystem", [](const py::array_t<std::complex<double>>& mat) {
        const Eigensystem es = hermitian_eigensystem(from_array(mat));
        return py::make_tuple(es.spectrum.values, to_array(es.vectors));
    });

    // measures
    m.def("concurrence",
          [](const py::array_t<std::complex<double>>& rho) { return concurrence(state_from(rho)); });
    m.def("tangle",
          [](const py::array_t<std::complex<double>>& rho) { return tangle(state_from(rho)); });
    m.def("eof",
          [](const py::array_t<std::complex<double>>& rho) { return eof(state_from(rho)); });
    m.def("negativity",
          [](const py::array_t<std::complex<double>>& rho) { return negativity(state_from(rho)); });
    m.def("linear_entropy", [](const py::array_t<std::complex<double>>& rho) {
        return linear_entropy(state_from(rho));
    });
    m.def("von_neumann_entropy", [](const py::array_t<std::complex<double>>& rho) {
        return von_neumann_entropy(state_from(rho));
    });
    m.def("participation_ratio", [](const py::array_t<std::complex<double>>& rho) {
        return participation_ratio(state_from(rho));
    });
    m.def("chsh_b",
          [](const py::array_t<std::complex<double>>& rho) { return chsh_b(state_from(rho)); });
    m.def("measure_all", [](const py::array_t<std::complex<double>>& rho) {
        const MeasureVector v = measure_all(state_from(rho));
        py::dict d;
        d["concurrence"] = v.concurrence;
        d["tangle"] = v.tangle;
        d["eof"] = v.eof;
        d["negativity"] = v.negativity;
        d["linear_entropy"] = v.linear_entropy;
        d["von_neumann_entropy"] = v.von_neumann_entropy;
        d["chsh_b"] = v.chsh_b;
        return d;
    });
    m.def("er_rank3", &er_rank3, py::arg("a"), py::arg("r"));
    m.def("er_werner", &er_werner, py::arg("r"));
    m.def("closest_separable_rank3", [](double a, double r) {
        return to_array(closest_separable_rank3(a, r).matrix());
    });
    m.def("cn_bounds", [](double c) {
        const auto [lo, hi] = cn_bounds(c);
        return py::make_tuple(lo, hi);
    });
    m.def(
        "ls_decompose",
        [](double x, double y, double a, double b, double r) {
            const LSDecomposition dec = ls_decompose_x_state(XStateParams{x, y, a, b, r});
            py::dict d;
            d["lambda"] = dec.lambda;
            d["separable_part"] = to_array(dec.separable_part.matrix());
            d["entangled_part"] = to_array(dec.entangled_part.matrix());
            d["fully_separable"] = dec.fully_separable;
            return d;
        },
        py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"), py::arg("r"));

    // frontiers
    m.def(
        "frontier_point",
        [](const std::string& plane, double mixedness) {
            return point_dict(frontier_point(plane_from_name(plane), mixedness));
        },
        py::arg("plane"), py::arg("mixedness"));
    m.def("crossing_table", [] {
        const CrossingTable t = crossing_table();
        py::dict d;
        d["ef_sl_branch_r"] = t.ef_sl_branch_r;
        d["er_sl"] = py::dict(py::arg("s_l") = t.er_sl.s_l, py::arg("e_r") = t.er_sl.e_r,
                              py::arg("a") = t.er_sl.a, py::arg("r") = t.er_sl.r);
        d["ef_sv"] = py::dict(py::arg("c") = t.ef_sv.c, py::arg("s_v") = t.ef_sv.s_v);
        d["er_sv"] = py::dict(py::arg("s_v") = t.er_sv.s_v, py::arg("e_r") = t.er_sv.e_r,
                              py::arg("werner_r") = t.er_sv.werner_r);
        d["sv_separability_threshold"] = t.sv_separability_threshold;
        d["sl_separability_threshold"] = t.sl_separability_threshold;
        return d;
    });
    m.def(
        "sl_sv_envelope",
        [](const std::string& segment, double r) {
            EntropySegment seg;
            if (segment == "a") seg = EntropySegment::a;
            else if (segment == "b") seg = EntropySegment::b;
            else if (segment == "c") seg = EntropySegment::c;
            else if (segment == "d") seg = EntropySegment::d;
            else throw std::invalid_argument("segment must be a|b|c|d");
            const EnvelopePoint p = sl_sv_envelope(seg, r);
            return py::make_tuple(p.s_v, p.s_l);
        },
        py::arg("segment"), py::arg("r"));

    // sampling
    m.def(
        "scatter_measures",
        [](std::size_t n, std::uint64_t seed) {
            const ScatterBatch batch = scatter(n, seed);
            py::array_t<double> arr({n, static_cast<std::size_t>(9)});
            auto buf = arr.mutable_unchecked<2>();
            for (std::size_t i = 0; i < n; ++i) {
                const auto& rec = batch.records[i];
                buf(i, 0) = static_cast<double>(rec.rank);
                buf(i, 1) = rec.measures.concurrence;
                buf(i, 2) = rec.measures.tangle;
                buf(i, 3) = rec.measures.eof;
                buf(i, 4) = rec.measures.negativity;
                buf(i, 5) = rec.measures.linear_entropy;
                buf(i, 6) = rec.measures.von_neumann_entropy;
                buf(i, 7) = rec.measures.chsh_b;
                buf(i, 8) = rec.spectrum.min();
            }
            return arr;
        },
        py::arg("n"), py::arg("seed"),
        "per-row: rank, C, tangle, eof, N, S_L, S_V, B, smallest eigenvalue");

    // cli passthrough, handy for smoke tests
    m.def("run_cli", [](const std::vector<std::string>& argv) {
        return memsfront::cli::run(argv);
    });
}
