#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dab/catalan.hpp"
#include "dab/enumerate.hpp"
#include "dab/perm.hpp"
#include "dab/sample.hpp"
#include "dab/surface.hpp"

namespace py = pybind11;

namespace {

py::int_ big_to_py(const dab::BigCount& v) {
    std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list big_matrix_to_py(const std::vector<std::vector<dab::BigCount>>& rows) {
    py::list out;
    for (const auto& row : rows) {
        py::list r;
        for (const auto& v : row) r.append(big_to_py(v));
        out.append(std::move(r));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "doubly alternating Baxter permutations: exact enumeration, "
              "uniform sampling, and the limit surface";

    // catalan
    m.def("catalan", [](long n) { return big_to_py(dab::catalan(n)); }, py::arg("n"));
    m.def("catalan_log", &dab::catalan_log, py::arg("n"));
    m.def("catalan_asymptotic", &dab::catalan_asymptotic, py::arg("n"));
    m.def("partial_convolution",
          [](long r, long s) { return big_to_py(dab::partial_convolution(r, s)); },
          py::arg("r"), py::arg("s"));
    m.def("partial_convolution_log", &dab::partial_convolution_log,
          py::arg("r"), py::arg("s"));
    m.def("dyck_oracle",
          [](long r, long s) { return big_to_py(dab::dyck_oracle(r, s)); },
          py::arg("r"), py::arg("s"));

    // perm
    m.def("inverse", &dab::inverse, py::arg("sigma"));
    m.def("complement", &dab::complement, py::arg("sigma"));
    m.def("inflate", &dab::inflate, py::arg("sigma"), py::arg("parts"));
    m.def("is_alternating", &dab::is_alternating, py::arg("sigma"));
    m.def("is_baxter", &dab::is_baxter, py::arg("sigma"));
    m.def("is_dab", &dab::is_dab, py::arg("sigma"));
    m.def("enumerate_dab", &dab::enumerate_dab, py::arg("n"));
    m.def("brute_count_matrix", &dab::brute_count_matrix, py::arg("n"));

    // enumerate
    m.def("count_b", [](long m_, long i, long j) { return big_to_py(dab::count_b(m_, i, j)); },
          py::arg("m"), py::arg("i"), py::arg("j"));
    m.def("count_b_lemma",
          [](long m_, long i, long j) { return big_to_py(dab::count_b_lemma(m_, i, j)); },
          py::arg("m"), py::arg("i"), py::arg("j"));
    m.def("count_b_recurrence",
          [](long m_, long i, long j) { return big_to_py(dab::count_b_recurrence(m_, i, j)); },
          py::arg("m"), py::arg("i"), py::arg("j"));
    m.def("count_matrix",
          [](long m_, const std::string& mode) {
              auto mat = dab::count_matrix(
                  m_, mode == "float" ? dab::MatrixMode::Float : dab::MatrixMode::Exact);
              py::dict out;
              out["m"] = mat.m;
              out["mode"] = mode == "float" ? "float" : "exact";
              out["rows"] = mat.mode == dab::MatrixMode::Exact
                                ? py::object(big_matrix_to_py(mat.ints))
                                : py::object(py::cast(mat.floats));
              return out;
          },
          py::arg("m"), py::arg("mode") = "exact");
    m.def("probability", &dab::probability, py::arg("m"), py::arg("i"), py::arg("j"));
    m.def("probability_float", &dab::probability_float, py::arg("m"),
          py::arg("i"), py::arg("j"));
    m.def("corner_probabilities",
          [](long m_) {
              py::list out;
              for (const auto& e : dab::corner_probabilities(m_)) {
                  py::dict d;
                  d["label"] = e.label;
                  d["i"] = e.i;
                  d["j"] = e.j;
                  d["numerator"] = big_to_py(e.numerator);
                  d["denominator"] = big_to_py(e.denominator);
                  d["value"] = e.value;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("m"));

    // sample
    m.def("first_value_distribution", &dab::first_value_distribution, py::arg("m"));
    m.def("sample_even",
          [](long m_, std::uint64_t seed) {
              dab::RngState rng(seed);
              return dab::sample_even(m_, rng);
          },
          py::arg("m"), py::arg("seed"));
    m.def("sample_odd",
          [](long m_, std::uint64_t seed) {
              dab::RngState rng(seed);
              return dab::sample_odd(m_, rng);
          },
          py::arg("m"), py::arg("seed"));
    m.def("sample_batch",
          [](long m_, long count, std::uint64_t seed, bool odd) {
              return dab::sample_batch(m_, count, seed, odd).permutations;
          },
          py::arg("m"), py::arg("count"), py::arg("seed"), py::arg("odd") = false);
    m.def("empirical_matrix", &dab::empirical_matrix, py::arg("m"),
          py::arg("count"), py::arg("seed"));

    // surface
    m.def("phi", &dab::phi, py::arg("alpha"), py::arg("beta"), py::arg("tol") = 1e-8);
    m.def("phi_reduced", &dab::phi_reduced, py::arg("alpha"), py::arg("beta"),
          py::arg("tol") = 1e-8);
    m.def("inner_antiderivative", &dab::inner_antiderivative, py::arg("x"),
          py::arg("y"), py::arg("beta"));
    m.def("surface_value", &dab::surface_value, py::arg("x"), py::arg("y"),
          py::arg("tol") = 1e-8);
    m.def("surface_grid",
          [](int resolution, double tol) {
              return dab::surface_grid(resolution, tol).values;
          },
          py::arg("resolution"), py::arg("tol") = 1e-6);
    m.def("slice_compare",
          [](long m_, double alpha, const std::vector<double>& betas) {
              py::list out;
              for (const auto& r : dab::slice_compare(m_, alpha, betas))
                  out.append(py::make_tuple(r.beta, r.m_p, r.phi, r.diff));
              return out;
          },
          py::arg("m"), py::arg("alpha"), py::arg("betas"));
}
