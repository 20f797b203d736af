// Python bindings for the main operations.  Structured values cross the
// boundary as canonical JSON strings; the krqt package wrapper decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krqt/cluster.hpp"
#include "krqt/exchange.hpp"
#include "krqt/json_io.hpp"

namespace py = pybind11;

namespace {

krqt::KrLabel make_label(int rank, int i, int k, int j) {
    krqt::KrLabel label{rank, i, j, k};
    if (!label.valid()) throw py::value_error("invalid KR label");
    return label;
}

std::string char_json(int rank, int i, int k, int j) {
    const krqt::KrLabel label = make_label(rank, i, k, j);
    return krqt::to_json(krqt::q_character(label), &label).dump();
}

std::string product_json(int rank, int i1, int k1, int j1, int i2, int k2, int j2,
                         const std::string& mode) {
    const krqt::TwistMode m = mode == "star" ? krqt::TwistMode::Star : krqt::TwistMode::StarGamma;
    const auto chi = krqt::twisted_mul(krqt::q_character(make_label(rank, i1, k1, j1)),
                                       krqt::q_character(make_label(rank, i2, k2, j2)), m, rank);
    return krqt::to_json(chi).dump();
}

int epsilon_cluster(int rank, int i1, int k1, int i2, int k2) {
    return krqt::epsilon_entry(krqt::ClusterIndex{i1, k1}, krqt::ClusterIndex{i2, k2}, rank);
}

int epsilon_series_cluster(int rank, int i1, int k1, int i2, int k2) {
    const auto a = krqt::ClusterIndex{i1, k1}.label(rank);
    const auto b = krqt::ClusterIndex{i2, k2}.label(rank);
    return krqt::epsilon_series(krqt::kr_dominant_monomial(a), krqt::kr_dominant_monomial(b), rank);
}

py::object commutation_exponent(int rank, int i1, int k1, int j1, int i2, int k2, int j2) {
    const auto alpha = krqt::t_commutation_exponent(krqt::q_character(make_label(rank, i1, k1, j1)),
                                                    krqt::q_character(make_label(rank, i2, k2, j2)),
                                                    rank);
    if (!alpha) return py::none();
    return py::int_(*alpha);
}

}  // namespace

PYBIND11_MODULE(_krqt, m) {
    m.doc() = "Exact KR (q,t)-character engine for type A";

    m.def("char_json", &char_json, py::arg("rank"), py::arg("i"), py::arg("k"), py::arg("j"));
    m.def("twisted_product_json", &product_json, py::arg("rank"), py::arg("i1"), py::arg("k1"),
          py::arg("j1"), py::arg("i2"), py::arg("k2"), py::arg("j2"),
          py::arg("mode") = "star_gamma");
    m.def("epsilon", &epsilon_cluster, py::arg("rank"), py::arg("i1"), py::arg("k1"),
          py::arg("i2"), py::arg("k2"));
    m.def("epsilon_series", &epsilon_series_cluster, py::arg("rank"), py::arg("i1"),
          py::arg("k1"), py::arg("i2"), py::arg("k2"));
    m.def("t_commutation_exponent", &commutation_exponent, py::arg("rank"), py::arg("i1"),
          py::arg("k1"), py::arg("j1"), py::arg("i2"), py::arg("k2"), py::arg("j2"));
    m.def("cluster_spectral", &krqt::cluster_spectral, py::arg("i"), py::arg("k"));

    m.def("verify_compat", [](int rank, int kmax) {
        return krqt::to_json(krqt::compatibility_check(rank, kmax)).dump();
    });
    m.def("verify_tsystem", [](int rank, int i, int k, int j) {
        return krqt::to_json(krqt::verify_t_system(rank, i, k, j)).dump();
    });
    m.def("verify_mutation", [](int rank, int i, int k, int j) {
        return krqt::to_json(krqt::verify_quantum_mutation(rank, i, k, j)).dump();
    });
    m.def("counterexample", [] {
        return krqt::to_json(krqt::k_direction_counterexample()).dump();
    });
    m.def("sigma_partition", [](int rank, int i1, int k1, int j1, int i2, int k2, int j2) {
        return krqt::to_json(krqt::sigma_partition(make_label(rank, i1, k1, j1),
                                                   make_label(rank, i2, k2, j2)))
            .dump();
    });
    m.def("a1_tables", [](int n) { return krqt::to_json(krqt::a1_tables(n)).dump(); });
}
