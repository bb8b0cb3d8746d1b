#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hygirth/bounds.hpp"
#include "hygirth/constructions.hpp"
#include "hygirth/error.hpp"
#include "hygirth/experiment.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/io.hpp"
#include "hygirth/neg_girth.hpp"
#include "hygirth/permutation.hpp"
#include "hygirth/randmodels.hpp"
#include "hygirth/rng.hpp"

namespace py = pybind11;
using namespace hygirth;

namespace {

py::object girth_to_py(const GirthResult& g) {
    py::dict d;
    switch (g.kind) {
        case GirthResult::Kind::Finite:
            d["girth"] = g.value;
            break;
        case GirthResult::Kind::Infinite:
            d["girth"] = py::none();
            break;
        case GirthResult::Kind::Truncated:
            d["girth"] = py::none();
            d["at_least"] = g.value + 1;
            break;
    }
    if (g.witness) {
        d["witness_edges"] = g.witness->edge_indices;
        d["witness_vertices"] = g.witness->witness_vertices;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_hygirth, m) {
    m.doc() = "linear regular hypergraphs of high Berge girth";

    py::register_exception<Error>(m, "HygirthError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("m", &Hypergraph::m)
        .def("edges", &Hypergraph::edges)
        .def("incident", &Hypergraph::incident, py::arg("v"))
        .def("degree", &Hypergraph::degree, py::arg("v"))
        .def("is_uniform", &Hypergraph::is_uniform, py::arg("r"))
        .def("is_regular", &Hypergraph::is_regular, py::arg("d"))
        .def("is_linear", &Hypergraph::is_linear)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            std::ostringstream s;
            s << "Hypergraph(n=" << h.n() << ", m=" << h.m() << ")";
            return s.str();
        });

    py::class_<MultiHypergraph>(m, "MultiHypergraph")
        .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &MultiHypergraph::n)
        .def_property_readonly("m", &MultiHypergraph::m)
        .def("edges", &MultiHypergraph::edges)
        .def("is_simple_linear", &MultiHypergraph::is_simple_linear)
        .def("to_hypergraph", &MultiHypergraph::to_hypergraph);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("image"))
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def("image", &Permutation::image)
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; });

    m.def("perm_compose", &perm_compose);
    m.def("perm_inverse", &perm_inverse);
    m.def("perm_power", &perm_power);
    m.def("cycle_type", &cycle_type);

    m.def("berge_girth",
          [](const Hypergraph& h, std::optional<int> cap) { return girth_to_py(berge_girth(h, cap)); },
          py::arg("h"), py::arg("cap") = py::none());
    m.def("berge_girth_oracle",
          [](const Hypergraph& h, int cap) { return girth_to_py(berge_girth_oracle(h, cap)); },
          py::arg("h"), py::arg("cap"));
    m.def("validate_cycle",
          [](const Hypergraph& h, std::vector<int> edges, std::vector<int> vertices) {
              return validate_cycle(h, CycleWitness{std::move(edges), std::move(vertices)});
          });
    m.def("distance", &distance, py::arg("h"), py::arg("u"), py::arg("v"));
    m.def("diameter", &diameter, py::arg("h"));
    m.def("count_cycles", [](const Hypergraph& h, int l) { return count_cycles(h, l); },
          py::arg("h"), py::arg("l"));

    m.def("moore_min_vertices",
          [](int r, int d, int g) { return moore_min_vertices(r, d, g).convert_to<long long>(); });
    m.def("girth_upper_bound", &girth_upper_bound);
    m.def("girth_lower_bound_existential", &girth_lower_bound_existential);
    m.def("es_vertex_upper", [](int r, int d, int g) {
        auto b = es_vertex_upper(r, d, g);
        return py::make_tuple(b.exact.convert_to<long long>(), b.crude.convert_to<long long>());
    });
    m.def("cayley_girth_bound", &cayley_girth_bound);
    m.def("graph_moore_bound",
          [](int d, int g) { return graph_moore_bound(d, g).convert_to<long long>(); });

    m.def("grid_hypergraph", [](int r, int d) { return grid_hypergraph(r, d); },
          py::arg("r"), py::arg("d"));
    m.def("random_two_cover", [](const Hypergraph& h, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        return random_two_cover(h, rng).cover;
    });
    m.def("trivial_cover", [](const Hypergraph& h) { return trivial_cover(h).cover; });
    m.def("lift_to_girth", [](const Hypergraph& h, int g, std::uint64_t seed, int budget) {
        Rng rng = make_rng(seed);
        LiftOptions opts;
        opts.attempts_per_round = budget;
        return lift_to_girth(h, g, rng, opts);
    }, py::arg("h"), py::arg("g"), py::arg("seed") = 0, py::arg("budget") = 200);
    m.def("find_scattered", &find_scattered);
    m.def("surgery_step", &surgery_step);
    m.def("surgery_minimize",
          [](const Hypergraph& h, int g) { return surgery_minimize(h, g).result; });
    m.def("midpoint_construction", &midpoint_construction);
    m.def("star_partition_construction", &star_partition_construction);
    m.def("graph_girth", &graph_girth);

    m.def("sample_x", [](int n, int r, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        return sample_X(n, r, rng);
    });
    m.def("x_size", [](int n, int r) { return x_size(n, r).convert_to<long long>(); });
    m.def("sample_cayley_spec", [](int n, int r, int d, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        return sample_cayley_spec(n, r, d, rng).taus;
    });
    m.def("check_condition6", [](int n, int r, std::vector<Permutation> taus) {
        return check_condition6(CayleySpec{n, r, std::move(taus)});
    });
    m.def("cayley_hypergraph", [](int n, int r, std::vector<Permutation> taus) {
        return cayley_hypergraph(CayleySpec{n, r, std::move(taus)});
    });
    m.def("cayley_girth", [](int n, int r, std::vector<Permutation> taus, int cap) {
        return girth_to_py(cayley_girth(CayleySpec{n, r, std::move(taus)}, cap));
    });
    m.def("sample_config_model", [](int n, int r, int d, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        return sample_config_model(n, r, d, rng);
    });
    m.def("lambda_value", &lambda_value);
    m.def("girth_prob_paper", &girth_prob_paper);
    m.def("girth_prob_poisson", &girth_prob_poisson);

    m.def("minus_k_girth", [](const Hypergraph& h, int k, int cap) {
        NegGirthResult r = minus_k_girth(h, k, cap);
        py::dict d;
        d["k"] = r.k;
        d["g"] = r.found() ? py::cast(*r.g) : py::none();
        d["witness"] = r.witness;
        d["spanned_edges"] = r.spanned_edges;
        return d;
    });

    m.def("read_hyg", [](const std::string& path) { return read_simple_hyg_file(path); });
    m.def("write_hyg", [](const std::string& path, const Hypergraph& h) { write_hyg_file(path, h); });
    m.def("read_elg", &read_elg_file);
    m.def("write_elg", &write_elg_file);

    m.attr("__version__") = kVersion;
}
