#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromaconf/chromaconf.hpp"

namespace py = pybind11;
namespace cc = chromaconf;

namespace {

py::int_ to_py(const cc::Int& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<cc::Int>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::list coefficients(const cc::IntPolynomial& p) {
    return to_py(p.coefficients());
}

cc::EdgeOrdering resolve_ordering(const cc::Graph& g, const std::string& name, std::uint64_t seed) {
    if (name == "nbc") return cc::nbc_edge_ordering(g);
    if (name == "lex") return cc::lex_edge_ordering(g);
    if (name == "random") return cc::random_edge_ordering(g, seed);
    throw cc::InvalidArgument("ordering must be 'nbc', 'lex' or 'random'");
}

py::list forests_to_py(const std::vector<cc::Forest>& forests) {
    py::list out;
    for (const auto& f : forests) {
        py::list edges;
        for (const auto& [i, j] : f.edges) edges.append(py::make_tuple(i, j));
        out.append(edges);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_chromaconf, m) {
    m.doc() = "Exact chromatic, lattice and configuration-space invariants of simple graphs";

    py::register_exception<cc::InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<cc::GuardExceeded>(m, "GuardExceeded");
    py::register_exception<cc::InternalError>(m, "InternalVerificationError");

    py::class_<cc::Graph>(m, "Graph")
        .def(py::init<int, std::vector<cc::Edge>>(), py::arg("vertex_count"), py::arg("edges"))
        .def_static("complete", &cc::Graph::complete, py::arg("m"))
        .def_static("cycle", &cc::Graph::cycle, py::arg("m"))
        .def_static("path", &cc::Graph::path, py::arg("m"))
        .def_static("star", &cc::Graph::star, py::arg("m"))
        .def_property_readonly("vertex_count", &cc::Graph::vertex_count)
        .def_property_readonly("edge_count", &cc::Graph::edge_count)
        .def_property_readonly("edges", [](const cc::Graph& g) { return g.edges(); })
        .def("has_edge", &cc::Graph::has_edge)
        .def("is_connected", &cc::Graph::is_connected)
        .def("connected_components", &cc::Graph::connected_components)
        .def("triangle_count", &cc::Graph::triangle_count)
        .def("__eq__", [](const cc::Graph& a, const cc::Graph& b) { return a == b; })
        .def("__repr__", [](const cc::Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("box_product", &cc::box_product);
    m.def("join", &cc::join);
    m.def("induced_subgraph", [](const cc::Graph& g, const std::vector<int>& vertices) {
        auto sub = cc::induced_subgraph(g, vertices);
        return py::make_tuple(sub.graph, sub.original_labels);
    });
    m.def("parse_graph", &cc::parse_graph);
    m.def("serialize_graph", &cc::serialize_graph);

    m.def("chromatic_polynomial", [](const cc::Graph& g) {
        return coefficients(cc::chromatic_polynomial(g));
    }, "Coefficients by ascending degree");
    m.def("count_proper_colorings", [](const cc::Graph& g, long long lam) {
        return to_py(cc::count_proper_colorings(g, lam));
    }, py::arg("graph"), py::arg("colors"));
    m.def("whitney_coefficients", [](const cc::Graph& g) {
        return to_py(cc::whitney_coefficients(g).values());
    }, "a_1 .. a_m");
    m.def("count_acyclic_orientations_unique_source", [](const cc::Graph& g, int v0) {
        return to_py(cc::count_acyclic_orientations_unique_source(g, v0));
    }, py::arg("graph"), py::arg("source"));

    m.def("nbc_forests", [](const cc::Graph& g, int k, const std::string& ordering, std::uint64_t seed) {
        return forests_to_py(cc::nbc_forests(g, resolve_ordering(g, ordering, seed), k));
    }, py::arg("graph"), py::arg("components"), py::arg("ordering") = "nbc", py::arg("seed") = 0);
    m.def("increasing_forests_complete", [](int m, int k) {
        return forests_to_py(cc::increasing_forests_complete(m, k));
    }, py::arg("m"), py::arg("k"));

    m.def("poincare_x_coefficients", [](const cc::Graph& g, int dim, const std::string& route) {
        if (route == "chromatic") return coefficients(cc::poincare_from_chromatic(g, dim).base());
        if (route == "nbc")
            return coefficients(cc::poincare_from_nbc(g, cc::nbc_edge_ordering(g), dim).base());
        if (route == "gm") return coefficients(cc::poincare_from_gm(g, dim).base());
        throw cc::InvalidArgument("route must be 'chromatic', 'nbc' or 'gm'");
    }, py::arg("graph"), py::arg("dim") = 2, py::arg("route") = "chromatic",
       "Betti numbers as coefficients of x = t^(N-1)");
    m.def("betti_number", [](const cc::Graph& g, int dim, long long degree) {
        return to_py(cc::betti_number(g, dim, degree));
    }, py::arg("graph"), py::arg("dim"), py::arg("degree"));
    m.def("euler_characteristic", [](const cc::Graph& g, int dim) {
        return to_py(cc::euler_characteristic(g, dim));
    }, py::arg("graph"), py::arg("dim"));
    m.def("stable_splitting_summary", [](const cc::Graph& g, int dim) {
        py::list out;
        for (const auto& s : cc::stable_splitting_summary(g, dim))
            out.append(py::make_tuple(s.sphere_dimension, to_py(s.multiplicity)));
        return out;
    }, py::arg("graph"), py::arg("dim"));

    m.def("bond_counts_by_length", [](const cc::Graph& g) {
        auto counts = cc::BondLattice::build(g).counts_by_length();
        return std::vector<long long>(counts.begin() + 1, counts.end());
    }, "Connected-partition counts for length 1..m");
    m.def("mobius_bottom_top", [](const cc::Graph& g) {
        auto lattice = cc::BondLattice::build(g);
        return to_py(lattice.mobius(lattice.bottom(), lattice.top()));
    });
    m.def("proper_part_reduced_betti", [](const cc::Graph& g) {
        auto lattice = cc::BondLattice::build(g);
        auto betti = cc::reduced_betti_numbers(
            cc::order_complex(lattice.lower_interval(lattice.top())));
        return betti.values();
    }, "Reduced Betti numbers of the proper part, listed from dimension -1");

    m.def("obstacle_poincare_x_coefficients",
          [](int n, int r, const std::vector<cc::Edge>& collide,
             const std::vector<std::pair<int, int>>& avoid, int dim) {
              cc::ObstacleSpec spec{n, r, collide, avoid};
              return coefficients(cc::obstacle_poincare(spec, dim).base());
          }, py::arg("movers"), py::arg("obstacles"), py::arg("collide"), py::arg("avoid"),
          py::arg("dim") = 2);
    m.def("build_gamma", [](int n, int r, const std::vector<cc::Edge>& collide,
                            const std::vector<std::pair<int, int>>& avoid) {
        return cc::build_gamma(cc::ObstacleSpec{n, r, collide, avoid});
    }, py::arg("movers"), py::arg("obstacles"), py::arg("collide"), py::arg("avoid"));
    m.def("is_relatively_complete", &cc::is_relatively_complete);
}
