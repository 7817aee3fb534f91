#include "doctest.h"

#include <random>

#include "chromaconf/errors.hpp"
#include "chromaconf/poincare.hpp"

using namespace chromaconf;

namespace {

Graph diamond() {
    return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

IntPolynomial complete_graph_base(int m) {
    IntPolynomial product = IntPolynomial::constant(1);
    for (int j = 1; j < m; ++j) product = product * IntPolynomial({1, j});
    return product;
}

Graph random_connected_graph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    std::uniform_int_distribution<int> pick_m(2, max_vertices);
    for (;;) {
        int m = pick_m(rng);
        std::vector<Edge> edges;
        std::bernoulli_distribution keep(0.5);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (keep(rng)) edges.push_back({i, j});
        if (static_cast<int>(edges.size()) > max_edges) continue;
        Graph g(m, edges);
        if (g.is_connected()) return g;
    }
}

} // namespace

TEST_CASE("series bookkeeping") {
    PoincareSeries series(IntPolynomial({1, 5, 8, 4}), 3);
    CHECK(series.euclidean_dim() == 3);
    CHECK(series.betti(0) == 1);
    CHECK(series.betti(2) == 5);
    CHECK(series.betti(4) == 8);
    CHECK(series.betti(6) == 4);
    CHECK(series.betti(3) == 0);  // not a multiple of N-1
    CHECK(series.betti(8) == 0);  // beyond the top class
    CHECK(series.t_degrees() == std::vector<long long>{0, 2, 4, 6});
    CHECK(series.total_rank() == 18);
    CHECK(series.expand().coefficient(4) == 8);
    CHECK(series.pretty(false) == "1 + 5t^2 + 8t^4 + 4t^6");
    CHECK(series.pretty(true) == "1 + 5t^{N-1} + 8t^{2(N-1)} + 4t^{3(N-1)}");

    CHECK_THROWS_AS(PoincareSeries(IntPolynomial({1, 1}), 1), InvalidArgument);
    CHECK_THROWS_AS(PoincareSeries(IntPolynomial({2, 1}), 2), InternalError);
    CHECK_THROWS_AS(PoincareSeries(IntPolynomial({1, -1}), 2), InternalError);
}

TEST_CASE("coefficient route fixtures") {
    CHECK(poincare_from_chromatic(diamond(), 2).base() == IntPolynomial({1, 5, 8, 4}));
    for (int m = 2; m <= 8; ++m)
        CHECK(poincare_from_chromatic(Graph::complete(m), 2).base() == complete_graph_base(m));
    for (int m = 2; m <= 8; ++m) {
        CHECK(poincare_from_chromatic(Graph::path(m), 3).base() ==
              IntPolynomial({1, 1}).pow(static_cast<unsigned>(m - 1)));
        CHECK(poincare_from_chromatic(Graph::star(m), 3).base() ==
              IntPolynomial({1, 1}).pow(static_cast<unsigned>(m - 1)));
    }
    CHECK(poincare_from_chromatic(Graph::complete(1), 2).base() == IntPolynomial::constant(1));
    CHECK_THROWS_AS(poincare_from_chromatic(diamond(), 1), InvalidArgument);
}

TEST_CASE("cyclic closed form") {
    for (int m = 3; m <= 8; ++m) {
        IntPolynomial expected = IntPolynomial({1, 1}).pow(static_cast<unsigned>(m)) -
                                 IntPolynomial::monomial(m - 1) - IntPolynomial::monomial(m);
        CHECK(poincare_from_chromatic(Graph::cycle(m), 2).base() == expected);
    }
    CHECK(poincare_from_nbc(Graph::cycle(4), nbc_edge_ordering(Graph::cycle(4)), 2).base() ==
          IntPolynomial({1, 4, 6, 3}));
}

TEST_CASE("disconnected graphs multiply component series") {
    Graph two_edges = disjoint_union(Graph::complete(2), Graph::complete(2));
    CHECK(poincare_from_chromatic(two_edges, 2).base() == IntPolynomial({1, 2, 1}));
    CHECK(poincare_from_nbc(two_edges, nbc_edge_ordering(two_edges), 2).base() ==
          IntPolynomial({1, 2, 1}));
    CHECK(poincare_from_gm(two_edges, 2).base() == IntPolynomial({1, 2, 1}));
}

TEST_CASE("forest route equals coefficient route for every ordering") {
    std::vector<Graph> graphs = {Graph::complete(2), Graph::cycle(4), diamond(),
                                 Graph::complete(5), Graph::star(6),
                                 box_product(Graph::complete(3), Graph::complete(2))};
    for (const auto& g : graphs) {
        PoincareSeries reference = poincare_from_chromatic(g, 2);
        CHECK(poincare_from_nbc(g, nbc_edge_ordering(g), 2) == reference);
        CHECK(poincare_from_nbc(g, lex_edge_ordering(g), 2) == reference);
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            CHECK(poincare_from_nbc(g, random_edge_ordering(g, seed), 2) == reference);
    }
}

TEST_CASE("interval-homology route fixtures") {
    CHECK(poincare_from_gm(Graph::complete(2), 2).base() == IntPolynomial({1, 1}));
    CHECK(poincare_from_gm(Graph::complete(3), 2).base() == IntPolynomial({1, 3, 2}));
    CHECK(poincare_from_gm(Graph::cycle(4), 2).base() == IntPolynomial({1, 4, 6, 3}));
    CHECK(poincare_from_gm(diamond(), 3).base() == IntPolynomial({1, 5, 8, 4}));
    CHECK_THROWS_AS(poincare_from_gm(Graph::complete(7), 2), GuardExceeded);
}

TEST_CASE("all three routes agree on random graphs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_connected_graph(rng, 5, 10);
        for (int dim : {2, 3, 4}) {
            PoincareSeries reference = poincare_from_chromatic(g, dim);
            CHECK(poincare_from_nbc(g, nbc_edge_ordering(g), dim) == reference);
            CHECK(poincare_from_gm(g, dim) == reference);
        }
    }
}

TEST_CASE("reciprocal substitution form") {
    for (const auto& g : {Graph::cycle(5), diamond(), Graph::complete(6), Graph::star(7)})
        for (int dim : {2, 3})
            CHECK(poincare_reciprocity(g, dim) == poincare_from_chromatic(g, dim).expand());
}

TEST_CASE("betti identities") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, 7, 21);
        for (int dim : {2, 3}) {
            CHECK(betti_number(g, dim, 0) == 1);
            CHECK(betti_number(g, dim, dim - 1) == g.edge_count());
            Int pairs = Int(g.edge_count()) * (g.edge_count() - 1) / 2;
            CHECK(betti_number(g, dim, 2 * (dim - 1)) == pairs - g.triangle_count());
        }
    }
    // top class of the complete graph
    Int factorial = 1;
    for (int i = 2; i <= 5; ++i) factorial *= i;
    CHECK(betti_number(Graph::complete(6), 2, 5) == factorial);
}

TEST_CASE("second rank of the complete graph has a closed form") {
    // pairs of edges minus triangles collapses to (3m-1)m(m-1)(m-2)/24
    for (int m = 3; m <= 8; ++m) {
        Int expected = Int(3 * m - 1) * m * (m - 1) * (m - 2) / 24;
        CHECK(betti_number(Graph::complete(m), 2, 2) == expected);
    }
}

TEST_CASE("total rank of the complete graph is m factorial") {
    Int factorial = 1;
    for (int m = 1; m <= 8; ++m) {
        factorial *= m;
        CHECK(poincare_from_chromatic(Graph::complete(m), 4).total_rank() == factorial);
    }
}

TEST_CASE("euler characteristic identity") {
    CHECK(euler_characteristic(Graph::complete(2), 2) == 0);
    for (int dim : {2, 3, 4, 5}) {
        Int sign = dim % 2 == 0 ? -1 : 1;
        Int expected = (1 + sign) * (1 + 2 * sign);
        CHECK(euler_characteristic(Graph::complete(3), dim) == expected);
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, 6, 15);
        for (int dim : {2, 3}) euler_characteristic(g, dim); // throws on mismatch
    }
    // even N evaluates the coloring count at one color, which vanishes for
    // every graph with at least one edge
    for (const auto& g : {Graph::cycle(5), diamond(), Graph::complete(4)}) {
        CHECK(euler_characteristic(g, 2) == 0);
        CHECK(euler_characteristic(g, 4) == 0);
    }
}

TEST_CASE("basis labels per degree") {
    Graph square = Graph::cycle(4);
    EdgeOrdering ord = nbc_edge_ordering(square);
    CHECK(nbc_basis(square, ord, 3, 6).size() == 3);    // top degree (m-1)(N-1)
    auto bottom = nbc_basis(square, ord, 3, 0);
    REQUIRE(bottom.size() == 1);
    CHECK(bottom.front().edges.empty());
    CHECK(nbc_basis(square, ord, 3, 5).empty());        // not a multiple of N-1
    CHECK(nbc_basis(square, ord, 3, 8).empty());        // beyond the top degree
    CHECK(nbc_basis(diamond(), nbc_edge_ordering(diamond()), 2, 2).size() == 8);

    for (long long degree : {0LL, 2LL, 4LL, 6LL})
        CHECK(Int(nbc_basis(square, ord, 3, degree).size()) ==
              betti_number(square, 3, degree));
}

TEST_CASE("stable splitting summary") {
    auto summands = stable_splitting_summary(diamond(), 3);
    REQUIRE(summands.size() == 4);
    CHECK(summands[0] == WedgeSummand{6, 4});
    CHECK(summands[1] == WedgeSummand{4, 8});
    CHECK(summands[2] == WedgeSummand{2, 5});
    CHECK(summands[3] == WedgeSummand{0, 1});

    auto k2 = stable_splitting_summary(Graph::complete(2), 2);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == WedgeSummand{1, 1});
    CHECK(k2[1] == WedgeSummand{0, 1});

    // trees: binomial multiplicities
    auto tree = stable_splitting_summary(Graph::path(5), 2);
    long long expected[] = {1, 4, 6, 4, 1};
    for (size_t i = 0; i < tree.size(); ++i)
        CHECK(tree[i].multiplicity == expected[i]);
}
