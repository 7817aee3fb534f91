#include "doctest.h"

#include "chromaconf/bond_lattice.hpp"
#include "chromaconf/chromatic.hpp"
#include "chromaconf/errors.hpp"
#include "chromaconf/simplicial.hpp"

using namespace chromaconf;

namespace {

Poset antichain(int n) {
    Poset p;
    p.less.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) p.labels.push_back(std::to_string(i));
    return p;
}

Poset chain(int n) {
    Poset p = antichain(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.less[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    return p;
}

Graph diamond() {
    return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

} // namespace

TEST_CASE("order complexes of small posets") {
    SimplicialComplex empty = order_complex(antichain(0));
    CHECK(empty.empty());
    CHECK(empty.dimension() == -1);
    CHECK(reduced_betti_numbers(empty).at(-1) == 1);
    CHECK(reduced_euler_characteristic(empty) == -1);

    SimplicialComplex three_points = order_complex(antichain(3));
    CHECK(three_points.face_count() == 3);
    CHECK(reduced_betti_numbers(three_points).at(0) == 2);
    CHECK(reduced_euler_characteristic(three_points) == 2);

    SimplicialComplex edge = order_complex(chain(2));
    CHECK(edge.face_count() == 3);
    BettiVector b = reduced_betti_numbers(edge);
    CHECK(b.at(-1) == 0);
    CHECK(b.at(0) == 0);
    CHECK(b.at(1) == 0);
}

TEST_CASE("a single point is invisible to reduced homology") {
    BettiVector b = reduced_betti_numbers(order_complex(antichain(1)));
    for (int i = -1; i <= 2; ++i) CHECK(b.at(i) == 0);
}

TEST_CASE("chains give full simplices, hence contractible complexes") {
    for (int n = 2; n <= 6; ++n) {
        SimplicialComplex simplex = order_complex(chain(n));
        CHECK(simplex.dimension() == n - 1);
        CHECK(simplex.face_count() == (1LL << n) - 1);
        BettiVector b = reduced_betti_numbers(simplex);
        for (int i = -1; i <= n; ++i) CHECK(b.at(i) == 0);
        CHECK(reduced_euler_characteristic(simplex) == 0);
    }
}

TEST_CASE("complex construction validates faces") {
    CHECK_THROWS_AS(SimplicialComplex::from_chains({{2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SimplicialComplex::from_chains({{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SimplicialComplex::from_chains({{1}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(SimplicialComplex::from_chains({{1, 2}}), InvalidArgument); // not closed

    SimplicialComplex hollow = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
    CHECK(hollow.face_count() == 6);
    CHECK(reduced_betti_numbers(hollow).at(1) == 1); // a circle
}

TEST_CASE("face budget guard") {
    Guards strict;
    strict.complex_max_faces = 5;
    CHECK_THROWS_AS(order_complex(chain(4), strict), GuardExceeded);
}

TEST_CASE("facets of an order complex are its maximal chains") {
    Poset v = antichain(3);
    v.less[0][2] = true;
    v.less[1][2] = true; // two elements below one top
    SimplicialComplex c = order_complex(v);
    auto facets = c.facets();
    REQUIRE(facets.size() == 2);
    CHECK(facets[0] == std::vector<int>{0, 2});
    CHECK(facets[1] == std::vector<int>{1, 2});
}

TEST_CASE("sphere-like boundaries have the right top homology") {
    // boundary of the 3-simplex is a 2-sphere
    SimplicialComplex sphere =
        SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    BettiVector b = reduced_betti_numbers(sphere);
    CHECK(b.at(0) == 0);
    CHECK(b.at(1) == 0);
    CHECK(b.at(2) == 1);
    CHECK(reduced_euler_characteristic(sphere) == 1);
}

TEST_CASE("rational ranks ignore torsion") {
    // minimal 6-vertex closed non-orientable surface: all rational reduced
    // homology vanishes even though the integral H_1 does not
    SimplicialComplex rp2 = SimplicialComplex::from_facets(
        {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
         {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
    CHECK(rp2.face_count() == 6 + 15 + 10);
    BettiVector b = reduced_betti_numbers(rp2);
    for (int i = -1; i <= 2; ++i) CHECK(b.at(i) == 0);
    CHECK(reduced_euler_characteristic(rp2) == 0);
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    std::vector<SimplicialComplex> complexes = {
        order_complex(antichain(4)),
        order_complex(chain(5)),
        SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {3, 4}}),
        order_complex(BondLattice::build(diamond()).lower_interval(
            BondLattice::build(diamond()).top())),
    };
    for (const auto& c : complexes) {
        BettiVector b = reduced_betti_numbers(c);
        long long alternating = 0;
        int sign = -1; // the list starts at dimension -1
        for (long long value : b.values()) {
            alternating += sign * value;
            sign = -sign;
        }
        CHECK(reduced_euler_characteristic(c) == alternating);
    }
}

TEST_CASE("proper parts of the classical lattices") {
    auto k4 = BondLattice::build(Graph::complete(4));
    BettiVector b4 = reduced_betti_numbers(order_complex(k4.lower_interval(k4.top())));
    CHECK(b4.at(1) == 6); // (4-1)!
    CHECK(b4.at(0) == 0);
    CHECK(b4.at(-1) == 0);
    CHECK(b4.top_nonzero() == 1);

    auto c4 = BondLattice::build(Graph::cycle(4));
    BettiVector bc = reduced_betti_numbers(order_complex(c4.lower_interval(c4.top())));
    CHECK(bc.at(1) == 3); // the linear coefficient of the square
    CHECK(bc.top_nonzero() == 1);
}

TEST_CASE("interval homology is concentrated with the product rank") {
    std::vector<Graph> graphs = {Graph::complete(4), Graph::cycle(5), diamond(), Graph::star(5)};
    for (const auto& g : graphs) {
        auto lattice = BondLattice::build(g);
        const int m = g.vertex_count();
        for (int x = 1; x < lattice.size(); ++x) {
            const int k = lattice.element(x).length();
            BettiVector b = reduced_betti_numbers(order_complex(lattice.lower_interval(x)));
            Int expected = 1;
            for (const auto& [block, sub] : lattice.interval_product_decomposition(x))
                expected *= whitney_coefficients(sub).a(1);
            CHECK(Int(b.at(m - k - 2)) == expected);
            for (int i = -1; i <= b.top_nonzero() + 1; ++i)
                if (i != m - k - 2) CHECK(b.at(i) == 0);
        }
    }
}

TEST_CASE("hall identity sweeps") {
    for (const auto& g : {Graph::complete(2), Graph::complete(3), Graph::cycle(4), diamond()}) {
        HallReport report = verify_hall(BondLattice::build(g));
        CHECK(report.ok());
        CHECK(report.checked == BondLattice::build(g).size() - 1);
    }
}

TEST_CASE("cone over any interval is contractible") {
    // adjoin the top element to the open interval: every chain extends, so
    // the complex is a cone and all reduced homology must vanish
    auto lattice = BondLattice::build(Graph::cycle(4));
    int top = lattice.top();
    std::vector<int> members;
    for (int z = 1; z < lattice.size(); ++z)
        if (lattice.leq(z, top)) members.push_back(z); // includes top itself
    Poset closed;
    closed.less.assign(members.size(), std::vector<bool>(members.size(), false));
    for (size_t a = 0; a < members.size(); ++a) {
        closed.labels.push_back(lattice.element(members[a]).to_string());
        for (size_t b = 0; b < members.size(); ++b)
            if (a != b && lattice.leq(members[a], members[b])) closed.less[a][b] = true;
    }
    BettiVector b = reduced_betti_numbers(order_complex(closed));
    for (int i = -1; i <= closed.size(); ++i) CHECK(b.at(i) == 0);
}
