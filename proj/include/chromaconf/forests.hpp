#ifndef CHROMACONF_FORESTS_HPP
#define CHROMACONF_FORESTS_HPP

#include <vector>

#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"

namespace chromaconf {

/// An acyclic edge subset of a host graph on `vertex_count` vertices.
/// Components are counted over all vertices, isolated ones included, so
/// component_count() + size() == vertex_count always.
struct Forest {
    int vertex_count = 0;
    std::vector<Edge> edges; // sorted

    int size() const { return static_cast<int>(edges.size()); }
    int component_count() const { return vertex_count - size(); }

    bool operator==(const Forest& rhs) const {
        return vertex_count == rhs.vertex_count && edges == rhs.edges;
    }
    bool operator<(const Forest& rhs) const { return edges < rhs.edges; }
};

/// All spanning forests of g with exactly k components (equivalently, all
/// acyclic edge subsets of size m-k), in lexicographic order of their
/// sorted edge lists. Guarded by guards.forest_max_edges.
std::vector<Forest> enumerate_spanning_forests(const Graph& g, int k,
                                               const Guards& guards = Guards::defaults());

/// True iff the forest contains a broken circuit: some non-forest edge
/// whose endpoints lie in one tree has the maximal rank on the unique
/// cycle it closes. The forest's edges must all belong to ord's graph.
bool contains_broken_cycle(const Forest& f, const EdgeOrdering& ord);

/// The spanning forests with k components and no broken circuit. For a
/// connected graph there are exactly a_k(g) of them, for any ordering.
std::vector<Forest> nbc_forests(const Graph& g, const EdgeOrdering& ord, int k,
                                const Guards& guards = Guards::defaults());

/// All NBC forests of every size, ordered by component count descending
/// (empty forest first) then lexicographically.
std::vector<Forest> all_nbc_forests(const Graph& g, const EdgeOrdering& ord,
                                    const Guards& guards = Guards::defaults());

/// Spanning forests of the complete graph K_m with k components in which
/// every tree is rooted at its minimum vertex and labels increase along
/// every root-to-leaf path. Coincides, as a set, with the NBC forests of
/// K_m under the sum-based edge ordering. Guard: m <= 9.
std::vector<Forest> increasing_forests_complete(int m, int k);

} // namespace chromaconf

#endif
