#ifndef CHROMACONF_GRAPH_HPP
#define CHROMACONF_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chromaconf {

/// Unordered edge {i, j}, stored normalized with i < j.
using Edge = std::pair<int, int>;

Edge make_edge(int i, int j);

/// Labeled simple graph on vertices 1..m. Immutable after construction;
/// no loops, no multi-edges.
class Graph {
public:
    /// Throws InvalidArgument on m < 1, loops, duplicate edges, or
    /// endpoints outside 1..m. Edge endpoint order is normalized.
    Graph(int vertex_count, std::vector<Edge> edges);

    static Graph complete(int m);
    static Graph cycle(int m);  // m >= 3
    static Graph path(int m);
    static Graph star(int m);   // center is vertex 1
    static Graph edgeless(int m);

    int vertex_count() const { return m_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Lexicographically sorted list of normalized edges.
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    bool is_connected() const;
    /// Vertex sets of the connected components, each sorted, the list
    /// ordered by smallest member.
    std::vector<std::vector<int>> connected_components() const;

    /// Number of vertex triples inducing a triangle.
    long long triangle_count() const;

    bool operator==(const Graph& rhs) const {
        return m_ == rhs.m_ && edges_ == rhs.edges_;
    }

private:
    int m_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_; // adjacency_[v] sorted, 1-based
};

/// Cartesian (box) product; vertex (v, w) becomes (v-1)*h.vertex_count() + w.
Graph box_product(const Graph& g, const Graph& h);

/// Disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union (no cross edges); h's vertices are shifted.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph on a nonempty vertex subset, relabeled 1..|s| in the
/// order induced from the host graph. original_labels[w-1] is the host
/// vertex that became w.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_labels;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Induced subgraphs of the connected components, in component order.
std::vector<Graph> component_subgraphs(const Graph& g);

/// A total order on the edges of a graph, as a bijection onto 1..|E|.
class EdgeOrdering {
public:
    /// edges_by_rank[r-1] is the edge of rank r; must be a permutation of
    /// the graph's edge set.
    EdgeOrdering(Graph graph, std::vector<Edge> edges_by_rank);

    const Graph& graph() const { return graph_; }
    int rank(const Edge& e) const; // 1..|E|; throws on unknown edge
    const std::vector<Edge>& edges_by_rank() const { return by_rank_; }

private:
    Graph graph_;
    std::vector<Edge> by_rank_;
    std::vector<std::pair<Edge, int>> rank_index_; // sorted by edge
};

/// The sum-based edge ordering: writing each edge as (i,j) with i < j,
/// ranks descend as i+j grows; among equal sums the edge with the larger j
/// receives the smaller rank. The edge with the smallest sum gets rank |E|.
EdgeOrdering nbc_edge_ordering(const Graph& g);

/// Ranks 1..|E| assigned in lexicographic edge order.
EdgeOrdering lex_edge_ordering(const Graph& g);

/// Deterministic pseudo-random permutation of the edges.
EdgeOrdering random_edge_ordering(const Graph& g, std::uint64_t seed);

/// Parse either the edge-list text format ("m" line, then "i j" lines,
/// '#' comments) or a builder expression: "complete:m", "cycle:m",
/// "path:m", "star:m", "box:<expr>,<expr>", "join:<expr>,<expr>".
/// Malformed lines, out-of-range vertices, duplicate edges and loops are
/// each reported as a distinct ParseError.
Graph parse_graph(const std::string& text);

/// Edge-list text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

} // namespace chromaconf

#endif
