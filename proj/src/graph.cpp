#include "chromaconf/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "chromaconf/errors.hpp"

namespace chromaconf {

Edge make_edge(int i, int j) {
    if (i == j) throw InvalidArgument("loop edge {" + std::to_string(i) + "," + std::to_string(j) + "} not allowed");
    return i < j ? Edge{i, j} : Edge{j, i};
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : m_(vertex_count) {
    if (m_ < 1) throw InvalidArgument("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (const auto& [i, j] : edges) edges_.push_back(make_edge(i, j));
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidArgument("duplicate edge in edge set");
    adjacency_.assign(static_cast<size_t>(m_) + 1, {});
    for (const auto& [i, j] : edges_) {
        if (i < 1 || j > m_)
            throw InvalidArgument("edge {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} has an endpoint outside 1.." + std::to_string(m_));
        adjacency_[static_cast<size_t>(i)].push_back(j);
        adjacency_[static_cast<size_t>(j)].push_back(i);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(int m) {
    if (m < 1) throw InvalidArgument("complete graph needs m >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) e.push_back({i, j});
    return Graph(m, std::move(e));
}

Graph Graph::cycle(int m) {
    if (m < 3) throw InvalidArgument("cycle graph needs m >= 3");
    std::vector<Edge> e;
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
    e.push_back({1, m});
    return Graph(m, std::move(e));
}

Graph Graph::path(int m) {
    if (m < 1) throw InvalidArgument("path graph needs m >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
    return Graph(m, std::move(e));
}

Graph Graph::star(int m) {
    if (m < 1) throw InvalidArgument("star graph needs m >= 1");
    std::vector<Edge> e;
    for (int j = 2; j <= m; ++j) e.push_back({1, j});
    return Graph(m, std::move(e));
}

Graph Graph::edgeless(int m) {
    return Graph(m, {});
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > m_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    return adjacency_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<int> label(static_cast<size_t>(m_) + 1, 0);
    std::vector<std::vector<int>> components;
    for (int start = 1; start <= m_; ++start) {
        if (label[static_cast<size_t>(start)] != 0) continue;
        components.emplace_back();
        auto& comp = components.back();
        std::vector<int> stack{start};
        label[static_cast<size_t>(start)] = static_cast<int>(components.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adjacency_[static_cast<size_t>(v)]) {
                if (label[static_cast<size_t>(w)] == 0) {
                    label[static_cast<size_t>(w)] = static_cast<int>(components.size());
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return components; // start vertices increase, so smallest members do too
}

bool Graph::is_connected() const {
    return connected_components().size() == 1;
}

long long Graph::triangle_count() const {
    long long count = 0;
    for (const auto& [i, j] : edges_) {
        const auto& ni = adjacency_[static_cast<size_t>(i)];
        const auto& nj = adjacency_[static_cast<size_t>(j)];
        // common neighbors above j, so each triangle is counted at its
        // lexicographically smallest edge
        auto it = std::upper_bound(ni.begin(), ni.end(), j);
        for (; it != ni.end(); ++it)
            if (std::binary_search(nj.begin(), nj.end(), *it)) ++count;
    }
    return count;
}

Graph box_product(const Graph& g, const Graph& h) {
    const int mg = g.vertex_count(), mh = h.vertex_count();
    auto id = [mh](int v, int w) { return (v - 1) * mh + w; };
    std::vector<Edge> e;
    for (int v = 1; v <= mg; ++v)
        for (const auto& [w1, w2] : h.edges()) e.push_back({id(v, w1), id(v, w2)});
    for (int w = 1; w <= mh; ++w)
        for (const auto& [v1, v2] : g.edges()) e.push_back({id(v1, w), id(v2, w)});
    return Graph(mg * mh, std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
    const int mg = g.vertex_count(), mh = h.vertex_count();
    std::vector<Edge> e = g.edges();
    for (const auto& [i, j] : h.edges()) e.push_back({i + mg, j + mg});
    for (int i = 1; i <= mg; ++i)
        for (int j = 1; j <= mh; ++j) e.push_back({i, j + mg});
    return Graph(mg + mh, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int mg = g.vertex_count();
    std::vector<Edge> e = g.edges();
    for (const auto& [i, j] : h.edges()) e.push_back({i + mg, j + mg});
    return Graph(mg + h.vertex_count(), std::move(e));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw InvalidArgument("induced subgraph needs a nonempty vertex set");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != vertices.size())
        throw InvalidArgument("induced subgraph vertex set has duplicates");
    if (sorted.front() < 1 || sorted.back() > g.vertex_count())
        throw InvalidArgument("induced subgraph vertex outside 1.." + std::to_string(g.vertex_count()));
    std::vector<int> new_label(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t idx = 0; idx < sorted.size(); ++idx)
        new_label[static_cast<size_t>(sorted[idx])] = static_cast<int>(idx) + 1;
    std::vector<Edge> e;
    for (const auto& [i, j] : g.edges()) {
        int a = new_label[static_cast<size_t>(i)], b = new_label[static_cast<size_t>(j)];
        if (a != 0 && b != 0) e.push_back({a, b});
    }
    return InducedSubgraph{Graph(static_cast<int>(sorted.size()), std::move(e)), std::move(sorted)};
}

std::vector<Graph> component_subgraphs(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : g.connected_components())
        out.push_back(induced_subgraph(g, comp).graph);
    return out;
}

EdgeOrdering::EdgeOrdering(Graph graph, std::vector<Edge> edges_by_rank)
    : graph_(std::move(graph)), by_rank_(std::move(edges_by_rank)) {
    if (by_rank_.size() != graph_.edges().size())
        throw InvalidArgument("edge ordering must list every edge exactly once");
    rank_index_.reserve(by_rank_.size());
    for (size_t r = 0; r < by_rank_.size(); ++r)
        rank_index_.push_back({by_rank_[r], static_cast<int>(r) + 1});
    std::sort(rank_index_.begin(), rank_index_.end());
    for (size_t idx = 0; idx < rank_index_.size(); ++idx) {
        if (rank_index_[idx].first != graph_.edges()[idx])
            throw InvalidArgument("edge ordering does not match the graph's edge set");
    }
}

int EdgeOrdering::rank(const Edge& e) const {
    Edge key = make_edge(e.first, e.second);
    auto it = std::lower_bound(rank_index_.begin(), rank_index_.end(),
                               std::pair<Edge, int>{key, 0});
    if (it == rank_index_.end() || it->first != key)
        throw InvalidArgument("edge {" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + "} is not in the ordered graph");
    return it->second;
}

EdgeOrdering nbc_edge_ordering(const Graph& g) {
    std::vector<Edge> order = g.edges();
    // Ranks are assigned |E|..1 along this sequence: sums ascending, and
    // within a sum the larger second endpoint comes later (smaller rank).
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
        int sa = a.first + a.second, sb = b.first + b.second;
        if (sa != sb) return sa < sb;
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    std::reverse(order.begin(), order.end()); // by_rank[0] must be rank 1
    return EdgeOrdering(g, std::move(order));
}

EdgeOrdering lex_edge_ordering(const Graph& g) {
    return EdgeOrdering(g, g.edges());
}

EdgeOrdering random_edge_ordering(const Graph& g, std::uint64_t seed) {
    std::vector<Edge> order = g.edges();
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return EdgeOrdering(g, std::move(order));
}

namespace {

// Builder-expression grammar:
//   expr := name ":" int | ("box"|"join") ":" expr "," expr
struct ExprParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad graph expression '" + text + "': " + why);
    }

    std::string word() {
        size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) != 0))
            ++pos;
        if (pos == start) fail("expected a builder name at position " + std::to_string(start));
        return text.substr(start, pos - start);
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    }

    int integer() {
        size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) != 0))
            ++pos;
        if (pos == start) fail("expected a number at position " + std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    }

    Graph expr() {
        std::string name = word();
        expect(':');
        if (name == "complete") return Graph::complete(integer());
        if (name == "cycle") return Graph::cycle(integer());
        if (name == "path") return Graph::path(integer());
        if (name == "star") return Graph::star(integer());
        if (name == "box" || name == "join") {
            Graph left = expr();
            expect(',');
            Graph right = expr();
            return name == "box" ? box_product(left, right) : join(left, right);
        }
        fail("unknown builder '" + name + "'");
    }

    Graph parse() {
        Graph g = expr();
        if (pos != text.size()) fail("trailing text at position " + std::to_string(pos));
        return g;
    }
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int m = -1;
    std::set<Edge> seen;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (m < 0) {
            if (!(fields >> m) || m < 1 || !(fields >> std::ws).eof())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected the vertex count, got '" + line + "'");
            continue;
        }
        int i = 0, j = 0;
        if (!(fields >> i >> j) || !(fields >> std::ws).eof())
            throw ParseError("line " + std::to_string(lineno) + ": expected 'i j', got '" + line + "'");
        if (i == j)
            throw ParseError("line " + std::to_string(lineno) + ": loop edge {" +
                             std::to_string(i) + "," + std::to_string(j) + "}");
        if (i < 1 || i > m || j < 1 || j > m)
            throw ParseError("line " + std::to_string(lineno) + ": vertex outside 1.." + std::to_string(m));
        Edge e = make_edge(i, j);
        if (!seen.insert(e).second)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate edge {" +
                             std::to_string(e.first) + "," + std::to_string(e.second) + "}");
        edges.push_back(e);
    }
    if (m < 0) throw ParseError("empty graph text");
    return Graph(m, std::move(edges));
}

} // namespace

Graph parse_graph(const std::string& text) {
    // The edge-list format starts with the vertex count once comments and
    // blank lines are skipped; anything else is a builder expression.
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (std::isdigit(static_cast<unsigned char>(line[0])) != 0) return parse_edge_list(text);
        ExprParser parser{line};
        return parser.parse();
    }
    throw ParseError("empty graph text");
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
    return out.str();
}

} // namespace chromaconf
