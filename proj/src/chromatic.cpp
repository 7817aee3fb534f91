#include "chromaconf/chromatic.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chromaconf/errors.hpp"

namespace chromaconf {

namespace {

// Degree-refined canonical encoding used as the memo key. Vertices are
// relabeled by (stable refinement color, original index); the key pins the
// labeled graph exactly, so equal keys always mean equal chromatic
// polynomials, while isomorphic inputs often (not always) share a key.
std::string refine_and_encode(const Graph& g) {
    const int m = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(m) + 1, 0);
    for (int v = 1; v <= m; ++v) color[static_cast<size_t>(v)] = g.degree(v);

    int classes = 0;
    for (int round = 0; round < m; ++round) {
        std::vector<std::pair<std::vector<int>, int>> signatures; // (sig, vertex)
        signatures.reserve(static_cast<size_t>(m));
        for (int v = 1; v <= m; ++v) {
            std::vector<int> sig{color[static_cast<size_t>(v)]};
            for (int w : g.neighbors(v)) sig.push_back(color[static_cast<size_t>(w)]);
            std::sort(sig.begin() + 1, sig.end());
            signatures.push_back({std::move(sig), v});
        }
        std::sort(signatures.begin(), signatures.end());
        int next_classes = 0;
        for (size_t idx = 0; idx < signatures.size(); ++idx) {
            if (idx > 0 && signatures[idx].first != signatures[idx - 1].first) ++next_classes;
            color[static_cast<size_t>(signatures[idx].second)] = next_classes;
        }
        ++next_classes;
        if (next_classes == classes) break;
        classes = next_classes;
    }

    std::vector<int> order(static_cast<size_t>(m));
    for (int v = 1; v <= m; ++v) order[static_cast<size_t>(v - 1)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[static_cast<size_t>(a)] != color[static_cast<size_t>(b)])
            return color[static_cast<size_t>(a)] < color[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<int> new_label(static_cast<size_t>(m) + 1, 0);
    for (size_t idx = 0; idx < order.size(); ++idx)
        new_label[static_cast<size_t>(order[idx])] = static_cast<int>(idx) + 1;

    std::vector<Edge> enc;
    enc.reserve(g.edges().size());
    for (const auto& [i, j] : g.edges())
        enc.push_back(make_edge(new_label[static_cast<size_t>(i)], new_label[static_cast<size_t>(j)]));
    std::sort(enc.begin(), enc.end());

    std::string key;
    key.reserve(2 * enc.size() + 1);
    key.push_back(static_cast<char>(m));
    for (const auto& [i, j] : enc) {
        key.push_back(static_cast<char>(i));
        key.push_back(static_cast<char>(j));
    }
    return key;
}

Graph contract_edge(const Graph& g, const Edge& e) {
    const auto [keep, gone] = e; // keep < gone
    const int m = g.vertex_count();
    auto relabel = [&](int v) {
        if (v == gone) v = keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<Edge> edges;
    for (const auto& [i, j] : g.edges()) {
        int a = relabel(i), b = relabel(j);
        if (a != b) edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(m - 1, std::move(edges));
}

Graph delete_edge(const Graph& g, const Edge& e) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (const auto& edge : g.edges())
        if (edge != e) edges.push_back(edge);
    return Graph(g.vertex_count(), std::move(edges));
}

int common_neighbor_count(const Graph& g, const Edge& e) {
    const auto& ni = g.neighbors(e.first);
    const auto& nj = g.neighbors(e.second);
    int count = 0;
    auto a = ni.begin();
    auto b = nj.begin();
    while (a != ni.end() && b != nj.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else { ++count; ++a; ++b; }
    }
    return count;
}

using Memo = std::map<std::string, IntPolynomial>;

IntPolynomial chi_any(const Graph& g, Memo& memo);

IntPolynomial chi_connected(const Graph& g, Memo& memo) {
    const int m = g.vertex_count();
    const int e = g.edge_count();
    if (e == 0) return IntPolynomial::monomial(m); // single vertex
    if (2 * e == m * (m - 1)) return falling_factorial(m);
    if (e == m - 1) // spanning tree
        return IntPolynomial::monomial(1) * IntPolynomial({-1, 1}).pow(static_cast<unsigned>(m - 1));

    std::string key = refine_and_encode(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Contracting an edge with many common neighbors collapses the most
    // multi-edges, keeping the recursion shallow.
    Edge pick = g.edges().front();
    int best = -1;
    for (const auto& edge : g.edges()) {
        int c = common_neighbor_count(g, edge);
        if (c > best) { best = c; pick = edge; }
    }

    IntPolynomial result = chi_any(delete_edge(g, pick), memo) - chi_connected(contract_edge(g, pick), memo);
    memo.emplace(std::move(key), result);
    return result;
}

IntPolynomial chi_any(const Graph& g, Memo& memo) {
    auto components = g.connected_components();
    if (components.size() == 1) return chi_connected(g, memo);
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& comp : components)
        result = result * chi_connected(induced_subgraph(g, comp).graph, memo);
    return result;
}

} // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
    Memo memo;
    return chi_any(g, memo);
}

Int count_proper_colorings(const Graph& g, long long lambda, const Guards& guards) {
    if (lambda < 0) throw InvalidArgument("color count must be nonnegative");
    if (g.vertex_count() > guards.oracle_max_vertices || lambda > guards.oracle_max_lambda)
        throw GuardExceeded("oracle scale exceeded: coloring enumeration allows m <= " +
                            std::to_string(guards.oracle_max_vertices) + " and lambda <= " +
                            std::to_string(guards.oracle_max_lambda));
    const int m = g.vertex_count();
    if (lambda == 0) return 0;

    // Backtracking over vertices in label order; a partial assignment is
    // extended only while it stays proper, so every leaf reached is one
    // proper coloring.
    std::vector<int> assigned(static_cast<size_t>(m) + 1, 0);
    Int total = 0;
    auto recurse = [&](auto&& self, int v) -> void {
        if (v > m) { ++total; return; }
        for (int c = 1; c <= lambda; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (w < v && assigned[static_cast<size_t>(w)] == c) { ok = false; break; }
            }
            if (!ok) continue;
            assigned[static_cast<size_t>(v)] = c;
            self(self, v + 1);
        }
        assigned[static_cast<size_t>(v)] = 0;
    };
    recurse(recurse, 1);
    return total;
}

WhitneyCoefficients::WhitneyCoefficients(int vertex_count, std::vector<Int> a)
    : m_(vertex_count), a_(std::move(a)) {
    if (static_cast<int>(a_.size()) != m_)
        throw InvalidArgument("need exactly one coefficient per degree 1..m");
}

const Int& WhitneyCoefficients::a(int i) const {
    if (i < 1 || i > m_)
        throw InvalidArgument("coefficient index " + std::to_string(i) + " outside 1.." + std::to_string(m_));
    return a_[static_cast<size_t>(i - 1)];
}

WhitneyCoefficients whitney_coefficients(const Graph& g) {
    if (!g.is_connected())
        throw InvalidArgument("the alternating coefficient form requires a connected graph");
    const int m = g.vertex_count();
    IntPolynomial chi = chromatic_polynomial(g);
    if (chi.degree() != m || chi.coefficient(0) != 0)
        throw InternalError("chromatic polynomial of a connected graph must have degree m and no constant term");
    std::vector<Int> a(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        Int value = chi.coefficient(i);
        if ((m - i) % 2 == 1) value = -value;
        if (value < 0)
            throw InternalError("sign alternation violated at degree " + std::to_string(i));
        a[static_cast<size_t>(i - 1)] = value;
    }
    if (a.back() != 1)
        throw InternalError("leading coefficient of a chromatic polynomial must be 1");
    if (m >= 2 && a[static_cast<size_t>(m - 2)] != g.edge_count())
        throw InternalError("the next-to-leading coefficient must equal the edge count");
    return WhitneyCoefficients(m, std::move(a));
}

Int count_acyclic_orientations_unique_source(const Graph& g, int v0, const Guards& guards) {
    const int m = g.vertex_count();
    const int e = g.edge_count();
    if (v0 < 1 || v0 > m) throw InvalidArgument("source vertex out of range");
    if (!g.is_connected())
        throw InvalidArgument("orientation counting requires a connected graph");
    if (e > guards.orientation_max_edges || e > 62)
        throw GuardExceeded("oracle scale exceeded: orientation enumeration allows |E| <= " +
                            std::to_string(std::min(guards.orientation_max_edges, 62)));

    const auto& edges = g.edges();
    std::vector<int> indegree(static_cast<size_t>(m) + 1, 0);
    std::vector<std::vector<int>> out(static_cast<size_t>(m) + 1);
    Int total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::fill(indegree.begin(), indegree.end(), 0);
        for (auto& v : out) v.clear();
        for (int k = 0; k < e; ++k) {
            auto [i, j] = edges[static_cast<size_t>(k)];
            if ((mask >> k) & 1u) std::swap(i, j);
            out[static_cast<size_t>(i)].push_back(j);
            ++indegree[static_cast<size_t>(j)];
        }
        if (indegree[static_cast<size_t>(v0)] != 0) continue;
        bool unique_source = true;
        for (int v = 1; v <= m && unique_source; ++v)
            if (v != v0 && indegree[static_cast<size_t>(v)] == 0) unique_source = false;
        if (!unique_source) continue;

        // Kahn's algorithm; acyclic iff every vertex gets popped.
        std::vector<int> indeg = indegree;
        std::vector<int> queue{v0};
        int popped = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++popped;
            for (int w : out[static_cast<size_t>(v)])
                if (--indeg[static_cast<size_t>(w)] == 0) queue.push_back(w);
        }
        if (popped == m) ++total;
    }
    return total;
}

} // namespace chromaconf
