#include "chromaconf/forests.hpp"

#include <algorithm>
#include <numeric>

#include "chromaconf/errors.hpp"

namespace chromaconf {

namespace {

// Union-find with a rollback stack so the subset search can backtrack.
class RewindableUnionFind {
public:
    explicit RewindableUnionFind(int n) : parent_(static_cast<size_t>(n) + 1), size_(static_cast<size_t>(n) + 1, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
        return v;
    }

    // Returns false (and records nothing) if the endpoints were already
    // joined, i.e. the edge would close a cycle.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[static_cast<size_t>(ra)] < size_[static_cast<size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<size_t>(rb)] = ra;
        size_[static_cast<size_t>(ra)] += size_[static_cast<size_t>(rb)];
        trail_.push_back({ra, rb});
        return true;
    }

    void rollback() {
        auto [ra, rb] = trail_.back();
        trail_.pop_back();
        parent_[static_cast<size_t>(rb)] = rb;
        size_[static_cast<size_t>(ra)] -= size_[static_cast<size_t>(rb)];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> trail_;
};

} // namespace

std::vector<Forest> enumerate_spanning_forests(const Graph& g, int k, const Guards& guards) {
    const int m = g.vertex_count();
    const int e = g.edge_count();
    if (k < 1 || k > m)
        throw InvalidArgument("component count " + std::to_string(k) + " outside 1.." + std::to_string(m));
    if (e > guards.forest_max_edges)
        throw GuardExceeded("forest enumeration allows |E| <= " + std::to_string(guards.forest_max_edges));

    const int target = m - k;
    std::vector<Forest> result;
    std::vector<Edge> chosen;
    chosen.reserve(static_cast<size_t>(target));
    RewindableUnionFind uf(m);
    const auto& edges = g.edges();

    // Depth-first over edge indices in sorted order, so the output is
    // lexicographic in the edge lists without re-sorting.
    auto recurse = [&](auto&& self, int idx) -> void {
        if (static_cast<int>(chosen.size()) == target) {
            result.push_back(Forest{m, chosen});
            return;
        }
        int needed = target - static_cast<int>(chosen.size());
        if (e - idx < needed) return;
        for (int next = idx; next <= e - needed; ++next) {
            const auto& edge = edges[static_cast<size_t>(next)];
            if (!uf.unite(edge.first, edge.second)) continue;
            chosen.push_back(edge);
            self(self, next + 1);
            chosen.pop_back();
            uf.rollback();
        }
    };
    recurse(recurse, 0);
    return result;
}

bool contains_broken_cycle(const Forest& f, const EdgeOrdering& ord) {
    const Graph& g = ord.graph();
    const int m = g.vertex_count();
    if (f.vertex_count != m)
        throw InvalidArgument("forest and ordering refer to different graphs");
    for (const auto& [i, j] : f.edges)
        if (!g.has_edge(i, j))
            throw InvalidArgument("forest edge {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} is not an edge of the ordered graph");

    // Forest adjacency and component labels.
    std::vector<std::vector<int>> adj(static_cast<size_t>(m) + 1);
    RewindableUnionFind uf(m);
    for (const auto& [i, j] : f.edges) {
        if (!uf.unite(i, j))
            throw InvalidArgument("edge set is not acyclic, so it is not a forest");
        adj[static_cast<size_t>(i)].push_back(j);
        adj[static_cast<size_t>(j)].push_back(i);
    }

    std::vector<int> parent(static_cast<size_t>(m) + 1);
    std::vector<int> seen(static_cast<size_t>(m) + 1, 0);
    int stamp = 0;

    // A broken circuit in f is witnessed by a non-forest edge that is
    // ranked above every edge of the unique tree path joining its ends.
    for (const auto& edge : g.edges()) {
        if (std::binary_search(f.edges.begin(), f.edges.end(), edge)) continue;
        const auto [a, b] = edge;
        if (uf.find(a) != uf.find(b)) continue;

        ++stamp;
        std::vector<int> stack{a};
        seen[static_cast<size_t>(a)] = stamp;
        parent[static_cast<size_t>(a)] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == b) break;
            for (int w : adj[static_cast<size_t>(v)]) {
                if (seen[static_cast<size_t>(w)] != stamp) {
                    seen[static_cast<size_t>(w)] = stamp;
                    parent[static_cast<size_t>(w)] = v;
                    stack.push_back(w);
                }
            }
        }
        int max_path_rank = 0;
        for (int v = b; v != a; v = parent[static_cast<size_t>(v)])
            max_path_rank = std::max(max_path_rank, ord.rank(make_edge(v, parent[static_cast<size_t>(v)])));
        if (ord.rank(edge) > max_path_rank) return true;
    }
    return false;
}

std::vector<Forest> nbc_forests(const Graph& g, const EdgeOrdering& ord, int k, const Guards& guards) {
    std::vector<Forest> out;
    for (auto& f : enumerate_spanning_forests(g, k, guards))
        if (!contains_broken_cycle(f, ord)) out.push_back(std::move(f));
    return out;
}

std::vector<Forest> all_nbc_forests(const Graph& g, const EdgeOrdering& ord, const Guards& guards) {
    std::vector<Forest> out;
    for (int k = g.vertex_count(); k >= 1; --k) {
        auto batch = nbc_forests(g, ord, k, guards);
        out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    return out;
}

std::vector<Forest> increasing_forests_complete(int m, int k) {
    if (m < 1) throw InvalidArgument("complete graph needs m >= 1");
    if (m > 9) throw GuardExceeded("increasing-forest enumeration allows m <= 9");
    if (k < 1 || k > m)
        throw InvalidArgument("component count " + std::to_string(k) + " outside 1.." + std::to_string(m));

    // A forest on K_m is increasing exactly when every non-root vertex
    // hangs below a smaller one, so enumerate a parent in 0..v-1 for each
    // vertex v >= 2 (0 marks a new root) with k-1 roots besides vertex 1.
    std::vector<Forest> result;
    std::vector<Edge> edges;
    auto recurse = [&](auto&& self, int v, int roots) -> void {
        if (roots > k || roots + (m - v + 1) < k) return;
        if (v > m) {
            std::vector<Edge> sorted = edges;
            std::sort(sorted.begin(), sorted.end());
            result.push_back(Forest{m, std::move(sorted)});
            return;
        }
        self(self, v + 1, roots + 1); // v starts its own tree
        for (int parent = 1; parent < v; ++parent) {
            edges.push_back({parent, v});
            self(self, v + 1, roots);
            edges.pop_back();
        }
    };
    recurse(recurse, 2, 1);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace chromaconf
