#include "chromaconf/obstacles.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "chromaconf/errors.hpp"

namespace chromaconf {

void ObstacleSpec::validate() const {
    if (movers < 1) throw InvalidArgument("an obstacle spec needs n >= 1 moving points");
    if (obstacles < 1)
        throw InvalidArgument("an obstacle spec needs r >= 1 obstacles; "
                              "without obstacles use the plain poincare route");
    std::set<Edge> c;
    for (const auto& [i, j] : collide) {
        Edge e = make_edge(i, j);
        if (e.first < 1 || e.second > movers)
            throw InvalidArgument("collision pair {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} outside 1.." + std::to_string(movers));
        if (!c.insert(e).second)
            throw InvalidArgument("duplicate collision pair {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "}");
    }
    std::set<std::pair<int, int>> o;
    for (const auto& [k, s] : avoid) {
        if (k < 1 || k > movers || s < 1 || s > obstacles)
            throw InvalidArgument("avoidance pair (" + std::to_string(k) + "," + std::to_string(s) +
                                  ") outside [n] x [r]");
        if (!o.insert({k, s}).second)
            throw InvalidArgument("duplicate avoidance pair (" + std::to_string(k) + "," +
                                  std::to_string(s) + ")");
    }
}

ObstacleSpec ObstacleSpec::full_avoidance(int n, int r) {
    ObstacleSpec spec;
    spec.movers = n;
    spec.obstacles = r;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) spec.collide.push_back({i, j});
    for (int k = 1; k <= n; ++k)
        for (int s = 1; s <= r; ++s) spec.avoid.push_back({k, s});
    spec.validate();
    return spec;
}

ObstacleSpec ObstacleSpec::diagonal_avoidance(int n) {
    ObstacleSpec spec;
    spec.movers = n;
    spec.obstacles = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) spec.collide.push_back({i, j});
    for (int k = 1; k <= n; ++k) spec.avoid.push_back({k, k});
    spec.validate();
    return spec;
}

ObstacleSpec ObstacleSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("obstacle spec is not valid JSON: ") + e.what());
    }
    ObstacleSpec spec;
    try {
        spec.movers = j.at("n").get<int>();
        spec.obstacles = j.at("r").get<int>();
        for (const auto& pair : j.value("collide", nlohmann::json::array())) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("collide entries must be [i, j] pairs");
            spec.collide.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        for (const auto& pair : j.value("avoid", nlohmann::json::array())) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("avoid entries must be [mover, obstacle] pairs");
            spec.avoid.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("obstacle spec is missing fields: ") + e.what());
    }
    spec.validate();
    return spec;
}

std::string ObstacleSpec::to_json_text() const {
    nlohmann::json j;
    j["n"] = movers;
    j["r"] = obstacles;
    j["collide"] = nlohmann::json::array();
    for (const auto& [i, k] : collide) j["collide"].push_back({i, k});
    j["avoid"] = nlohmann::json::array();
    for (const auto& [k, s] : avoid) j["avoid"].push_back({k, s});
    return j.dump();
}

Graph build_gamma(const ObstacleSpec& spec) {
    spec.validate();
    const int n = spec.movers;
    const int r = spec.obstacles;
    std::vector<Edge> edges;
    for (const auto& [i, j] : spec.collide) edges.push_back(make_edge(i, j));
    for (const auto& [k, s] : spec.avoid) edges.push_back({k, n + s});
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) edges.push_back({n + a, n + b});
    return Graph(n + r, std::move(edges));
}

std::vector<int> obstacle_vertices(const ObstacleSpec& spec) {
    std::vector<int> out;
    for (int s = 1; s <= spec.obstacles; ++s) out.push_back(spec.movers + s);
    return out;
}

bool is_relatively_complete(const Graph& g, const std::vector<int>& h_vertices) {
    std::vector<char> in_h(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int v : h_vertices) {
        if (v < 1 || v > g.vertex_count())
            throw InvalidArgument("subgraph vertex " + std::to_string(v) + " out of range");
        in_h[static_cast<size_t>(v)] = 1;
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (in_h[static_cast<size_t>(v)]) continue;
        const auto& nbrs = g.neighbors(v);
        for (size_t a = 0; a < nbrs.size(); ++a) {
            if (!in_h[static_cast<size_t>(nbrs[a])]) continue;
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                if (!in_h[static_cast<size_t>(nbrs[b])]) continue;
                if (!g.has_edge(nbrs[a], nbrs[b])) return false;
            }
        }
    }
    return true;
}

PoincareSeries obstacle_poincare(const ObstacleSpec& spec, int euclidean_dim) {
    spec.validate();
    Graph gamma = build_gamma(spec);
    IntPolynomial denominator = poincare_from_chromatic(Graph::complete(spec.obstacles), euclidean_dim).base();

    // The obstacle clique sits in one component; the quotient applies to
    // that factor only, the other components multiply through unchanged.
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& component : gamma.connected_components()) {
        Graph sub = induced_subgraph(gamma, component).graph;
        IntPolynomial base = poincare_from_chromatic(sub, euclidean_dim).base();
        bool holds_clique = std::binary_search(component.begin(), component.end(), spec.movers + 1);
        if (holds_clique) {
            auto quotient = base.divide_exact(denominator);
            if (!quotient)
                throw InternalError("obstacle series is not divisible by the obstacle-clique series; "
                                    "this contradicts the bundle decomposition and indicates a bug");
            for (const auto& c : quotient->coefficients())
                if (c < 0)
                    throw InternalError("obstacle quotient has a negative coefficient; "
                                        "this contradicts the bundle decomposition and indicates a bug");
            base = *quotient;
        }
        result = result * base;
    }
    return PoincareSeries(std::move(result), euclidean_dim);
}

PoincareSeries gamma_poincare(const ObstacleSpec& spec, int euclidean_dim) {
    return poincare_from_chromatic(build_gamma(spec), euclidean_dim);
}

} // namespace chromaconf
