#ifndef CHROMACONF_OBSTACLES_HPP
#define CHROMACONF_OBSTACLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"
#include "chromaconf/poincare.hpp"

namespace chromaconf {

/// n moving points and r fixed obstacles with collision constraints C
/// (pairs of movers that must stay distinct) and avoidance constraints O
/// (mover k must avoid obstacle s).
struct ObstacleSpec {
    int movers = 0;                          // n >= 1
    int obstacles = 0;                       // r >= 1
    std::vector<Edge> collide;               // pairs in 1..n, i < j
    std::vector<std::pair<int, int>> avoid;  // (mover, obstacle) in [n] x [r]

    /// Throws InvalidArgument on bad ranges or duplicates; r = 0 is
    /// rejected with a pointer to the plain configuration-space route.
    void validate() const;

    /// Every mover pairwise distinct and avoiding every obstacle; the
    /// associated graph is the join K_n * K_r = K_{n+r}.
    static ObstacleSpec full_avoidance(int n, int r);
    /// Every mover pairwise distinct, mover i avoiding exactly obstacle i;
    /// the associated graph is the box product K_2 x K_n.
    static ObstacleSpec diagonal_avoidance(int n);

    static ObstacleSpec from_json_text(const std::string& text);
    std::string to_json_text() const;
};

/// The constraint graph on n + r vertices: the collision edges among
/// movers 1..n, an edge {k, n+s} per avoidance pair, and the complete
/// graph on the obstacle vertices n+1..n+r.
Graph build_gamma(const ObstacleSpec& spec);

/// The obstacle-vertex block n+1..n+r of build_gamma(spec).
std::vector<int> obstacle_vertices(const ObstacleSpec& spec);

/// True iff every vertex outside H that is adjacent to two vertices of H
/// sees those two joined by an edge of H; the condition under which
/// projecting away the non-H coordinates is a bundle map.
bool is_relatively_complete(const Graph& g, const std::vector<int>& h_vertices);

/// Poincare series of the obstacle configuration space: the series of the
/// constraint graph divided, exactly, by the series of K_r. A nonzero
/// remainder or a negative quotient coefficient raises InternalError.
/// Disconnected constraint graphs are factored; only the component
/// containing the obstacle clique is divided.
PoincareSeries obstacle_poincare(const ObstacleSpec& spec, int euclidean_dim);

/// The numerator series of the constraint graph itself (diagnostic).
PoincareSeries gamma_poincare(const ObstacleSpec& spec, int euclidean_dim);

} // namespace chromaconf

#endif
