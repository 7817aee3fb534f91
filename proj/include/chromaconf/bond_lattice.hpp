#ifndef CHROMACONF_BOND_LATTICE_HPP
#define CHROMACONF_BOND_LATTICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"
#include "chromaconf/polynomial.hpp"

namespace chromaconf {

/// A partition of 1..m whose every block induces a connected subgraph.
/// Canonical block order: smaller blocks first, ties by smallest member;
/// members sorted within each block.
class BondPartition {
public:
    BondPartition(int vertex_count, std::vector<std::vector<int>> blocks);

    int vertex_count() const { return m_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Number of blocks.
    int length() const { return static_cast<int>(blocks_.size()); }
    /// Height above the all-singletons partition: m - length().
    int rank() const { return m_ - length(); }
    /// Dimension of the corresponding subspace: length() * N.
    long long dimension(int euclidean_dim) const {
        return static_cast<long long>(length()) * euclidean_dim;
    }

    /// Block index (0-based) containing vertex v.
    int block_of(int v) const;

    /// True iff every block of *this is contained in some block of other
    /// (i.e. *this refines other; the lattice order).
    bool refines(const BondPartition& other) const;

    /// "1|23|45" for m <= 9, "1|2,3|4,5" otherwise.
    std::string to_string() const;

    bool operator==(const BondPartition& rhs) const {
        return m_ == rhs.m_ && blocks_ == rhs.blocks_;
    }

private:
    int m_;
    std::vector<std::vector<int>> blocks_;
};

/// A finite poset presented by a strict-order matrix. Element indices are
/// required to be a linear extension (i < j whenever element i is below
/// element j).
struct Poset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less; // less[i][j]: element i strictly below j

    int size() const { return static_cast<int>(less.size()); }
};

/// The lattice of connected partitions of a connected graph, ordered by
/// coarsening, with bottom the all-singletons partition and top the
/// single-block partition.
class BondLattice {
public:
    /// Enumerates by repeatedly merging pairs of adjacent blocks starting
    /// from the bottom. Requires g connected; guarded by
    /// guards.lattice_max_vertices.
    static BondLattice build(const Graph& g, const Guards& guards = Guards::defaults());

    const Graph& graph() const { return graph_; }
    int size() const { return static_cast<int>(elements_.size()); }
    /// Elements sorted by (rank, canonical string); index 0 is the bottom.
    const BondPartition& element(int index) const { return elements_[index]; }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    /// Index of a partition, or -1 if not an element.
    int index_of(const BondPartition& p) const;

    bool leq(int x, int y) const;
    /// y covers x (leq and rank difference one; the lattice is graded).
    bool covers(int y, int x) const;
    /// All covering pairs (lower, upper), lexicographic.
    std::vector<std::pair<int, int>> cover_pairs() const;
    /// Element count per length k = 1..m.
    std::vector<long long> counts_by_length() const;

    /// Moebius value mu(x, y); requires x <= y. Memoized.
    Int mobius(int x, int y) const;

    /// sum_x mu(bottom, x) lambda^{length(x)}; equals the chromatic
    /// polynomial of the underlying graph.
    IntPolynomial rota_characteristic_polynomial() const;

    /// The open interval (bottom, x) as a poset (empty for atoms).
    /// Requires x strictly above the bottom.
    Poset lower_interval(int x) const;

    /// For x = B_1|...|B_k, the blocks with their induced subgraphs; the
    /// closed interval [bottom, x] is the product of their bond lattices.
    std::vector<std::pair<std::vector<int>, Graph>>
    interval_product_decomposition(int x) const;

private:
    explicit BondLattice(Graph g)
        : graph_(std::move(g)), mobius_memo_(std::make_unique<MobiusMemo>()) {}

    Graph graph_;
    std::vector<BondPartition> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> rank_offsets_; // first element index of each rank

    // Shared across const queries; inserts are idempotent.
    struct MobiusMemo {
        std::mutex mutex;
        std::map<std::pair<int, int>, Int> values;
    };
    std::unique_ptr<MobiusMemo> mobius_memo_;
};

} // namespace chromaconf

#endif
