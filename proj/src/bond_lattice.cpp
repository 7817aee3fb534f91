#include "chromaconf/bond_lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chromaconf/errors.hpp"

namespace chromaconf {

namespace {

void canonicalize_blocks(std::vector<std::vector<int>>& blocks) {
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
}

} // namespace

BondPartition::BondPartition(int vertex_count, std::vector<std::vector<int>> blocks)
    : m_(vertex_count), blocks_(std::move(blocks)) {
    if (m_ < 1) throw InvalidArgument("partition needs at least one vertex");
    canonicalize_blocks(blocks_);
    std::vector<int> seen(static_cast<size_t>(m_) + 1, 0);
    int covered = 0;
    for (const auto& block : blocks_) {
        if (block.empty()) throw InvalidArgument("partition blocks must be nonempty");
        for (int v : block) {
            if (v < 1 || v > m_)
                throw InvalidArgument("partition member " + std::to_string(v) + " outside 1.." + std::to_string(m_));
            if (seen[static_cast<size_t>(v)]++ != 0)
                throw InvalidArgument("vertex " + std::to_string(v) + " appears in two blocks");
            ++covered;
        }
    }
    if (covered != m_) throw InvalidArgument("blocks do not cover every vertex");
}

int BondPartition::block_of(int v) const {
    if (v < 1 || v > m_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    for (size_t b = 0; b < blocks_.size(); ++b)
        if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), v)) return static_cast<int>(b);
    throw InternalError("partition misses a vertex it was validated to cover");
}

bool BondPartition::refines(const BondPartition& other) const {
    if (m_ != other.m_) return false;
    std::vector<int> owner(static_cast<size_t>(m_) + 1, -1);
    for (size_t b = 0; b < other.blocks_.size(); ++b)
        for (int v : other.blocks_[b]) owner[static_cast<size_t>(v)] = static_cast<int>(b);
    for (const auto& block : blocks_) {
        int target = owner[static_cast<size_t>(block.front())];
        for (int v : block)
            if (owner[static_cast<size_t>(v)] != target) return false;
    }
    return true;
}

std::string BondPartition::to_string() const {
    std::ostringstream out;
    bool compact = m_ <= 9;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) out << "|";
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i > 0 && !compact) out << ",";
            out << blocks_[b][i];
        }
    }
    return out.str();
}

BondLattice BondLattice::build(const Graph& g, const Guards& guards) {
    const int m = g.vertex_count();
    if (m > guards.lattice_max_vertices)
        throw GuardExceeded("bond-lattice construction allows m <= " +
                            std::to_string(guards.lattice_max_vertices));
    if (!g.is_connected())
        throw InvalidArgument("bond lattice needs a connected graph (no single top block otherwise)");

    BondLattice lattice(g);

    std::vector<std::vector<int>> singletons;
    for (int v = 1; v <= m; ++v) singletons.push_back({v});
    BondPartition bottom(m, std::move(singletons));

    // Breadth-first over the covering relation: merge any two blocks joined
    // by an edge. Only connected partitions are ever produced.
    std::vector<BondPartition> frontier{bottom};
    lattice.index_.emplace(bottom.to_string(), 0);
    lattice.elements_.push_back(std::move(bottom));
    lattice.rank_offsets_.push_back(0);

    while (!frontier.empty()) {
        // Deterministic order within the rank level.
        std::sort(frontier.begin(), frontier.end(), [](const BondPartition& a, const BondPartition& b) {
            return a.to_string() < b.to_string();
        });
        std::vector<BondPartition> next;
        std::set<std::string> next_keys;
        for (const auto& part : frontier) {
            const auto& blocks = part.blocks();
            for (size_t p = 0; p < blocks.size(); ++p) {
                for (size_t q = p + 1; q < blocks.size(); ++q) {
                    bool adjacent = false;
                    for (int v : blocks[p]) {
                        for (int w : g.neighbors(v))
                            if (std::binary_search(blocks[q].begin(), blocks[q].end(), w)) {
                                adjacent = true;
                                break;
                            }
                        if (adjacent) break;
                    }
                    if (!adjacent) continue;
                    std::vector<std::vector<int>> merged;
                    merged.reserve(blocks.size() - 1);
                    std::vector<int> unioned = blocks[p];
                    unioned.insert(unioned.end(), blocks[q].begin(), blocks[q].end());
                    merged.push_back(std::move(unioned));
                    for (size_t r = 0; r < blocks.size(); ++r)
                        if (r != p && r != q) merged.push_back(blocks[r]);
                    BondPartition candidate(part.vertex_count(), std::move(merged));
                    std::string key = candidate.to_string();
                    if (next_keys.insert(key).second) next.push_back(std::move(candidate));
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const BondPartition& a, const BondPartition& b) {
            return a.to_string() < b.to_string();
        });
        if (!next.empty()) lattice.rank_offsets_.push_back(static_cast<int>(lattice.elements_.size()));
        for (const auto& part : next) {
            lattice.index_.emplace(part.to_string(), static_cast<int>(lattice.elements_.size()));
            lattice.elements_.push_back(part);
        }
        frontier = std::move(next);
    }
    return lattice;
}

int BondLattice::index_of(const BondPartition& p) const {
    auto it = index_.find(p.to_string());
    if (it == index_.end()) return -1;
    // Equal canonical strings can only collide across different vertex counts.
    return elements_[static_cast<size_t>(it->second)] == p ? it->second : -1;
}

bool BondLattice::leq(int x, int y) const {
    if (x < 0 || y < 0 || x >= size() || y >= size())
        throw InvalidArgument("lattice element index out of range");
    if (x == y) return true;
    if (elements_[static_cast<size_t>(x)].rank() >= elements_[static_cast<size_t>(y)].rank()) return false;
    return elements_[static_cast<size_t>(x)].refines(elements_[static_cast<size_t>(y)]);
}

bool BondLattice::covers(int y, int x) const {
    if (x < 0 || y < 0 || x >= size() || y >= size())
        throw InvalidArgument("lattice element index out of range");
    return elements_[static_cast<size_t>(y)].rank() == elements_[static_cast<size_t>(x)].rank() + 1 &&
           leq(x, y);
}

std::vector<std::pair<int, int>> BondLattice::cover_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < size(); ++x) {
        const auto& part = elements_[static_cast<size_t>(x)];
        const auto& blocks = part.blocks();
        std::set<int> uppers;
        for (size_t p = 0; p < blocks.size(); ++p) {
            for (size_t q = p + 1; q < blocks.size(); ++q) {
                std::vector<std::vector<int>> merged;
                std::vector<int> unioned = blocks[p];
                unioned.insert(unioned.end(), blocks[q].begin(), blocks[q].end());
                merged.push_back(std::move(unioned));
                for (size_t r = 0; r < blocks.size(); ++r)
                    if (r != p && r != q) merged.push_back(blocks[r]);
                BondPartition candidate(part.vertex_count(), std::move(merged));
                int idx = index_of(candidate);
                if (idx >= 0) uppers.insert(idx);
            }
        }
        for (int y : uppers) pairs.push_back({x, y});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<long long> BondLattice::counts_by_length() const {
    std::vector<long long> counts(static_cast<size_t>(graph_.vertex_count()) + 1, 0);
    for (const auto& part : elements_) ++counts[static_cast<size_t>(part.length())];
    return counts;
}

Int BondLattice::mobius(int x, int y) const {
    if (!leq(x, y))
        throw InvalidArgument("mobius is defined only on comparable pairs x <= y");
    {
        std::lock_guard<std::mutex> lock(mobius_memo_->mutex);
        if (auto it = mobius_memo_->values.find({x, y}); it != mobius_memo_->values.end())
            return it->second;
    }

    // One pass over the closed interval [x, y] in index order (a linear
    // extension): mu(x,x) = 1 and mu(x,z) = -sum_{x <= w < z} mu(x,w).
    std::vector<int> interval;
    for (int z = x; z <= y; ++z)
        if (leq(x, z) && leq(z, y)) interval.push_back(z);
    std::vector<Int> mu(interval.size());
    for (size_t zi = 0; zi < interval.size(); ++zi) {
        if (interval[zi] == x) {
            mu[zi] = 1;
            continue;
        }
        Int acc = 0;
        for (size_t wi = 0; wi < zi; ++wi)
            if (leq(interval[wi], interval[zi])) acc += mu[wi];
        mu[zi] = -acc;
    }
    Int result = mu.back();
    {
        std::lock_guard<std::mutex> lock(mobius_memo_->mutex);
        for (size_t zi = 0; zi < interval.size(); ++zi)
            mobius_memo_->values.emplace(std::pair<int, int>{x, interval[zi]}, mu[zi]);
    }
    return result;
}

IntPolynomial BondLattice::rota_characteristic_polynomial() const {
    mobius(bottom(), top()); // warms the cache for the whole lattice
    std::vector<Int> coeffs(static_cast<size_t>(graph_.vertex_count()) + 1, 0);
    for (int x = 0; x < size(); ++x)
        coeffs[static_cast<size_t>(elements_[static_cast<size_t>(x)].length())] += mobius(bottom(), x);
    return IntPolynomial(std::move(coeffs));
}

Poset BondLattice::lower_interval(int x) const {
    if (x < 0 || x >= size()) throw InvalidArgument("lattice element index out of range");
    if (x == bottom()) throw InvalidArgument("the open interval below the bottom element is not defined");
    std::vector<int> members;
    for (int z = 1; z < x; ++z)
        if (leq(z, x)) members.push_back(z);

    Poset poset;
    poset.labels.reserve(members.size());
    for (int z : members) poset.labels.push_back(elements_[static_cast<size_t>(z)].to_string());
    poset.less.assign(members.size(), std::vector<bool>(members.size(), false));
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            if (leq(members[a], members[b])) poset.less[a][b] = true;
    return poset;
}

std::vector<std::pair<std::vector<int>, Graph>>
BondLattice::interval_product_decomposition(int x) const {
    if (x < 0 || x >= size()) throw InvalidArgument("lattice element index out of range");
    std::vector<std::pair<std::vector<int>, Graph>> factors;
    for (const auto& block : elements_[static_cast<size_t>(x)].blocks())
        factors.push_back({block, induced_subgraph(graph_, block).graph});
    return factors;
}

} // namespace chromaconf
