#include "chromaconf/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromaconf/errors.hpp"

namespace chromaconf {

SimplicialComplex SimplicialComplex::from_chains(std::vector<std::vector<int>> faces) {
    SimplicialComplex c;
    for (auto& face : faces) {
        if (face.empty()) throw InvalidArgument("faces must be nonempty vertex lists");
        if (!std::is_sorted(face.begin(), face.end()) ||
            std::adjacent_find(face.begin(), face.end()) != face.end())
            throw InvalidArgument("face vertex lists must be strictly sorted");
        size_t dim = face.size() - 1;
        if (c.faces_.size() <= dim) c.faces_.resize(dim + 1);
        c.faces_[dim].push_back(std::move(face));
    }
    for (auto& level : c.faces_) {
        std::sort(level.begin(), level.end());
        if (std::adjacent_find(level.begin(), level.end()) != level.end())
            throw InvalidArgument("duplicate face");
        if (level.empty())
            throw InvalidArgument("face dimensions must be contiguous (missing subsets)");
    }
    // subset closure: every facet of every face must be present
    for (int d = 1; d <= c.dimension(); ++d) {
        const auto& below = c.faces_[static_cast<size_t>(d - 1)];
        for (const auto& face : c.faces_[static_cast<size_t>(d)]) {
            std::vector<int> sub(face.begin() + 1, face.end());
            for (size_t drop = 0; drop < face.size(); ++drop) {
                if (!std::binary_search(below.begin(), below.end(), sub))
                    throw InvalidArgument("face set is not closed under subsets");
                if (drop + 1 < face.size()) sub[drop] = face[drop];
            }
        }
    }
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> closed;
    for (const auto& facet : facets) {
        std::vector<int> sorted = facet;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        size_t n = sorted.size();
        if (n == 0) throw InvalidArgument("facets must be nonempty");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1u) sub.push_back(sorted[i]);
            closed.insert(std::move(sub));
        }
    }
    return from_chains({closed.begin(), closed.end()});
}

long long SimplicialComplex::face_count() const {
    long long total = 0;
    for (const auto& level : faces_) total += static_cast<long long>(level.size());
    return total;
}

long long SimplicialComplex::face_count(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return static_cast<long long>(faces_[static_cast<size_t>(dim)].size());
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int dim) const {
    static const std::vector<std::vector<int>> none;
    if (dim < 0 || dim > dimension()) return none;
    return faces_[static_cast<size_t>(dim)];
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= dimension(); ++d) {
        const auto& above = faces(d + 1);
        for (const auto& face : faces(d)) {
            bool maximal = true;
            for (const auto& bigger : above) {
                if (std::includes(bigger.begin(), bigger.end(), face.begin(), face.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(face);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex order_complex(const Poset& poset, const Guards& guards) {
    const int n = poset.size();
    std::vector<std::vector<int>> chains;
    long long budget = guards.complex_max_faces;
    std::vector<int> chain;

    // Element indices form a linear extension, so enumerating strictly
    // increasing index sequences along the order yields every chain once.
    auto extend = [&](auto&& self, int last) -> void {
        chains.push_back(chain);
        if (static_cast<long long>(chains.size()) > budget)
            throw GuardExceeded("order complex exceeds the face budget of " +
                                std::to_string(guards.complex_max_faces));
        for (int next = last + 1; next < n; ++next) {
            if (last >= 0 && !poset.less[static_cast<size_t>(last)][static_cast<size_t>(next)]) continue;
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (int start = 0; start < n; ++start) {
        chain.push_back(start);
        extend(extend, start);
        chain.pop_back();
    }
    return SimplicialComplex::from_chains(std::move(chains));
}

namespace {

// One sparse matrix row: (column, value) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, Int>>;

Int row_gcd(const SparseRow& row) {
    Int g = 0;
    for (const auto& [col, val] : row) {
        g = boost::multiprecision::gcd(g, val);
        if (g == 1) break;
    }
    return g;
}

void normalize_row(SparseRow& row) {
    Int g = row_gcd(row);
    if (g > 1)
        for (auto& [col, val] : row) val /= g;
}

// target := (pivot_val/g) * target - (target_val/g) * pivot_row, which
// zeroes the pivot column of target while keeping everything integral.
SparseRow combine_rows(const SparseRow& target, const Int& target_val,
                       const SparseRow& pivot_row, const Int& pivot_val) {
    Int g = boost::multiprecision::gcd(pivot_val, target_val);
    Int ct = pivot_val / g;
    Int cp = target_val / g;
    SparseRow out;
    out.reserve(target.size() + pivot_row.size());
    auto a = target.begin();
    auto b = pivot_row.begin();
    while (a != target.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
            out.push_back({a->first, ct * a->second});
            ++a;
        } else if (a == target.end() || b->first < a->first) {
            out.push_back({b->first, -cp * b->second});
            ++b;
        } else {
            Int v = ct * a->second - cp * b->second;
            if (v != 0) out.push_back({a->first, std::move(v)});
            ++a;
            ++b;
        }
    }
    normalize_row(out);
    return out;
}

// Exact rank over the rationals of an integer matrix, by sparse
// fraction-free elimination. Row scaling by nonzero integers and row
// combinations preserve the row space dimension, so the result is the
// rational rank computed without ever leaving the integers.
long long sparse_integer_rank(std::vector<SparseRow> rows) {
    std::vector<char> active(rows.size(), 1);
    // Lazily maintained column -> candidate row ids (may contain stale
    // entries; verified on use).
    std::unordered_map<int, std::vector<int>> col_rows;
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, val] : rows[r]) col_rows[col].push_back(static_cast<int>(r));

    auto value_at = [&](const SparseRow& row, int col) -> const Int* {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& entry, int c) { return entry.first < c; });
        if (it == row.end() || it->first != col) return nullptr;
        return &it->second;
    };

    long long rank = 0;
    while (true) {
        // Pivot row: fewest entries; pivot entry within it: smallest
        // magnitude, then smallest column.
        int pivot_row_id = -1;
        size_t best_nnz = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            if (pivot_row_id < 0 || rows[r].size() < best_nnz) {
                pivot_row_id = static_cast<int>(r);
                best_nnz = rows[r].size();
            }
        }
        if (pivot_row_id < 0) break;

        const SparseRow& prow = rows[static_cast<size_t>(pivot_row_id)];
        int pivot_col = prow.front().first;
        const Int* pivot_val = &prow.front().second;
        for (const auto& [col, val] : prow) {
            Int a = abs(val);
            Int pa = abs(*pivot_val);
            if (a < pa || (a == pa && col < pivot_col)) {
                pivot_col = col;
                pivot_val = &val;
            }
        }

        ++rank;
        active[static_cast<size_t>(pivot_row_id)] = 0;

        auto& candidates = col_rows[pivot_col];
        std::vector<int> touched;
        for (int r : candidates) {
            if (!active[static_cast<size_t>(r)]) continue;
            const Int* v = value_at(rows[static_cast<size_t>(r)], pivot_col);
            if (v == nullptr) continue;
            rows[static_cast<size_t>(r)] =
                combine_rows(rows[static_cast<size_t>(r)], *v, prow, *pivot_val);
            touched.push_back(r);
        }
        candidates.clear();
        for (int r : touched)
            for (const auto& [col, val] : rows[static_cast<size_t>(r)])
                if (col != pivot_col) col_rows[col].push_back(r);
        for (int r : touched) {
            if (rows[static_cast<size_t>(r)].empty()) active[static_cast<size_t>(r)] = 0;
        }
    }
    return rank;
}

// Boundary matrix of dimension d: one row per d-face, signed incidence
// with the (d-1)-faces.
std::vector<SparseRow> boundary_rows(const SimplicialComplex& complex, int d) {
    const auto& faces = complex.faces(d);
    const auto& below = complex.faces(d - 1);
    auto col_of = [&](const std::vector<int>& face) {
        auto it = std::lower_bound(below.begin(), below.end(), face);
        assert(it != below.end() && *it == face);
        return static_cast<int>(it - below.begin());
    };
    std::vector<SparseRow> rows;
    rows.reserve(faces.size());
    for (const auto& face : faces) {
        SparseRow row;
        row.reserve(face.size());
        std::vector<int> sub(face.begin() + 1, face.end());
        int sign = 1;
        for (size_t drop = 0; drop < face.size(); ++drop) {
            row.push_back({col_of(sub), Int(sign)});
            if (drop + 1 < face.size()) sub[drop] = face[drop];
            sign = -sign;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

long long BettiVector::at(int i) const {
    if (i < -1) throw InvalidArgument("reduced Betti numbers start at dimension -1");
    size_t idx = static_cast<size_t>(i + 1);
    return idx < values_.size() ? values_[idx] : 0;
}

int BettiVector::top_nonzero() const {
    for (int i = static_cast<int>(values_.size()) - 1; i >= 0; --i)
        if (values_[static_cast<size_t>(i)] != 0) return i - 1;
    return -2;
}

BettiVector reduced_betti_numbers(const SimplicialComplex& complex) {
    if (complex.empty()) return BettiVector({1}); // only the (-1)-dimensional class

    const int dim = complex.dimension();
    std::vector<long long> rank(static_cast<size_t>(dim) + 2, 0);
    rank[0] = 1; // the augmentation C_0 -> Z is onto for a nonempty complex
    for (int d = 1; d <= dim; ++d)
        rank[static_cast<size_t>(d)] = sparse_integer_rank(boundary_rows(complex, d));

    std::vector<long long> betti(static_cast<size_t>(dim) + 2, 0);
    betti[0] = 0; // beta~_{-1}
    for (int d = 0; d <= dim; ++d)
        betti[static_cast<size_t>(d) + 1] =
            complex.face_count(d) - rank[static_cast<size_t>(d)] - rank[static_cast<size_t>(d) + 1];
    return BettiVector(std::move(betti));
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
    long long chi = -1;
    for (int d = 0; d <= complex.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * complex.face_count(d);
    return chi;
}

HallReport verify_hall(const BondLattice& lattice, const Guards& guards) {
    HallReport report;
    for (int x = 1; x < lattice.size(); ++x) {
        Int mu = lattice.mobius(lattice.bottom(), x);
        long long chi = reduced_euler_characteristic(order_complex(lattice.lower_interval(x), guards));
        ++report.checked;
        if (mu != chi)
            report.violations.push_back({x, lattice.element(x).to_string(), mu, chi});
    }
    return report;
}

} // namespace chromaconf
