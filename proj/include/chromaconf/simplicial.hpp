#ifndef CHROMACONF_SIMPLICIAL_HPP
#define CHROMACONF_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "chromaconf/bond_lattice.hpp"
#include "chromaconf/guards.hpp"

namespace chromaconf {

/// Abstract simplicial complex, faces stored per dimension as sorted
/// vertex lists. Closed under taking subsets by construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from a set of faces that is already subset-closed (each face
    /// a strictly sorted vertex list); closure is verified.
    static SimplicialComplex from_chains(std::vector<std::vector<int>> faces);
    /// Build the closure of the given facets.
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);

    bool empty() const { return faces_.empty(); }
    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    long long face_count() const;
    long long face_count(int dim) const;
    const std::vector<std::vector<int>>& faces(int dim) const;
    /// Faces not contained in any larger face.
    std::vector<std::vector<int>> facets() const;

private:
    std::vector<std::vector<std::vector<int>>> faces_; // [dim][face]
};

/// Order complex: the faces are the chains of the poset. The empty poset
/// gives the empty complex. Throws GuardExceeded when the number of chains
/// would exceed guards.complex_max_faces.
SimplicialComplex order_complex(const Poset& poset,
                                const Guards& guards = Guards::defaults());

/// Ranks of reduced rational homology, indexed from dimension -1 upward:
/// values()[0] is beta~_{-1} (1 exactly for the empty complex), values()[i+1]
/// is beta~_i.
class BettiVector {
public:
    explicit BettiVector(std::vector<long long> values) : values_(std::move(values)) {}
    /// beta~_i for i >= -1; zero outside the stored range.
    long long at(int i) const;
    const std::vector<long long>& values() const { return values_; }
    /// Highest i with beta~_i != 0, or -2 if all vanish.
    int top_nonzero() const;
    bool operator==(const BettiVector& rhs) const { return values_ == rhs.values_; }

private:
    std::vector<long long> values_;
};

/// Reduced Betti numbers over the rationals, via exact integer ranks of
/// the boundary matrices of the augmented chain complex (fraction-free
/// sparse elimination; no floating point anywhere).
BettiVector reduced_betti_numbers(const SimplicialComplex& complex);

/// -1 + f_0 - f_1 + f_2 - ...; equals the alternating sum of the reduced
/// Betti numbers.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

/// Hall-identity sweep: mu(bottom, x) must equal the reduced Euler
/// characteristic of the order complex of (bottom, x) at every x above the
/// bottom.
struct HallReport {
    struct Violation {
        int element;
        std::string element_label;
        Int mobius_value;
        long long euler_value;
    };
    int checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};
HallReport verify_hall(const BondLattice& lattice,
                       const Guards& guards = Guards::defaults());

} // namespace chromaconf

#endif
