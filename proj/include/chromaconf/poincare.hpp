#ifndef CHROMACONF_POINCARE_HPP
#define CHROMACONF_POINCARE_HPP

#include <string>
#include <vector>

#include "chromaconf/chromatic.hpp"
#include "chromaconf/forests.hpp"
#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"
#include "chromaconf/polynomial.hpp"

namespace chromaconf {

/// Poincare polynomial of a chromatic configuration space in R^N, stored
/// compactly in the variable x = t^(N-1). All coefficients are
/// nonnegative, the constant term is 1, and for a connected graph on m
/// vertices the degree in x is m-1.
class PoincareSeries {
public:
    PoincareSeries(IntPolynomial base, int euclidean_dim);

    const IntPolynomial& base() const { return base_; }
    int euclidean_dim() const { return dim_; }

    /// Betti number in t-degree i: zero unless (N-1) | i.
    Int betti(long long t_degree) const;
    /// The t-degrees carrying (possibly zero) coefficients: 0, N-1, ...
    std::vector<long long> t_degrees() const;
    /// Expand into a polynomial in t.
    IntPolynomial expand() const;
    /// Evaluate P_t at an integer t (used for Euler characteristics).
    Int evaluate_t(const Int& t) const;
    /// Sum of all Betti numbers.
    Int total_rank() const;

    /// "1 + 5t^{N-1} + 8t^{2(N-1)} + 4t^{3(N-1)}" (symbolic N), or the
    /// substituted "1 + 5t + 8t^2 + 4t^3" form.
    std::string pretty(bool symbolic) const;

    bool operator==(const PoincareSeries& rhs) const {
        return dim_ == rhs.dim_ && base_ == rhs.base_;
    }

private:
    IntPolynomial base_;
    int dim_;
};

/// Production route: coefficients are the Whitney coefficients, with
/// a_i attached to x^(m-i). Disconnected graphs multiply their component
/// series. Requires N >= 2.
PoincareSeries poincare_from_chromatic(const Graph& g, int euclidean_dim);

/// Forest route: sum of x^|F| over all NBC forests of g for the given
/// edge ordering. Equal to the chromatic route for every ordering.
PoincareSeries poincare_from_nbc(const Graph& g, const EdgeOrdering& ord,
                                 int euclidean_dim,
                                 const Guards& guards = Guards::defaults());

/// Lattice-homology route: each bond partition of length k contributes
/// the rank of the reduced homology of its lower-interval order complex
/// in dimension m-k-2 to the coefficient of x^(m-k); the bottom element
/// contributes the constant 1. The independent oracle for the other two
/// routes. Guarded by guards.gm_max_vertices per component.
PoincareSeries poincare_from_gm(const Graph& g, int euclidean_dim,
                                const Guards& guards = Guards::defaults());

/// The literal reciprocal-substitution form: (-1)^m t^(m(N-1))
/// chi(-t^(1-N)) expanded as a Laurent substitution and simplified into an
/// ordinary polynomial in t. Verification-only route; equals
/// poincare_from_chromatic(g, N).expand().
IntPolynomial poincare_reciprocity(const Graph& g, int euclidean_dim);

/// Coefficient of t^i in the Poincare polynomial.
Int betti_number(const Graph& g, int euclidean_dim, long long t_degree);

/// P_t evaluated at t = -1. Cross-checked internally against
/// (-1)^(N m) chi_g((-1)^N); a mismatch raises InternalError.
Int euler_characteristic(const Graph& g, int euclidean_dim);

/// Homology-basis labels in t-degree i: the NBC spanning forests with
/// m - i/(N-1) components. Empty (with no error) when (N-1) does not
/// divide i or the implied component count is out of range.
std::vector<Forest> nbc_basis(const Graph& g, const EdgeOrdering& ord,
                              int euclidean_dim, long long t_degree,
                              const Guards& guards = Guards::defaults());

/// One wedge summand per polynomial degree: spheres of dimension
/// (m-i)(N-1) with multiplicity a_i, listed from the top dimension down;
/// the final entry (0, 1) is the extra basepoint.
struct WedgeSummand {
    long long sphere_dimension;
    Int multiplicity;
    bool operator==(const WedgeSummand& rhs) const {
        return sphere_dimension == rhs.sphere_dimension && multiplicity == rhs.multiplicity;
    }
};
std::vector<WedgeSummand> stable_splitting_summary(const Graph& g, int euclidean_dim);

} // namespace chromaconf

#endif
