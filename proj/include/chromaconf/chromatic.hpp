#ifndef CHROMACONF_CHROMATIC_HPP
#define CHROMACONF_CHROMATIC_HPP

#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"
#include "chromaconf/polynomial.hpp"

namespace chromaconf {

/// Exact chromatic polynomial, by deletion-contraction with memoization on
/// a degree-refined canonical edge encoding. Multiplicative over disjoint
/// unions; edgeless graphs give lambda^m, complete graphs the falling
/// factorial.
IntPolynomial chromatic_polynomial(const Graph& g);

/// Exhaustive count of proper colorings with colors 1..lambda. Agrees with
/// chromatic_polynomial(g) evaluated at lambda; exists as an independent
/// check of it. Throws GuardExceeded beyond guards.oracle_max_vertices /
/// oracle_max_lambda.
Int count_proper_colorings(const Graph& g, long long lambda,
                           const Guards& guards = Guards::defaults());

/// The unsigned coefficients a_1..a_m with
/// chi(lambda) = sum_i (-1)^(m-i) a_i lambda^i.
/// For connected graphs a_m = 1 and a_{m-1} = |E|.
class WhitneyCoefficients {
public:
    WhitneyCoefficients(int vertex_count, std::vector<Int> a);
    int vertex_count() const { return m_; }
    /// a_i for 1 <= i <= m.
    const Int& a(int i) const;
    const std::vector<Int>& values() const { return a_; } // a_1 first
private:
    int m_;
    std::vector<Int> a_;
};

/// Requires g connected. Raises InternalError if any extracted coefficient
/// has the wrong sign (the alternating form is a theorem; a violation is a
/// bug, not an input problem).
WhitneyCoefficients whitney_coefficients(const Graph& g);

/// Exhaustive count over all 2^|E| orientations of the acyclic ones whose
/// unique source is v0. Equals a_1(g) for every choice of v0 in a
/// connected graph. Guarded by guards.orientation_max_edges.
Int count_acyclic_orientations_unique_source(const Graph& g, int v0,
                                             const Guards& guards = Guards::defaults());

} // namespace chromaconf

#endif
