#include "chromaconf/poincare.hpp"

#include <algorithm>

#include "chromaconf/bond_lattice.hpp"
#include "chromaconf/errors.hpp"
#include "chromaconf/simplicial.hpp"

namespace chromaconf {

PoincareSeries::PoincareSeries(IntPolynomial base, int euclidean_dim)
    : base_(std::move(base)), dim_(euclidean_dim) {
    if (dim_ < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    if (base_.coefficient(0) != 1)
        throw InternalError("a configuration-space series must have constant term 1");
    for (const auto& c : base_.coefficients())
        if (c < 0) throw InternalError("a configuration-space series cannot have negative ranks");
}

Int PoincareSeries::betti(long long t_degree) const {
    if (t_degree < 0 || t_degree % (dim_ - 1) != 0) return 0;
    long long idx = t_degree / (dim_ - 1);
    if (idx > base_.degree()) return 0;
    return base_.coefficient(static_cast<int>(idx));
}

std::vector<long long> PoincareSeries::t_degrees() const {
    std::vector<long long> out;
    for (int j = 0; j <= base_.degree(); ++j)
        out.push_back(static_cast<long long>(j) * (dim_ - 1));
    return out;
}

IntPolynomial PoincareSeries::expand() const {
    return base_.stretch(dim_ - 1);
}

Int PoincareSeries::evaluate_t(const Int& t) const {
    Int x = 1;
    for (int i = 0; i < dim_ - 1; ++i) x *= t;
    return base_.evaluate(x);
}

Int PoincareSeries::total_rank() const {
    return base_.evaluate(1);
}

std::string PoincareSeries::pretty(bool symbolic) const {
    if (!symbolic) return expand().to_string("t", /*ascending=*/true);
    std::string out;
    for (int j = 0; j <= base_.degree(); ++j) {
        const Int c = base_.coefficient(j);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (j == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str();
        out += "t^{";
        if (j > 1) out += std::to_string(j) + "(N-1)";
        else out += "N-1";
        out += "}";
    }
    return out.empty() ? "0" : out;
}

namespace {

IntPolynomial whitney_base(const Graph& g) {
    // Coefficient of x^(m-i) is a_i; equivalently the reciprocal
    // substitution of the chromatic polynomial without Laurent arithmetic.
    WhitneyCoefficients w = whitney_coefficients(g);
    const int m = g.vertex_count();
    std::vector<Int> coeffs(static_cast<size_t>(m), 0);
    for (int i = 1; i <= m; ++i) coeffs[static_cast<size_t>(m - i)] = w.a(i);
    return IntPolynomial(std::move(coeffs));
}

template <typename PerComponent>
IntPolynomial product_over_components(const Graph& g, PerComponent per_component) {
    IntPolynomial base = IntPolynomial::constant(1);
    for (const auto& component : component_subgraphs(g)) base = base * per_component(component);
    return base;
}

} // namespace

PoincareSeries poincare_from_chromatic(const Graph& g, int euclidean_dim) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    return PoincareSeries(product_over_components(g, whitney_base), euclidean_dim);
}

PoincareSeries poincare_from_nbc(const Graph& g, const EdgeOrdering& ord, int euclidean_dim,
                                 const Guards& guards) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    if (!(ord.graph() == g))
        throw InvalidArgument("edge ordering refers to a different graph");
    std::vector<Int> coeffs(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& forest : all_nbc_forests(g, ord, guards))
        ++coeffs[static_cast<size_t>(forest.size())];
    return PoincareSeries(IntPolynomial(std::move(coeffs)), euclidean_dim);
}

namespace {

IntPolynomial gm_base_connected(const Graph& g, const Guards& guards) {
    // Each lattice element of length k contributes the homology rank of
    // its lower-interval order complex, read in dimension m-k-2, to the
    // coefficient of x^(m-k); the bottom contributes the constant 1.
    const int m = g.vertex_count();
    BondLattice lattice = BondLattice::build(g, guards);
    std::vector<Int> coeffs(static_cast<size_t>(m), 0);
    coeffs[0] = 1;
    for (int x = 1; x < lattice.size(); ++x) {
        const int k = lattice.element(x).length();
        BettiVector betti = reduced_betti_numbers(order_complex(lattice.lower_interval(x), guards));
        coeffs[static_cast<size_t>(m - k)] += betti.at(m - k - 2);
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace

PoincareSeries poincare_from_gm(const Graph& g, int euclidean_dim, const Guards& guards) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    for (const auto& component : g.connected_components())
        if (static_cast<int>(component.size()) > guards.gm_max_vertices)
            throw GuardExceeded("interval-homology route allows components with m <= " +
                                std::to_string(guards.gm_max_vertices));
    return PoincareSeries(product_over_components(
                              g, [&](const Graph& c) { return gm_base_connected(c, guards); }),
                          euclidean_dim);
}

IntPolynomial poincare_reciprocity(const Graph& g, int euclidean_dim) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    const int m = g.vertex_count();
    const int spread = euclidean_dim - 1;
    IntPolynomial chi = chromatic_polynomial(g);
    // (-1)^m t^(m(N-1)) chi(-t^(1-N)): the j-th chromatic coefficient
    // lands on t^((m-j)(N-1)) with sign (-1)^(m+j); exponents stay
    // nonnegative because j <= m.
    std::vector<Int> coeffs(static_cast<size_t>(m) * spread + 1, 0);
    for (int j = 0; j <= chi.degree(); ++j) {
        Int c = chi.coefficient(j);
        if ((m + j) % 2 == 1) c = -c;
        coeffs[static_cast<size_t>(m - j) * spread] += c;
    }
    return IntPolynomial(std::move(coeffs));
}

Int betti_number(const Graph& g, int euclidean_dim, long long t_degree) {
    return poincare_from_chromatic(g, euclidean_dim).betti(t_degree);
}

Int euler_characteristic(const Graph& g, int euclidean_dim) {
    PoincareSeries series = poincare_from_chromatic(g, euclidean_dim);
    Int value = series.evaluate_t(-1);

    Int color_arg = euclidean_dim % 2 == 0 ? 1 : -1;
    Int expected = chromatic_polynomial(g).evaluate(color_arg);
    if ((static_cast<long long>(euclidean_dim) * g.vertex_count()) % 2 == 1) expected = -expected;
    if (value != expected)
        throw InternalError("Euler characteristic mismatch between the series and the coloring count");
    return value;
}

std::vector<Forest> nbc_basis(const Graph& g, const EdgeOrdering& ord, int euclidean_dim,
                              long long t_degree, const Guards& guards) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    if (t_degree < 0 || t_degree % (euclidean_dim - 1) != 0) return {};
    long long edges = t_degree / (euclidean_dim - 1);
    long long k = g.vertex_count() - edges;
    if (k < 1 || k > g.vertex_count()) return {};
    return nbc_forests(g, ord, static_cast<int>(k), guards);
}

std::vector<WedgeSummand> stable_splitting_summary(const Graph& g, int euclidean_dim) {
    if (euclidean_dim < 2) throw InvalidArgument("Euclidean dimension N must be >= 2");
    WhitneyCoefficients w = whitney_coefficients(g);
    const int m = g.vertex_count();
    std::vector<WedgeSummand> out;
    for (int i = 1; i <= m; ++i)
        out.push_back({static_cast<long long>(m - i) * (euclidean_dim - 1), w.a(i)});
    return out;
}

} // namespace chromaconf
