#ifndef CHROMACONF_POLYNOMIAL_HPP
#define CHROMACONF_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromaconf {

using Int = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact arbitrary-precision integer
/// coefficients. Always kept in canonical form: coefficients indexed by
/// degree, trailing zeros trimmed, the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(int degree, Int coefficient = 1);
    /// x + c, handy for building products of linear factors.
    static IntPolynomial linear(Int c);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int coefficient(int degree) const;

    Int evaluate(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Int& scalar) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    IntPolynomial pow(unsigned exponent) const;

    /// Substitute x^stride for x (spread coefficients out), e.g. for
    /// rewriting a series in x as a series in t with x = t^stride.
    IntPolynomial stretch(int stride) const;

    /// Exact polynomial division. Returns the quotient when rhs divides
    /// *this with zero remainder, std::nullopt otherwise. Division by the
    /// zero polynomial raises InvalidArgument.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& rhs) const;

    /// Render as e.g. "lambda^4 - 6lambda^3 + 11lambda^2 - 6lambda"
    /// (descending degree) or "1 + 4t^2 + 3t^6" (ascending degree).
    std::string to_string(const std::string& variable, bool ascending = false) const;

private:
    void trim();
    std::vector<Int> coeffs_; // coeffs_[d] is the coefficient of x^d
};

/// lambda * (lambda-1) * ... * (lambda-m+1)
IntPolynomial falling_factorial(int m);

} // namespace chromaconf

#endif
