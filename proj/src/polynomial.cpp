#include "chromaconf/polynomial.hpp"

#include <sstream>

#include "chromaconf/errors.hpp"

namespace chromaconf {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(int degree, Int coefficient) {
    if (degree < 0) throw InvalidArgument("monomial degree must be nonnegative");
    std::vector<Int> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(Int c) {
    return IntPolynomial({std::move(c), 1});
}

Int IntPolynomial::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(degree)];
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

IntPolynomial IntPolynomial::stretch(int stride) const {
    if (stride < 1) throw InvalidArgument("stretch stride must be >= 1");
    if (is_zero()) return IntPolynomial();
    std::vector<Int> out(static_cast<size_t>(degree()) * stride + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * stride] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& rhs) const {
    if (rhs.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (degree() < rhs.degree()) return std::nullopt;

    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - rhs.coeffs_.size() + 1, 0);
    const Int& lead = rhs.coeffs_.back();
    for (int d = static_cast<int>(rem.size()) - 1; d >= rhs.degree(); --d) {
        Int& top = rem[static_cast<size_t>(d)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quot[static_cast<size_t>(d - rhs.degree())] = q;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            rem[static_cast<size_t>(d) - rhs.coeffs_.size() + 1 + j] -= q * rhs.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& variable, bool ascending) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](int d) {
        const Int& c = coeffs_[static_cast<size_t>(d)];
        if (c == 0) return;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << variable;
            if (d != 1) out << "^" << d;
        }
    };
    if (ascending)
        for (int d = 0; d <= degree(); ++d) emit(d);
    else
        for (int d = degree(); d >= 0; --d) emit(d);
    return out.str();
}

IntPolynomial falling_factorial(int m) {
    if (m < 0) throw InvalidArgument("falling factorial needs m >= 0");
    IntPolynomial result = IntPolynomial::constant(1);
    for (int j = 0; j < m; ++j) result = result * IntPolynomial::linear(-j);
    return result;
}

} // namespace chromaconf
