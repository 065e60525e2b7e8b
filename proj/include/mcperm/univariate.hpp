#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcperm/rational.hpp"

namespace mcperm {

// Dense univariate polynomial, constant coefficient first. The zero
// polynomial is the empty sequence; otherwise the leading coefficient is
// nonzero.
class UnivariatePolynomial {
  public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    static UnivariatePolynomial zero() { return {}; }
    static UnivariatePolynomial constant(Rational c) {
        return UnivariatePolynomial({std::move(c)});
    }
    // c0 + c1*t + ...
    static UnivariatePolynomial from_coeffs(std::initializer_list<Rational> cs) {
        return UnivariatePolynomial(std::vector<Rational>(cs));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UnivariatePolynomial operator-() const;
    friend UnivariatePolynomial operator+(const UnivariatePolynomial&, const UnivariatePolynomial&);
    friend UnivariatePolynomial operator-(const UnivariatePolynomial&, const UnivariatePolynomial&);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial&, const UnivariatePolynomial&);
    UnivariatePolynomial operator*(const Rational& s) const;
    bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }

    UnivariatePolynomial derivative() const;
    Rational operator()(const Rational& x) const;

    // Euclidean division; divisor must be nonzero.
    std::pair<UnivariatePolynomial, UnivariatePolynomial> divrem(
        const UnivariatePolynomial& divisor) const;

    // Integer-coefficient representative with content 1 and positive
    // leading coefficient (zero stays zero).
    UnivariatePolynomial primitive() const;

    std::string str() const;  // in the variable "t"
    static UnivariatePolynomial parse(std::string_view text);

  private:
    void normalize();
    std::vector<Rational> c_;
};

// Monic-free gcd: primitive, positive leading coefficient; gcd(0,0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

}  // namespace mcperm
