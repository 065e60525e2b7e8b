#include "mcperm/univariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcperm/polynomial.hpp"

namespace mcperm {

void UnivariatePolynomial::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& UnivariatePolynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& s) const {
    if (sgn(s) == 0) return {};
    UnivariatePolynomial r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UnivariatePolynomial(std::move(d));
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divrem(
    const UnivariatePolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UnivariatePolynomial rem = *this;
    if (degree() < divisor.degree()) return {UnivariatePolynomial(), rem};
    std::vector<Rational> q(static_cast<size_t>(degree() - divisor.degree()) + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const size_t shift = static_cast<size_t>(rem.degree() - divisor.degree());
        Rational factor = rem.leading() / lead;
        q[shift] = factor;
        // rem -= factor * t^shift * divisor
        std::vector<Rational> rc = rem.c_;
        for (size_t i = 0; i < divisor.c_.size(); ++i) rc[i + shift] -= factor * divisor.c_[i];
        rem = UnivariatePolynomial(std::move(rc));
    }
    return {UnivariatePolynomial(std::move(q)), rem};
}

UnivariatePolynomial UnivariatePolynomial::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm(1);
    for (const auto& x : c_) {
        Integer d(x.get_den());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Rational> ints(c_.size());
    Integer num_gcd(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        ints[i] = c_[i] * Rational(den_lcm);
        ints[i].canonicalize();
        Integer n(ints[i].get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    const int lead_sign = sgn(ints.back());
    Rational scale(num_gcd);
    if (lead_sign < 0) scale = -scale;
    for (auto& x : ints) {
        x /= scale;
        x.canonicalize();
    }
    return UnivariatePolynomial(std::move(ints));
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial u = a.primitive();
    UnivariatePolynomial v = b.primitive();
    while (!v.is_zero()) {
        UnivariatePolynomial r = u.divrem(v).second;
        u = std::move(v);
        v = r.primitive();
    }
    return u;
}

std::string UnivariatePolynomial::str() const {
    return from_univariate(*this, tvar()).str();
}

UnivariatePolynomial UnivariatePolynomial::parse(std::string_view text) {
    return to_univariate(Polynomial::parse(text), tvar());
}

}  // namespace mcperm
