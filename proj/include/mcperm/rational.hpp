#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcperm {

// All exact arithmetic in this library runs over arbitrary-precision
// rationals. Identities are checked by structural equality, never by
// tolerance.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace mcperm
