#include <doctest.h>

#include "mcperm/rng.hpp"
#include "mcperm/univariate.hpp"

using namespace mcperm;

TEST_CASE("construction strips leading zeros") {
    UnivariatePolynomial p({Rational(1), Rational(2), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(UnivariatePolynomial({Rational(0)}).is_zero());
    CHECK(UnivariatePolynomial::zero().degree() == -1);
}

TEST_CASE("arithmetic and evaluation") {
    const auto p = UnivariatePolynomial::parse("t^2 - 1");
    const auto q = UnivariatePolynomial::parse("t + 1");
    CHECK(p + q == UnivariatePolynomial::parse("t^2 + t"));
    CHECK(p * q == UnivariatePolynomial::parse("t^3 + t^2 - t - 1"));
    CHECK(p(Rational(3)) == Rational(8));
    CHECK(p.derivative() == UnivariatePolynomial::parse("2*t"));
}

TEST_CASE("division") {
    const auto p = UnivariatePolynomial::parse("t^3 - 1");
    const auto d = UnivariatePolynomial::parse("t - 1");
    const auto [q, r] = p.divrem(d);
    CHECK(r.is_zero());
    CHECK(q == UnivariatePolynomial::parse("t^2 + t + 1"));
    const auto [q2, r2] = UnivariatePolynomial::parse("t^2").divrem(UnivariatePolynomial::parse("2*t - 1"));
    CHECK(q2 * UnivariatePolynomial::parse("2*t - 1") + r2 == UnivariatePolynomial::parse("t^2"));
    CHECK_THROWS_AS(p.divrem(UnivariatePolynomial::zero()), std::invalid_argument);
}

TEST_CASE("primitive representative") {
    const auto p = UnivariatePolynomial::parse("2/3*t^2 + 4/3*t");
    const auto prim = p.primitive();
    CHECK(prim == UnivariatePolynomial::parse("t^2 + 2*t"));
    CHECK(UnivariatePolynomial::parse("-2*t").primitive() == UnivariatePolynomial::parse("t"));
}

TEST_CASE("gcd") {
    const auto a = UnivariatePolynomial::parse("t^2 - 1");
    const auto b = UnivariatePolynomial::parse("t^2 - 2*t + 1");
    CHECK(gcd(a, b) == UnivariatePolynomial::parse("t - 1"));
    CHECK(gcd(a, UnivariatePolynomial::zero()) == a.primitive());
    // random products share the planted factor
    SplitMix64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = UnivariatePolynomial(
            {random_rational(rng, 5, 2), random_rational(rng, 5, 2), Rational(1)});
        const auto u = f * UnivariatePolynomial({random_rational(rng, 5, 2), Rational(1)});
        const auto v = f * UnivariatePolynomial({random_rational(rng, 5, 2), Rational(1)});
        const auto g = gcd(u, v);
        CHECK(g.degree() >= f.degree());
        CHECK(u.divrem(g).second.is_zero());
        CHECK(v.divrem(g).second.is_zero());
    }
}

TEST_CASE("printing and parsing") {
    CHECK(UnivariatePolynomial::parse("2*t^2 + 2*t").str() == "2*t^2 + 2*t");
    CHECK(UnivariatePolynomial::zero().str() == "0");
    CHECK(UnivariatePolynomial::constant(Rational(-5, 3)).str() == "-5/3");
    CHECK_THROWS_AS(UnivariatePolynomial::parse("z1 + 1"), std::invalid_argument);
}
