#include <doctest.h>

#include "mcperm/apolarity.hpp"
#include "mcperm/numeric_roots.hpp"
#include "mcperm/permanent.hpp"
#include "mcperm/rng.hpp"

using namespace mcperm;

namespace {

UnivariatePolynomial u(const char* text) { return UnivariatePolynomial::parse(text); }

}  // namespace

TEST_CASE("binomial coefficient conversion round-trips") {
    const auto f = u("3*t^3 - t + 2");
    const auto a = binomial_normalized_coeffs(f, 3);
    CHECK(from_binomial_coeffs(a) == f);
    CHECK(a[3] == Rational(3));       // C(3,3) = 1
    CHECK(a[1] == Rational(-1, 3));   // C(3,1) = 3
    CHECK_THROWS_AS(binomial_normalized_coeffs(f, 2), std::invalid_argument);
}

TEST_CASE("apolarity form on tiny cases") {
    // t is apolar to itself (n = 1: both binomial coefficient vectors are (0,1))
    CHECK(apolarity_form(u("t"), u("t")) == 0);
    // f = t-1, g = t+1: -a0 b1 + a1 b0 = 1 + 1 = 2
    CHECK(apolarity_form(u("t - 1"), u("t + 1")) == 2);
    CHECK_THROWS_AS(apolarity_form(u("t"), u("t^2")), std::invalid_argument);
}

TEST_CASE("root-difference permanent computes the form") {
    // n! form(f, g) = (-1)^n lc(f) lc(g) per(w_i - z_j), w = roots of g,
    // z = roots of f. Frozen cases first.
    {
        // f = t (z=0), g = t-1 (w=1): form = -1, per = 1, n = 1
        CHECK(apolarity_form(u("t"), u("t - 1")) == Rational(-1));
    }
    {
        // f = 2(t-1)(t-2), g = 3(t-4)(t-5): form = 51, per([[3,2],[4,3]]) = 17
        const RootedPolynomial f{Rational(2), {Rational(1), Rational(2)}};
        const RootedPolynomial g{Rational(3), {Rational(4), Rational(5)}};
        CHECK(apolarity_form(f.expand(), g.expand()) == Rational(51));
        NumericMatrix diff(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) diff.at(i, j) = g.roots[i] - f.roots[j];
        CHECK(permanent_ryser(diff) == Rational(17));
        CHECK(Rational(2) * apolarity_form(f.expand(), g.expand()) ==
              Rational(6) * Rational(17));  // n! form = (+1) lc lc per
    }
    // randomized corpus across degrees 1..5
    SplitMix64 rng(515);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + rep % 5;
        RootedPolynomial f{random_positive_rational(rng, 4, 2), {}};
        RootedPolynomial g{random_positive_rational(rng, 4, 2), {}};
        if (rng.coin()) f.lead = -f.lead;
        for (int k = 0; k < n; ++k) {
            f.roots.push_back(random_rational(rng, 8, 3));
            g.roots.push_back(random_rational(rng, 8, 3));
        }
        NumericMatrix diff(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) diff.at(i, j) = g.roots[i] - f.roots[j];
        Rational rhs = f.lead * g.lead * permanent_ryser(diff);
        if (n % 2 != 0) rhs = -rhs;
        CHECK(apolarity_form(f.expand(), g.expand()) *
                  Rational(factorial(static_cast<unsigned long>(n))) ==
              rhs);
        // apolar exactly when the permanent vanishes
        CHECK((sgn(apolarity_form(f.expand(), g.expand())) == 0) ==
              (sgn(permanent_ryser(diff)) == 0));
    }
}

TEST_CASE("apolar complement") {
    // n = 1, g = t - w: the unique monic apolar partner is t - w itself
    const Rational w(7, 2);
    const auto f = apolar_complement(u("t - 7/2"), 1, {});
    CHECK(f == u("t - 7/2"));

    SplitMix64 rng(626);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + rep % 5;
        std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
        for (auto& c : coeffs) c = random_rational(rng, 6, 3);
        if (sgn(coeffs.back()) == 0) coeffs.back() = Rational(2);
        const UnivariatePolynomial g{std::move(coeffs)};
        std::vector<Rational> params(static_cast<size_t>(n - 1));
        for (auto& c : params) c = random_rational(rng, 6, 3);
        const auto fc = apolar_complement(g, n, params);
        CHECK(fc.degree() == n);
        CHECK(apolarity_form(fc, g) == 0);
    }
    // degenerate: deg g < n means b_n = 0
    CHECK_THROWS_AS(apolar_complement(u("t + 1"), 2, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("mobius transform") {
    const auto f = u("t^2 - 3*t + 2");
    CHECK(mobius_transform(f, MobiusMap::identity()) == f);
    CHECK_THROWS_AS(MobiusMap(Rational(1), Rational(2), Rational(2), Rational(4)),
                    std::invalid_argument);

    // roots map through phi: compare against the expanded image polynomial
    SplitMix64 rng(727);
    for (int rep = 0; rep < 30; ++rep) {
        MobiusMap phi = [&] {
            while (true) {
                Rational a = random_rational(rng, 4, 2), b = random_rational(rng, 4, 2),
                         c = random_rational(rng, 4, 2), d = random_rational(rng, 4, 2);
                if (sgn(a * d - b * c) != 0) return MobiusMap(a, b, c, d);
            }
        }();
        const int n = 1 + rep % 3;
        RootedPolynomial f_rooted{Rational(1), {}};
        while (static_cast<int>(f_rooted.roots.size()) < n) {
            const Rational x = random_rational(rng, 5, 2);
            if (sgn(phi.c * x + phi.d) != 0) f_rooted.roots.push_back(x);
        }
        UnivariatePolynomial transformed;
        try {
            transformed = mobius_transform(f_rooted.expand(), phi);
        } catch (const std::invalid_argument&) {
            continue;  // degree drop: phi^{-1}(inf) was a root
        }
        RootedPolynomial image{Rational(1), {}};
        for (const auto& z : f_rooted.roots) image.roots.push_back(phi.apply(z));
        // proportional polynomials share primitive representatives up to sign
        const auto lhs = transformed.primitive();
        const auto rhs = image.expand().primitive();
        CHECK(lhs == rhs);
    }

    // degree drop detection: phi^{-1}(inf) = -d/c = -1 is a root of f
    const MobiusMap phi(Rational(1), Rational(0), Rational(1), Rational(1));
    CHECK_THROWS_AS(mobius_transform(u("t + 1"), phi), std::invalid_argument);
}

TEST_CASE("mobius preserves apolarity") {
    SplitMix64 rng(838);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 2 + rep % 3;
        std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
        for (auto& c : coeffs) c = random_rational(rng, 5, 2);
        if (sgn(coeffs.back()) == 0) coeffs.back() = Rational(1);
        const UnivariatePolynomial g{std::move(coeffs)};
        std::vector<Rational> params(static_cast<size_t>(n - 1));
        for (auto& c : params) c = random_rational(rng, 5, 2);
        const auto f = apolar_complement(g, n, params);
        MobiusMap phi = [&] {
            while (true) {
                Rational a = random_rational(rng, 3, 2), b = random_rational(rng, 3, 2),
                         c = random_rational(rng, 3, 2), d = random_rational(rng, 3, 2);
                if (sgn(a * d - b * c) != 0) return MobiusMap(a, b, c, d);
            }
        }();
        UnivariatePolynomial fhat, ghat;
        try {
            fhat = mobius_transform(f, phi);
            ghat = mobius_transform(g, phi);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CHECK(apolarity_form(fhat, ghat) == 0);
    }
}

TEST_CASE("mobius transform composed with its inverse is a scalar multiple") {
    SplitMix64 rng(949);
    for (int rep = 0; rep < 20; ++rep) {
        MobiusMap phi = [&] {
            while (true) {
                Rational a = random_rational(rng, 4, 2), b = random_rational(rng, 4, 2),
                         c = random_rational(rng, 4, 2), d = random_rational(rng, 4, 2);
                if (sgn(a * d - b * c) != 0) return MobiusMap(a, b, c, d);
            }
        }();
        const MobiusMap inv(phi.d, -phi.b, -phi.c, phi.a);
        std::vector<Rational> coeffs(static_cast<size_t>(2 + rep % 3) + 1);
        for (auto& x : coeffs) x = random_rational(rng, 5, 2);
        if (sgn(coeffs.back()) == 0) coeffs.back() = Rational(1);
        const UnivariatePolynomial f{std::move(coeffs)};
        UnivariatePolynomial round;
        try {
            round = mobius_transform(mobius_transform(f, phi), inv);
        } catch (const std::invalid_argument&) {
            continue;  // degree drop en route
        }
        // equal up to the exact determinant-power scalar
        CHECK(round * f.leading() == f * round.leading());
        const Rational scale = round.leading() / f.leading();
        CHECK(scale == pow(phi.determinant(), static_cast<unsigned>(f.degree())));
    }
}

TEST_CASE("non-apolar pairs can dodge the disk, apolar ones cannot") {
    // g = t^3, f = (t - 5)^3: not apolar, and f's roots all avoid the unit
    // disk; the form is visibly nonzero so the demo's construction would
    // never produce this f.
    const RootedPolynomial g{Rational(1), {Rational(0), Rational(0), Rational(0)}};
    const RootedPolynomial f{Rational(1), {Rational(5), Rational(5), Rational(5)}};
    CHECK(apolarity_form(f.expand(), g.expand()) != 0);
}

TEST_CASE("numeric root finder") {
    // (t - 1)(t - 2)(t - 3)
    const auto roots = polynomial_roots({{-6, 0}, {11, 0}, {-6, 0}, {1, 0}});
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 3);
    double best = 1e9;
    for (const auto& r : *roots) best = std::min(best, std::abs(r - std::complex<double>(2, 0)));
    CHECK(best < 1e-9);
    CHECK(!polynomial_roots({{1, 0}}).has_value());  // constants rejected
}

TEST_CASE("grace demonstration") {
    // all roots of g at the origin: any apolar partner must reach into
    // every disk around 0
    GraceDemoParams params;
    params.trials = 20;
    params.seed = 5;
    params.radius = 0.0;
    params.tol = 1e-6;
    const auto at_zero = grace_demo({{0, 0}, {0, 0}, {0, 0}}, params);
    CHECK(at_zero.violations == 0);
    CHECK(at_zero.skipped == 0);

    GraceDemoParams unit;
    unit.trials = 100;
    unit.seed = 6;
    const auto disk = grace_demo({{0.5, 0.1}, {-0.3, 0.4}, {0.0, -0.9}, {0.2, 0.2}}, unit);
    CHECK(disk.violations == 0);

    // a root outside the disk violates the precondition
    CHECK_THROWS_AS(grace_demo({{2.0, 0.0}}, unit), std::invalid_argument);
}
