#include <doctest.h>

#include "mcperm/polynomial.hpp"
#include "mcperm/rng.hpp"

using namespace mcperm;

namespace {

Polynomial random_poly(SplitMix64& rng, int max_terms = 5, int max_vars = 3, int max_exp = 2) {
    Polynomial p;
    const int terms = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int nvars = static_cast<int>(rng.below(static_cast<uint64_t>(max_vars) + 1));
        for (int v = 0; v < nvars; ++v)
            m = m * Monomial::var(zvar(static_cast<uint32_t>(1 + rng.below(3))),
                                  static_cast<uint32_t>(1 + rng.below(static_cast<uint64_t>(max_exp))));
        p += Polynomial::term(Rational(static_cast<long>(rng.range(-5, 5))), m);
    }
    return p;
}

}  // namespace

TEST_CASE("variable printing and parsing") {
    CHECK(xvar(1).str() == "x1");
    CHECK(yvar(2).str() == "y2");
    CHECK(zvar(3).str() == "z3");
    CHECK(tvar().str() == "t");
    CHECK(alphavar().str() == "alpha");
    CHECK(VariableId::parse("x1") == xvar(1));
    CHECK(VariableId::parse("alpha") == alphavar());
    CHECK(VariableId::parse("t") == tvar());
    CHECK(VariableId::parse("t2") == tvar(2));
    CHECK(!VariableId::parse("w1").has_value());
    CHECK(!VariableId::parse("x").has_value());
}

TEST_CASE("addition cancels and merges") {
    const Polynomial x1 = Polynomial::variable(xvar(1));
    CHECK((x1 + (-x1)).is_zero());
    const Polynomial p = Polynomial::parse("y2 + 1") + Polynomial::parse("y2");
    CHECK(p == Polynomial::parse("2*y2 + 1"));
}

TEST_CASE("addition matches evaluation at random points") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 10; ++rep) {
        const Polynomial p = random_poly(rng), q = random_poly(rng);
        const Polynomial s = p + q;
        std::map<VariableId, Rational> point;
        for (uint32_t i = 1; i <= 3; ++i) point[zvar(i)] = random_rational(rng, 10, 4);
        CHECK(s.evaluate(point) == p.evaluate(point) + q.evaluate(point));
    }
}

TEST_CASE("multiplication basics") {
    const Polynomial lhs = Polynomial::parse("z1 + 1") * Polynomial::parse("z2 + 1");
    CHECK(lhs == Polynomial::parse("z1*z2 + z1 + z2 + 1"));
    CHECK((Polynomial::parse("z1 + z2") * Polynomial::zero()).is_zero());
    // difference of squares
    const Polynomial d = Polynomial::parse("z1 + t") * Polynomial::parse("z1 - t");
    CHECK(d == Polynomial::parse("z1^2 - t^2"));
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(99);
    for (int rep = 0; rep < 15; ++rep) {
        const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("partial derivatives") {
    const Polynomial p = Polynomial::parse("z1*z2 + z1");
    CHECK(p.derivative(zvar(1)) == Polynomial::parse("z2 + 1"));
    CHECK(Polynomial::variable(zvar(1)).derivative(zvar(2)).is_zero());
    const Polynomial descent3 = Polynomial::parse("1 + y2 + 3*y3 + y2*y3");
    CHECK(descent3.derivative(yvar(3)) == Polynomial::parse("3 + y2"));
}

TEST_CASE("mixed partials commute") {
    SplitMix64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const Polynomial p = random_poly(rng, 6, 3, 3);
        const Polynomial a = p.derivative(zvar(1)).derivative(zvar(2));
        const Polynomial b = p.derivative(zvar(2)).derivative(zvar(1));
        CHECK(a == b);
    }
}

TEST_CASE("substitution") {
    const Polynomial p = Polynomial::parse("z1 + 3");
    CHECK(p.substitute(zvar(1), Polynomial::constant(Rational(-3))).is_zero());
    // absent variables are untouched
    const Polynomial q = Polynomial::parse("1 + y2 + 3*y3 + y2*y3");
    CHECK(q.substitute(xvar(1), Polynomial::constant(Rational(1))) == q);
    // Eulerian specialization
    std::map<VariableId, Polynomial> bind{{yvar(2), Polynomial::variable(zvar(1))},
                                          {yvar(3), Polynomial::variable(zvar(1))}};
    CHECK(q.substitute(bind) == Polynomial::parse("1 + 4*z1 + z1^2"));
}

TEST_CASE("diagonalize") {
    const Polynomial p = Polynomial::parse("z1*z2");
    CHECK(p.diagonalize({zvar(1), zvar(2)}, zvar(1)) == Polynomial::parse("z1^2"));
    const Polynomial q = Polynomial::parse("2*z1*z2 + z1 + z2");
    CHECK(q.diagonalize_all(zvar(1)) == Polynomial::parse("2*z1^2 + 2*z1"));
    const Polynomial u = Polynomial::parse("z1^3 + z1");
    CHECK(u.diagonalize_all(zvar(1)) == u);
}

TEST_CASE("restrict_line") {
    const Polynomial p = Polynomial::parse("z1*z2");
    const auto u = p.restrict_line({Rational(0), Rational(0)}, {Rational(1), Rational(1)});
    CHECK(u == UnivariatePolynomial::parse("t^2"));
    const Polynomial q = Polynomial::parse("2*z1*z2 + z1 + z2");
    CHECK(q.restrict_line({Rational(0), Rational(0)}, {Rational(1), Rational(1)}) ==
          UnivariatePolynomial::parse("2*t^2 + 2*t"));
    const Polynomial c = Polynomial::constant(Rational(7));
    CHECK(c.restrict_line({}, {}) == UnivariatePolynomial::constant(Rational(7)));
    CHECK_THROWS_AS(p.restrict_line({Rational(0)}, {Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(p.restrict_line({Rational(0), Rational(0)}, {Rational(1), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("restrict_line agrees with direct evaluation") {
    SplitMix64 rng(1234);
    for (int rep = 0; rep < 20; ++rep) {
        const Polynomial p = random_poly(rng, 6, 3, 3);
        const auto vars = p.variables();
        std::vector<Rational> base, dir;
        for (size_t i = 0; i < vars.size(); ++i) {
            base.push_back(random_rational(rng, 10, 4));
            dir.push_back(random_positive_rational(rng, 10, 4));
        }
        const auto u = p.restrict_line(base, dir);
        const Rational tval = random_rational(rng, 10, 4);
        std::map<VariableId, Rational> point;
        for (size_t i = 0; i < vars.size(); ++i) point[vars[i]] = base[i] + tval * dir[i];
        CHECK(u(tval) == p.evaluate(point));
    }
}

TEST_CASE("coefficient extraction") {
    const Polynomial p = Polynomial::parse("z1 + t*y1");  // g + t*h shape
    CHECK(p.coefficient_in(tvar(), 1) == Polynomial::variable(yvar(1)));
    CHECK(p.coefficient_in(zvar(1), 5).is_zero());
    // reconstruction: sum_k coeff_k * v^k == p
    SplitMix64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const Polynomial q = random_poly(rng, 6, 3, 3);
        Polynomial rebuilt;
        for (uint32_t k = 0; k <= q.degree_in(zvar(1)); ++k)
            rebuilt += q.coefficient_in(zvar(1), k) *
                       Polynomial::term(Rational(1), Monomial::var(zvar(1), k));
        CHECK(rebuilt == q);
    }
}

TEST_CASE("recurrence operator") {
    const Polynomial x1 = Polynomial::variable(xvar(1));
    const Polynomial r = x1.apply_recurrence_operator(Rational(1), yvar(1), {xvar(1)});
    CHECK(r == Polynomial::parse("x1 + y1"));
    CHECK(Polynomial::constant(Rational(3))
              .apply_recurrence_operator(Rational(0), yvar(1), {xvar(1)})
              .is_zero());
    CHECK_THROWS_AS(x1.apply_recurrence_operator(Rational(1), xvar(1), {xvar(1)}),
                    std::invalid_argument);
}

TEST_CASE("canonical printing") {
    CHECK(Polynomial::parse("z2 + z1 + 2*z1*z2").str() == "2*z1*z2 + z1 + z2");
    CHECK(Polynomial::zero().str() == "0");
    CHECK(Polynomial::parse("-1/2*z1 + 3").str() == "-1/2*z1 + 3");
    CHECK(Polynomial::parse("z1^2 - t^2").str() == "z1^2 - t^2");
    CHECK(Polynomial::parse("x1*y2*z3*t*alpha").str() == "x1*y2*z3*t*alpha");
    // namespace-major variable order inside monomials
    CHECK((Polynomial::variable(zvar(1)) * Polynomial::variable(xvar(2))).str() == "x2*z1");
}

TEST_CASE("parser round-trip on random polynomials") {
    SplitMix64 rng(4242);
    for (int rep = 0; rep < 25; ++rep) {
        const Polynomial p = random_poly(rng, 8, 3, 3);
        CHECK(Polynomial::parse(p.str()) == p);
    }
    CHECK_THROWS_AS(Polynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("z1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("w1 + 2"), std::invalid_argument);
}

TEST_CASE("point evaluator matches evaluate") {
    SplitMix64 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        const Polynomial p = random_poly(rng, 6, 3, 3);
        const auto vars = p.variables();
        const PointEvaluator ev(p, vars);
        std::vector<Rational> point;
        std::map<VariableId, Rational> named;
        for (const auto& v : vars) {
            point.push_back(random_rational(rng, 9, 3));
            named[v] = point.back();
        }
        CHECK(ev.eval(point) == p.evaluate(named));
    }
}

TEST_CASE("multiaffine and degree queries") {
    CHECK(Polynomial::parse("z1*z2 + z1").is_multiaffine());
    CHECK(!Polynomial::parse("z1^2").is_multiaffine());
    CHECK(Polynomial::parse("z1^2*z2 + z2").degree_in(zvar(1)) == 2);
    CHECK(Polynomial::parse("z1^2*z2 + z2").total_degree() == 3);
}
