#include <doctest.h>

#include <map>

#include "mcperm/combinatorics.hpp"
#include "mcperm/matrices.hpp"
#include "mcperm/permanent.hpp"

using namespace mcperm;

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK(Permutation::identity(4).word() == std::vector<int>{1, 2, 3, 4});
    CHECK(Permutation::from_digits("341526978").size() == 9);
    CHECK(Permutation({3, 1, 2}).inverse() == Permutation({2, 3, 1}));
}

TEST_CASE("statistics on a nine-letter running example") {
    const Permutation sigma = Permutation::from_digits("341526978");
    const auto st = stats(sigma);
    CHECK(st.cyc == 4);  // cycles (31)(452)(6)(987)
    CHECK(st.exc == 4);
    CHECK(st.des == 3);
    const auto id = Permutation::identity(5);
    CHECK(stats(id).exc == 0);
    CHECK(stats(id).des == 0);
    CHECK(stats(id).cyc == 5);
    const auto two = Permutation({2, 1});
    CHECK(stats(two).exc == 1);
    CHECK(stats(two).des == 1);
    CHECK(stats(two).descent_tops == std::set<int>{2});
}

TEST_CASE("linear map matches the worked example") {
    CHECK(riordan_linear_map(Permutation::from_digits("341526978")) ==
          Permutation::from_digits("314526987"));
    CHECK(riordan_linear_map(Permutation::identity(5)) == Permutation::identity(5));
}

TEST_CASE("linear map transports statistics") {
    // Cycle minima sit at cycle ends, so cycles become right-to-left
    // minima; descents of the image track deficiencies. The exceedance
    // correspondence runs through the inverse.
    for_each_permutation(6, [](const Permutation& sigma) {
        const auto st = stats(sigma);
        const Permutation image = riordan_linear_map(sigma);
        const auto ist = stats(image);
        CHECK(ist.rl_minima == st.cyc);
        int deficiencies = 0;
        for (int i = 1; i <= sigma.size(); ++i)
            if (sigma(i) < i) ++deficiencies;
        CHECK(ist.des == deficiencies);
        const Permutation via_inverse = riordan_linear_map(sigma.inverse());
        CHECK(stats(via_inverse).descent_tops == st.exceedance_tops);
        CHECK(stats(via_inverse).rl_minima == st.cyc);
    });
}

TEST_CASE("pi_map") {
    CHECK(pi_map(Permutation::from_digits("316524")) == Permutation::from_digits("31452"));
    CHECK(pi_map(Permutation::from_digits("1234")) == Permutation::from_digits("123"));
    CHECK_THROWS_AS(pi_map(Permutation({1})), std::invalid_argument);
    // fibers: every pi in S_{n-1} has exactly n preimages
    std::map<std::vector<int>, int> fiber;
    for_each_permutation(5, [&](const Permutation& sigma) { ++fiber[pi_map(sigma).word()]; });
    CHECK(fiber.size() == 24);
    for (const auto& [w, count] : fiber) CHECK(count == 5);
}

TEST_CASE("pi_map classifies the recurrence terms of the reference shape") {
    // For the 5x5 shape with heights (0,1,3,4,4): k = 1, so the permanent
    // terms split into C_5 (sigma(5) = 5, bijective onto S_4) and D (the
    // rest, 4-to-one onto S_4), with the term identities
    // T_sigma = x_5 T_pi  resp.  v_sigma T_sigma = x_5 y_5 T_pi.
    const FerrersMatrix a(5, {0, 1, 3, 4, 4});
    const SymbolicMatrix b = build_B(a);
    const SymbolicMatrix b_inner = build_B(a.truncate());
    const Polynomial x5 = Polynomial::variable(xvar(5));
    const Polynomial y5 = Polynomial::variable(yvar(5));
    std::map<std::vector<int>, int> class_c, class_d;
    for_each_permutation(5, [&](const Permutation& sigma) {
        Polynomial term = Polynomial::constant(Rational(1));
        for (int i = 1; i <= 5; ++i) term *= b.at(i - 1, sigma(i) - 1);
        const Permutation pi = pi_map(sigma);
        Polynomial inner_term = Polynomial::constant(Rational(1));
        for (int i = 1; i <= 4; ++i) inner_term *= b_inner.at(i - 1, pi(i) - 1);
        if (sigma(5) == 5) {
            ++class_c[pi.word()];
            CHECK(term == x5 * inner_term);
        } else {
            ++class_d[pi.word()];
            // v_sigma is the entry of B(A deg) at (i_sigma, j_sigma)
            int i_sigma = 0;
            for (int i = 1; i <= 5; ++i)
                if (sigma(i) == 5) i_sigma = i;
            const Polynomial v = b_inner.at(i_sigma - 1, sigma(5) - 1);
            CHECK(v * term == x5 * y5 * inner_term);
        }
    });
    CHECK(class_c.size() == 24);
    for (const auto& [w, c] : class_c) CHECK(c == 1);
    CHECK(class_d.size() == 24);
    for (const auto& [w, c] : class_d) CHECK(c == 4);
}

TEST_CASE("eulerian polynomials by enumeration") {
    CHECK(eulerian_poly_direct(1) == UnivariatePolynomial::parse("1"));
    CHECK(eulerian_poly_direct(3) == UnivariatePolynomial::parse("t^2 + 4*t + 1"));
    CHECK(descent_top_poly_direct(3) == Polynomial::parse("y2*y3 + y2 + 3*y3 + 1"));
    CHECK(exceedance_top_poly_direct(3) == descent_top_poly_direct(3));
    // equidistribution of exc and des for n <= 7
    for (int n = 2; n <= 7; ++n) {
        std::vector<Rational> exc_counts(static_cast<size_t>(n), Rational(0));
        for_each_permutation(n, [&](const Permutation& s) {
            exc_counts[static_cast<size_t>(stats(s).exc)] += 1;
        });
        CHECK(UnivariatePolynomial(std::move(exc_counts)) == eulerian_poly_direct(n));
    }
    CHECK_THROWS_AS(eulerian_poly_direct(10), std::invalid_argument);
}

TEST_CASE("shift 1 recovers plain descent tops") {
    for (int n = 2; n <= 5; ++n)
        CHECK(shifted_descent_poly_direct(n, 1) == descent_top_poly_direct(n));
    CHECK(shifted_descent_poly_direct(3, 2) == Polynomial::parse("2*y3 + 4"));
}

TEST_CASE("minima-refined descent polynomials") {
    // alpha^cyc over exceedance tops equals alpha^(rl minima) over descent
    // tops; the left-to-right variant is a different polynomial.
    for (int n = 2; n <= 5; ++n) {
        CHECK(cycle_exceedance_poly_direct(n) ==
              min_descent_poly_direct(n, MinStatistic::RightToLeft));
    }
    CHECK(lrmin_descent_poly_direct(3) != min_descent_poly_direct(3, MinStatistic::RightToLeft));
    // all variants collapse to the descent-top polynomial at alpha = 1
    const Polynomial one = Polynomial::constant(Rational(1));
    CHECK(lrmin_descent_poly_direct(4).substitute(alphavar(), one) == descent_top_poly_direct(4));
    CHECK(cycle_exceedance_poly_direct(4).substitute(alphavar(), one) ==
          exceedance_top_poly_direct(4));
}

TEST_CASE("multiset permutations") {
    const auto words = multiset_permutations({2, 1});
    CHECK(words == std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(multiset_permutations({3}).size() == 1);
    CHECK(multiset_descent_poly_direct({2, 1}) == Polynomial::parse("2*y2 + 1"));
    CHECK(multiset_descent_poly_direct({4}) == Polynomial::constant(Rational(1)));
    CHECK_THROWS_AS(multiset_permutations({5, 5}), std::invalid_argument);
}

TEST_CASE("top counts") {
    const TopCounts t3 = top_counts(3);
    CHECK(t3.single[0] == 0);  // 1 is never a descent top
    CHECK(t3.single[1] == 2);  // 213 and 321
    CHECK(t3.single[2] == 4);
    for (int n = 3; n <= 6; ++n) {
        const TopCounts tc = top_counts(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                CHECK(tc.pair[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] <=
                      tc.single[static_cast<size_t>(i - 1)]);
                CHECK(tc.pair[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] <=
                      tc.single[static_cast<size_t>(j - 1)]);
            }
    }
    // derivative of the descent-top polynomial at the all-ones point
    // counts descent tops
    const Polynomial f = descent_top_poly_direct(4);
    const TopCounts t4 = top_counts(4);
    for (int i = 2; i <= 4; ++i) {
        std::map<VariableId, Rational> ones;
        for (const auto& v : f.variables()) ones[v] = Rational(1);
        CHECK(f.derivative(yvar(static_cast<uint32_t>(i))).evaluate(ones) ==
              Rational(t4.single[static_cast<size_t>(i - 1)]));
    }
}
