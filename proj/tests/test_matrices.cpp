#include <doctest.h>

#include "mcperm/matrices.hpp"

using namespace mcperm;

namespace {

const FerrersMatrix kReferenceShape(5, {0, 1, 3, 4, 4});

}

TEST_CASE("ferrers construction and validation") {
    CHECK(kReferenceShape.entry(0, 1));
    CHECK(!kReferenceShape.entry(1, 1));
    // displayed rows (01111),(00111),(00111),(00011),(00000)
    const bool expected[5][5] = {{0, 1, 1, 1, 1},
                                 {0, 0, 1, 1, 1},
                                 {0, 0, 1, 1, 1},
                                 {0, 0, 0, 1, 1},
                                 {0, 0, 0, 0, 0}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(kReferenceShape.entry(i, j) == expected[i][j]);
    CHECK_THROWS_AS(FerrersMatrix(3, {2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FerrersMatrix(3, {0, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ferrers_from_heights(3, 2, {0, 1, 2}), std::invalid_argument);
    const FerrersMatrix zero(3, {0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(!zero.entry(i, j));
    const FerrersMatrix stair(3, {1, 2, 3});
    CHECK(stair.entry(2, 2));
}

TEST_CASE("ferrers dual") {
    const FerrersMatrix zero(3, {0, 0, 0});
    const FerrersMatrix ones = zero.dual();
    CHECK(ones.heights() == std::vector<int>{3, 3, 3});
    // reference shape: a_11 = 0, so the dual has a one in the corner
    CHECK(kReferenceShape.dual().entry(0, 0));
    // involution over every shape with m, n <= 5
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& a : enumerate_ferrers(m, n)) {
                const FerrersMatrix d = a.dual();
                CHECK(d.rows() == n);
                CHECK(d.cols() == m);
                CHECK(d.dual() == a);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) CHECK(a.entry(i, j) == !d.entry(j, i));
            }
    // the staircase E_n is not self-dual: its dual is shifted one step up
    for (int n = 2; n <= 6; ++n) {
        const FerrersMatrix e = eulerian_matrix(n);
        std::vector<int> shifted;
        for (int j = 1; j <= n; ++j) shifted.push_back(j);
        CHECK(e.dual().heights() == shifted);
        CHECK(e.dual() != e);
    }
}

TEST_CASE("enumeration counts match binomials") {
    CHECK(enumerate_ferrers(5, 5).size() == 252);  // C(10, 5)
    CHECK(enumerate_ferrers(4, 4).size() == 70);   // C(8, 4)
    CHECK(enumerate_ferrers(2, 3).size() == 10);   // C(5, 3)
    CHECK(enumerate_ferrers(1, 1).size() == 2);
}

TEST_CASE("truncate") {
    const FerrersMatrix t = kReferenceShape.truncate();
    CHECK(t.rows() == 4);
    CHECK(t.heights() == std::vector<int>{0, 1, 3, 4});
    CHECK(kReferenceShape.zeros_in_last_column() == 1);
    CHECK(FerrersMatrix(2, {0, 0}).truncate() == FerrersMatrix(1, {0}));
    // full column clips to the new row count
    CHECK(FerrersMatrix(3, {3, 3, 3}).truncate().heights() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(FerrersMatrix(1, {0}).truncate(), std::invalid_argument);
}

TEST_CASE("eulerian and multiset matrices") {
    const FerrersMatrix e3 = eulerian_matrix(3);
    CHECK(e3.heights() == std::vector<int>{0, 1, 2});
    CHECK(eulerian_matrix(1).heights() == std::vector<int>{0});
    CHECK(multiset_eulerian_matrix({1, 1, 1}) == eulerian_matrix(3));
    CHECK(multiset_eulerian_matrix({2, 1}).heights() == std::vector<int>{0, 0, 2});
    CHECK(multiset_eulerian_matrix({3}).heights() == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(multiset_eulerian_matrix({}), std::invalid_argument);
    CHECK_THROWS_AS(multiset_eulerian_matrix({2, 0}), std::invalid_argument);
}

TEST_CASE("padding") {
    const FerrersMatrix ones12(1, {1, 1});
    const FerrersMatrix padded = pad_rows(ones12, 1);
    CHECK(padded.rows() == 2);
    CHECK(padded.entry(0, 0));
    CHECK(!padded.entry(1, 0));
    CHECK(pad_rows(ones12, 0) == ones12);
    CHECK(pad_cols(ones12, 2).heights() == std::vector<int>{0, 0, 1, 1});

    const MonotoneColumnMatrix m(1, 2, {Rational(1), Rational(2)});
    const MonotoneColumnMatrix wide = pad_cols(m, 1);
    CHECK(wide.cols() == 3);
    CHECK(wide.at(0, 2) == 0);
}

TEST_CASE("monotone matrix validation") {
    CHECK_THROWS_AS(MonotoneColumnMatrix(2, 1, {Rational(0), Rational(1)}), std::invalid_argument);
    const MonotoneColumnMatrix ok(2, 2, {Rational(1), Rational(1), Rational(0), Rational(0)});
    CHECK(ok.nonnegative());
    CHECK(ok.column_sum(0) == Rational(1));
    const MonotoneColumnMatrix neg(2, 1, {Rational(1), Rational(-2)});
    CHECK(!neg.nonnegative());
}

TEST_CASE("columns_to_ones") {
    const MonotoneColumnMatrix a(2, 2, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(columns_to_ones(a, {}) == a);
    const auto b = columns_to_ones(a, {1});
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(1, 1) == 1);
    CHECK_THROWS_AS(columns_to_ones(a, {2}), std::out_of_range);
    // composition equals union
    const auto via_two = columns_to_ones(columns_to_ones(a, {0}), {1});
    CHECK(via_two == columns_to_ones(a, {0, 1}));
}

TEST_CASE("random monotone matrices are deterministic and monotone") {
    const auto a = random_monotone_matrix(4, 3, -9, 9, 1, 77);
    const auto b = random_monotone_matrix(4, 3, -9, 9, 1, 77);
    CHECK(a == b);
    const auto c = random_monotone_matrix(4, 3, -9, 9, 1, 78);
    CHECK(a != c);
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i + 1 < a.rows(); ++i) CHECK(a.at(i, j) >= a.at(i + 1, j));
    const auto constant = random_monotone_matrix(3, 3, 4, 4, 1, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(constant.at(i, j) == 4);
}

TEST_CASE("symbolic builders") {
    const SymbolicMatrix b = build_B(kReferenceShape);
    CHECK(b.at(0, 0) == Polynomial::variable(xvar(1)));
    CHECK(b.at(0, 1) == Polynomial::variable(yvar(2)));
    CHECK(b.at(0, 4) == Polynomial::variable(yvar(5)));
    for (int j = 0; j < 5; ++j) CHECK(b.at(4, j) == Polynomial::variable(xvar(5)));

    // variables used: x_i for rows with a zero, y_j for columns with ones
    const SymbolicMatrix ones = build_B(FerrersMatrix(2, {2, 2}));
    CHECK(ones.at(0, 0) == Polynomial::variable(yvar(1)));
    CHECK(ones.at(1, 1) == Polynomial::variable(yvar(2)));
    CHECK(build_B(FerrersMatrix(1, {0})).at(0, 0) == Polynomial::variable(xvar(1)));

    const MonotoneColumnMatrix a(2, 2, {Rational(1), Rational(1), Rational(0), Rational(0)});
    const SymbolicMatrix jz = build_JZ_plus_A(a);
    CHECK(jz.at(0, 0) == Polynomial::parse("z1 + 1"));
    CHECK(jz.at(1, 1) == Polynomial::parse("z2"));

    const SymbolicMatrix yform = build_Y_form(FerrersMatrix(1, {1}));
    CHECK(yform.at(0, 0) == Polynomial::variable(yvar(1)));
}

TEST_CASE("build_B uses exactly the forced variables") {
    for (const auto& a : enumerate_ferrers(4, 4)) {
        const SymbolicMatrix b = build_B(a);
        std::set<VariableId> used;
        for (const auto& cell : b.cells)
            for (const auto& v : cell.variables()) used.insert(v);
        std::set<VariableId> expected;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (!a.entry(i, j)) expected.insert(xvar(static_cast<uint32_t>(i + 1)));
        for (int j = 0; j < a.cols(); ++j)
            if (a.height(j) >= 1) expected.insert(yvar(static_cast<uint32_t>(j + 1)));
        CHECK(used == expected);
    }
}
