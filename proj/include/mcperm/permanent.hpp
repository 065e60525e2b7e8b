#pragma once

#include <algorithm>
#include <bit>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include "mcperm/matrices.hpp"
#include "mcperm/polynomial.hpp"

namespace mcperm {

enum class PermanentEngine { Auto, Enumerate, SubsetDp, InclusionExclusion };

struct PermanentCaps {
    int enumerate = 10;   // n! enumeration
    int numeric_dp = 16;  // 2^n rational cells
    int symbolic_dp = 12; // 2^n polynomial cells
};

namespace detail {

template <class T>
inline T ring_one();
template <>
inline Rational ring_one<Rational>() { return Rational(1); }
template <>
inline Polynomial ring_one<Polynomial>() { return Polynomial::constant(Rational(1)); }

template <class T>
void check_square(const DenseMatrix<T>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("permanent requires a square matrix");
}

// Visits all permutations of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_index_permutation(int n, Fn&& fn) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace detail

// Plain permutation expansion. The reference engine the others are
// validated against.
template <class T>
T permanent_naive(const DenseMatrix<T>& m) {
    detail::check_square(m);
    T acc{};
    detail::for_each_index_permutation(m.rows, [&](const std::vector<int>& p) {
        T prod = m.at(0, p[0]);
        for (int i = 1; i < m.rows; ++i) prod = prod * m.at(i, p[static_cast<size_t>(i)]);
        acc += prod;
    });
    return acc;
}

// Dynamic program over (rows consumed, set of used columns); 2^n cells.
// Works over any exact ring, so it is the engine for symbolic matrices.
template <class T>
T permanent_subset_dp(const DenseMatrix<T>& m) {
    detail::check_square(m);
    const int n = m.rows;
    const size_t full = size_t{1} << n;
    std::vector<T> dp(full);
    dp[0] = detail::ring_one<T>();
    for (size_t mask = 1; mask < full; ++mask) {
        const int row = std::popcount(mask) - 1;
        T acc{};
        for (int j = 0; j < n; ++j) {
            if (!(mask & (size_t{1} << j))) continue;
            acc += dp[mask ^ (size_t{1} << j)] * m.at(row, j);
        }
        dp[mask] = std::move(acc);
    }
    return dp[full - 1];
}

// Ryser inclusion-exclusion with Gray-code subset increments.
Rational permanent_ryser(const NumericMatrix& m);

Rational permanent_numeric(const NumericMatrix& m, PermanentEngine engine = PermanentEngine::Auto,
                           const PermanentCaps& caps = {});
Polynomial permanent_symbolic(const SymbolicMatrix& m,
                              PermanentEngine engine = PermanentEngine::Auto,
                              const PermanentCaps& caps = {});

// Sum over k-subsets R of rows, C of columns, and bijections R -> C.
// per_0 = 1 for every matrix.
template <class T>
T k_permanent(const DenseMatrix<T>& m, int k, const PermanentCaps& caps = {}) {
    if (k < 0 || k > std::min(m.rows, m.cols))
        throw std::invalid_argument("k_permanent: k out of range");
    if constexpr (std::is_same_v<T, Rational>) {
        if (k > caps.numeric_dp) throw std::invalid_argument("k_permanent: numeric cap exceeded");
    } else {
        if (k > caps.symbolic_dp) throw std::invalid_argument("k_permanent: symbolic cap exceeded");
    }
    if (k == 0) return detail::ring_one<T>();
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    T acc{};
    // lexicographic k-subset enumeration for rows and columns
    auto next_subset = [](std::vector<int>& s, int limit) {
        int i = static_cast<int>(s.size()) - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == limit - static_cast<int>(s.size()) + i) --i;
        if (i < 0) return false;
        int v = ++s[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < s.size(); ++j) s[j] = ++v;
        return true;
    };
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
    do {
        for (int j = 0; j < k; ++j) cols[static_cast<size_t>(j)] = j;
        do {
            acc += permanent_subset_dp(m.submatrix(rows, cols));
        } while (next_subset(cols, m.cols));
    } while (next_subset(rows, m.rows));
    return acc;
}

// Permutations weighted by alpha^(cycle count). No subset decomposition
// exists for cycle structure, so this enumerates; the cap keeps it honest.
Polynomial alpha_permanent(const SymbolicMatrix& m, const Polynomial& alpha,
                           const PermanentCaps& caps = {});
Rational alpha_permanent(const NumericMatrix& m, const Rational& alpha,
                         const PermanentCaps& caps = {});

// per(JZ + A): the monotone column permanent polynomial, multiaffine in z.
Polynomial mcp_polynomial(const MonotoneColumnMatrix& a, const PermanentCaps& caps = {});
// per_k of (z_j + a_ij) for rectangular monotone matrices.
Polynomial k_sub_mcp_polynomial(const MonotoneColumnMatrix& a, int k,
                                const PermanentCaps& caps = {});

}  // namespace mcperm
