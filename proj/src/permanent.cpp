#include "mcperm/permanent.hpp"

namespace mcperm {

Rational permanent_ryser(const NumericMatrix& m) {
    detail::check_square(m);
    const int n = m.rows;
    const uint64_t full = uint64_t{1} << n;
    std::vector<Rational> rowsum(static_cast<size_t>(n), Rational(0));
    Rational acc(0);
    uint64_t prev_gray = 0;
    for (uint64_t g = 1; g < full; ++g) {
        const uint64_t gray = g ^ (g >> 1);
        const uint64_t diff = gray ^ prev_gray;
        const int j = std::countr_zero(diff);
        if (gray & diff) {
            for (int i = 0; i < n; ++i) rowsum[static_cast<size_t>(i)] += m.at(i, j);
        } else {
            for (int i = 0; i < n; ++i) rowsum[static_cast<size_t>(i)] -= m.at(i, j);
        }
        prev_gray = gray;
        Rational prod = rowsum[0];
        for (int i = 1; i < n; ++i) prod *= rowsum[static_cast<size_t>(i)];
        if ((std::popcount(gray) & 1) != 0) acc -= prod;
        else acc += prod;
    }
    // (-1)^n * sum over S of (-1)^|S| * prod of row sums
    if ((n & 1) != 0) acc = -acc;
    return acc;
}

Rational permanent_numeric(const NumericMatrix& m, PermanentEngine engine,
                           const PermanentCaps& caps) {
    detail::check_square(m);
    switch (engine) {
        case PermanentEngine::Enumerate:
            if (m.rows > caps.enumerate)
                throw std::invalid_argument("permanent: enumeration cap exceeded");
            return permanent_naive(m);
        case PermanentEngine::SubsetDp:
            if (m.rows > caps.numeric_dp)
                throw std::invalid_argument("permanent: subset-dp cap exceeded");
            return permanent_subset_dp(m);
        case PermanentEngine::InclusionExclusion:
        case PermanentEngine::Auto:
            if (m.rows > caps.numeric_dp)
                throw std::invalid_argument("permanent: numeric cap exceeded");
            return permanent_ryser(m);
    }
    throw std::logic_error("unreachable");
}

Polynomial permanent_symbolic(const SymbolicMatrix& m, PermanentEngine engine,
                              const PermanentCaps& caps) {
    detail::check_square(m);
    switch (engine) {
        case PermanentEngine::Enumerate:
            if (m.rows > caps.enumerate)
                throw std::invalid_argument("permanent: enumeration cap exceeded");
            return permanent_naive(m);
        case PermanentEngine::InclusionExclusion:
            throw std::invalid_argument("permanent: inclusion-exclusion engine is numeric-only");
        case PermanentEngine::SubsetDp:
        case PermanentEngine::Auto:
            if (m.rows > caps.symbolic_dp)
                throw std::invalid_argument("permanent: symbolic cap exceeded");
            return permanent_subset_dp(m);
    }
    throw std::logic_error("unreachable");
}

namespace {

int cycle_count(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j]);
        }
    }
    return cycles;
}

}  // namespace

Polynomial alpha_permanent(const SymbolicMatrix& m, const Polynomial& alpha,
                           const PermanentCaps& caps) {
    detail::check_square(m);
    if (m.rows > caps.enumerate)
        throw std::invalid_argument("alpha_permanent: enumeration cap exceeded");
    std::vector<Polynomial> alpha_pow(static_cast<size_t>(m.rows) + 1);
    alpha_pow[0] = Polynomial::constant(Rational(1));
    for (size_t c = 1; c < alpha_pow.size(); ++c) alpha_pow[c] = alpha_pow[c - 1] * alpha;
    Polynomial acc;
    detail::for_each_index_permutation(m.rows, [&](const std::vector<int>& p) {
        Polynomial prod = m.at(0, p[0]);
        for (int i = 1; i < m.rows; ++i) prod *= m.at(i, p[static_cast<size_t>(i)]);
        acc += prod * alpha_pow[static_cast<size_t>(cycle_count(p))];
    });
    return acc;
}

Rational alpha_permanent(const NumericMatrix& m, const Rational& alpha,
                         const PermanentCaps& caps) {
    detail::check_square(m);
    if (m.rows > caps.enumerate)
        throw std::invalid_argument("alpha_permanent: enumeration cap exceeded");
    std::vector<Rational> alpha_pow(static_cast<size_t>(m.rows) + 1, Rational(1));
    for (size_t c = 1; c < alpha_pow.size(); ++c) alpha_pow[c] = alpha_pow[c - 1] * alpha;
    Rational acc(0);
    detail::for_each_index_permutation(m.rows, [&](const std::vector<int>& p) {
        Rational prod = m.at(0, p[0]);
        for (int i = 1; i < m.rows; ++i) prod *= m.at(i, p[static_cast<size_t>(i)]);
        acc += prod * alpha_pow[static_cast<size_t>(cycle_count(p))];
    });
    return acc;
}

Polynomial mcp_polynomial(const MonotoneColumnMatrix& a, const PermanentCaps& caps) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mcp_polynomial: matrix must be square");
    return permanent_symbolic(build_JZ_plus_A(a), PermanentEngine::Auto, caps);
}

Polynomial k_sub_mcp_polynomial(const MonotoneColumnMatrix& a, int k, const PermanentCaps& caps) {
    return k_permanent(build_JZ_plus_A(a), k, caps);
}

}  // namespace mcperm
