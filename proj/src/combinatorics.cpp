#include "mcperm/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a permutation word");
        seen[static_cast<size_t>(v - 1)] = true;
    }
    if (word_.empty()) throw std::invalid_argument("empty permutation");
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_digits(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("permutation digits must be 1..9");
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) w[static_cast<size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string s;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i && word_.size() > 9) s += ",";
        s += std::to_string(word_[i]);
    }
    return s;
}

PermutationStats stats(const Permutation& sigma) {
    PermutationStats st;
    const int n = sigma.size();
    for (int i = 1; i <= n; ++i) {
        if (sigma(i) > i) {
            ++st.exc;
            st.exceedance_tops.insert(sigma(i));
        }
        if (i < n && sigma(i) > sigma(i + 1)) {
            ++st.des;
            st.descent_tops.insert(sigma(i));
        }
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        ++st.cyc;
        int j = i;
        while (!seen[static_cast<size_t>(j - 1)]) {
            seen[static_cast<size_t>(j - 1)] = true;
            j = sigma(j);
        }
    }
    int running_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (sigma(i) < running_min) {
            ++st.lr_minima;
            running_min = sigma(i);
        }
    }
    running_min = n + 1;
    for (int i = n; i >= 1; --i) {
        if (sigma(i) < running_min) {
            ++st.rl_minima;
            running_min = sigma(i);
        }
    }
    return st;
}

Permutation riordan_linear_map(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    // cycle minima appear in increasing order when scanning 1..n
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start - 1)]) continue;
        // walk the cycle beginning after its minimum so the minimum lands last
        std::vector<int> cycle;
        int j = sigma(start);
        while (j != start) {
            cycle.push_back(j);
            seen[static_cast<size_t>(j - 1)] = true;
            j = sigma(j);
        }
        cycle.push_back(start);
        seen[static_cast<size_t>(start - 1)] = true;
        out.insert(out.end(), cycle.begin(), cycle.end());
    }
    return Permutation(std::move(out));
}

Permutation pi_map(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 2) throw std::invalid_argument("pi_map needs n >= 2");
    std::vector<int> w(sigma.word().begin(), sigma.word().end() - 1);
    if (sigma(n) != n) {
        for (auto& v : w)
            if (v == n) v = sigma(n);
    }
    return Permutation(std::move(w));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be positive");
    if (n > cap) throw std::invalid_argument("for_each_permutation: enumeration cap exceeded");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

UnivariatePolynomial eulerian_poly_direct(int n, int cap) {
    std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(0));
    for_each_permutation(n, [&](const Permutation& s) { coeffs[static_cast<size_t>(stats(s).des)] += 1; }, cap);
    return UnivariatePolynomial(std::move(coeffs));
}

namespace {

Polynomial tops_to_monomial(const std::set<int>& tops) {
    Monomial m;
    for (int v : tops) m = m * Monomial::var(yvar(static_cast<uint32_t>(v)));
    return Polynomial::term(Rational(1), m);
}

}  // namespace

Polynomial descent_top_poly_direct(int n, int cap) {
    Polynomial acc;
    for_each_permutation(n, [&](const Permutation& s) { acc += tops_to_monomial(stats(s).descent_tops); }, cap);
    return acc;
}

Polynomial exceedance_top_poly_direct(int n, int cap) {
    Polynomial acc;
    for_each_permutation(
        n, [&](const Permutation& s) { acc += tops_to_monomial(stats(s).exceedance_tops); }, cap);
    return acc;
}

Polynomial min_descent_poly_direct(int n, MinStatistic stat, int cap) {
    Polynomial acc;
    for_each_permutation(
        n,
        [&](const Permutation& s) {
            const auto st = stats(s);
            const int minima = stat == MinStatistic::LeftToRight ? st.lr_minima : st.rl_minima;
            Monomial m = Monomial::var(alphavar(), static_cast<uint32_t>(minima));
            for (int v : st.descent_tops) m = m * Monomial::var(yvar(static_cast<uint32_t>(v)));
            acc += Polynomial::term(Rational(1), m);
        },
        cap);
    return acc;
}

Polynomial lrmin_descent_poly_direct(int n, int cap) {
    return min_descent_poly_direct(n, MinStatistic::LeftToRight, cap);
}

Polynomial cycle_exceedance_poly_direct(int n, int cap) {
    Polynomial acc;
    for_each_permutation(
        n,
        [&](const Permutation& s) {
            const auto st = stats(s);
            Monomial m = Monomial::var(alphavar(), static_cast<uint32_t>(st.cyc));
            for (int v : st.exceedance_tops) m = m * Monomial::var(yvar(static_cast<uint32_t>(v)));
            acc += Polynomial::term(Rational(1), m);
        },
        cap);
    return acc;
}

Polynomial shifted_descent_poly_direct(int n, int shift, int cap) {
    if (shift < 1) throw std::invalid_argument("shifted descent condition needs shift >= 1");
    Polynomial acc;
    for_each_permutation(
        n,
        [&](const Permutation& s) {
            Monomial m;
            for (int i = 1; i < n; ++i)
                if (s(i) > s(i + 1) + shift - 1) m = m * Monomial::var(yvar(static_cast<uint32_t>(s(i))));
            acc += Polynomial::term(Rational(1), m);
        },
        cap);
    return acc;
}

void for_each_multiset_permutation(const std::vector<int>& v,
                                   const std::function<void(const std::vector<int>&)>& fn,
                                   int cap) {
    if (v.empty()) throw std::invalid_argument("multiset permutations: empty content vector");
    int total = 0;
    for (int x : v) {
        if (x < 1) throw std::invalid_argument("multiset permutations: entries must be >= 1");
        total += x;
    }
    if (total > cap) throw std::invalid_argument("multiset permutations: enumeration cap exceeded");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(total));
    for (size_t letter = 0; letter < v.size(); ++letter)
        w.insert(w.end(), static_cast<size_t>(v[letter]), static_cast<int>(letter) + 1);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<std::vector<int>> multiset_permutations(const std::vector<int>& v, int cap) {
    std::vector<std::vector<int>> out;
    for_each_multiset_permutation(v, [&](const std::vector<int>& w) { out.push_back(w); }, cap);
    return out;
}

Polynomial multiset_descent_poly_direct(const std::vector<int>& v, int cap) {
    Polynomial acc;
    for_each_multiset_permutation(
        v,
        [&](const std::vector<int>& w) {
            Monomial m;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) m = m * Monomial::var(yvar(static_cast<uint32_t>(w[i])));
            acc += Polynomial::term(Rational(1), m);
        },
        cap);
    return acc;
}

TopCounts top_counts(int n, int cap) {
    TopCounts tc;
    tc.n = n;
    tc.single.assign(static_cast<size_t>(n), Integer(0));
    tc.pair.assign(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), Integer(0)));
    for_each_permutation(
        n,
        [&](const Permutation& s) {
            const auto tops = stats(s).descent_tops;
            for (int i : tops) {
                tc.single[static_cast<size_t>(i - 1)] += 1;
                for (int j : tops)
                    if (i < j) tc.pair[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] += 1;
            }
        },
        cap);
    return tc;
}

}  // namespace mcperm
