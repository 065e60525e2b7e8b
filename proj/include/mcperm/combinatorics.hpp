#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mcperm/polynomial.hpp"
#include "mcperm/univariate.hpp"

namespace mcperm {

// One-line word sigma(1..n); values are 1-based.
class Permutation {
  public:
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation from_digits(const std::string& digits);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& word() const { return word_; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    std::string str() const;

  private:
    std::vector<int> word_;
};

struct PermutationStats {
    int exc = 0;            // #{i : sigma(i) > i}
    int des = 0;            // #{i : sigma(i) > sigma(i+1)}
    int cyc = 0;            // cycles
    int lr_minima = 0;      // values smaller than everything to their left
    int rl_minima = 0;      // values smaller than everything to their right
    std::set<int> descent_tops;     // values sigma(i) with sigma(i) > sigma(i+1)
    std::set<int> exceedance_tops;  // values sigma(i) with sigma(i) > i
};

PermutationStats stats(const Permutation& sigma);

// Writes each cycle with its smallest element last, lists cycles by
// increasing smallest element, and erases the parentheses. Cycle ends
// become the right-to-left minima of the image word.
Permutation riordan_linear_map(const Permutation& sigma);

// S_n -> S_{n-1}: overwrite the position of the largest value with the
// last letter, unless the largest value is last, in which case drop it.
Permutation pi_map(const Permutation& sigma);

inline constexpr int kFactorialEnumerationCap = 9;

// Streams S_n in lexicographic order. Throws above the enumeration cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int cap = kFactorialEnumerationCap);

// Generating polynomial of descents over S_n (equidistributed with
// exceedances).
UnivariatePolynomial eulerian_poly_direct(int n, int cap = kFactorialEnumerationCap);

// Sum over S_n of prod over descent tops of y_{sigma(i)}.
Polynomial descent_top_poly_direct(int n, int cap = kFactorialEnumerationCap);
// Sum over S_n of prod over exceedance tops of y_{sigma(i)}.
Polynomial exceedance_top_poly_direct(int n, int cap = kFactorialEnumerationCap);

enum class MinStatistic { LeftToRight, RightToLeft };

// Sum over S_n of alpha^(minima count) * prod over descent tops of y.
// The cycle-counting permanent identity matches the RightToLeft variant.
Polynomial min_descent_poly_direct(int n, MinStatistic stat, int cap = kFactorialEnumerationCap);
Polynomial lrmin_descent_poly_direct(int n, int cap = kFactorialEnumerationCap);
// Sum over S_n of alpha^cyc * prod over exceedance tops of y.
Polynomial cycle_exceedance_poly_direct(int n, int cap = kFactorialEnumerationCap);

// Descent condition relaxed to sigma(i) > sigma(i+1) + j - 1; j = 1 is the
// plain descent-top polynomial.
Polynomial shifted_descent_poly_direct(int n, int shift, int cap = kFactorialEnumerationCap);

// All distinct words with content v (v_i copies of letter i), lex order.
void for_each_multiset_permutation(const std::vector<int>& v,
                                   const std::function<void(const std::vector<int>&)>& fn,
                                   int cap = kFactorialEnumerationCap);
std::vector<std::vector<int>> multiset_permutations(const std::vector<int>& v,
                                                    int cap = kFactorialEnumerationCap);
// Sum over multiset words of prod over descents of y_{sigma(i)}.
Polynomial multiset_descent_poly_direct(const std::vector<int>& v,
                                        int cap = kFactorialEnumerationCap);

// Top(i; n) and Top(i, j; n): permutations with the given value(s) as
// descent tops. Indexed 1..n; Top(1; n) = 0.
struct TopCounts {
    int n = 0;
    std::vector<Integer> single;             // single[i-1] = Top(i; n)
    std::vector<std::vector<Integer>> pair;  // pair[i-1][j-1] = Top(i, j; n), i < j
};

TopCounts top_counts(int n, int cap = kFactorialEnumerationCap);

}  // namespace mcperm
