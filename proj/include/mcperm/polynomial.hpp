#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcperm/rational.hpp"
#include "mcperm/univariate.hpp"
#include "mcperm/variable.hpp"

namespace mcperm {

// Power product with strictly positive exponents; the empty product is 1.
class Monomial {
  public:
    using Entry = std::pair<VariableId, uint32_t>;

    Monomial() = default;

    static Monomial var(VariableId v, uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.entries_.emplace_back(v, exp);
        return m;
    }

    bool is_one() const { return entries_.empty(); }
    unsigned total_degree() const;
    uint32_t exponent(VariableId v) const;
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& o) const;
    // Divides out v^exponent(v); used for coefficient extraction.
    Monomial without(VariableId v) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

    // Graded lexicographic: higher total degree first, ties broken by the
    // earliest variable (namespace-major, index-minor) with the larger
    // exponent. Returns <0, 0, >0.
    static int cmp(const Monomial& a, const Monomial& b);

    std::string str() const;

  private:
    std::vector<Entry> entries_;  // sorted by VariableId, exps >= 1
};

struct MonomialDescendingOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over Rational. Terms are kept in
// descending canonical order with no zero coefficients, so equality is
// structural and printing is deterministic.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialDescendingOrder>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial variable(VariableId v);
    static Polynomial term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent); total value only meaningful on constants.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const;
    unsigned degree_in(VariableId v) const;
    bool is_multiaffine() const;
    std::vector<VariableId> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial derivative(VariableId v) const;

    // Simultaneous substitution; unlisted variables are untouched.
    Polynomial substitute(const std::map<VariableId, Polynomial>& bindings) const;
    Polynomial substitute(VariableId v, const Polynomial& image) const;

    // All variables must be bound.
    Rational evaluate(const std::map<VariableId, Rational>& point) const;

    // Replace every variable in `vars` by `target`.
    Polynomial diagonalize(const std::set<VariableId>& vars, VariableId target) const;
    Polynomial diagonalize_all(VariableId target) const;

    // Coefficient of v^power as a polynomial in the remaining variables.
    Polynomial coefficient_in(VariableId v, uint32_t power) const;

    // Exact restriction t -> p(a + t*b) along a line through `base` with
    // direction `dir`; vectors are indexed by variables() order. Every
    // direction entry must be strictly positive.
    UnivariatePolynomial restrict_line(const std::vector<Rational>& base,
                                       const std::vector<Rational>& dir) const;

    // c*p + multiplier * sum over diff_vars of dp/dv.
    Polynomial apply_recurrence_operator(const Rational& c, VariableId multiplier,
                                         const std::set<VariableId>& diff_vars) const;

    std::string str() const;
    static Polynomial parse(std::string_view text);

  private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

// Converts a polynomial whose only variable is `v` (or a constant).
UnivariatePolynomial to_univariate(const Polynomial& p, VariableId v);
Polynomial from_univariate(const UnivariatePolynomial& u, VariableId v);

// Term-table evaluator for repeated evaluation of one polynomial at many
// points; variables are resolved to positions once at construction. The
// order vector must be sorted and cover every variable of p.
class PointEvaluator {
  public:
    PointEvaluator(const Polynomial& p, const std::vector<VariableId>& order);
    // point.size() must equal the order passed at construction.
    Rational eval(const std::vector<Rational>& point) const;

  private:
    struct Term {
        Rational coeff;
        std::vector<std::pair<size_t, uint32_t>> factors;  // (position, exponent)
    };
    std::vector<Term> terms_;
    size_t arity_;
};

}  // namespace mcperm
