#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mcperm/rational.hpp"
#include "mcperm/univariate.hpp"

namespace mcperm {

// Exact polynomial with known rational roots: lead * prod (t - root).
struct RootedPolynomial {
    Rational lead = Rational(1);
    std::vector<Rational> roots;

    UnivariatePolynomial expand() const;
};

// t -> (a t + b) / (c t + d), ad - bc != 0.
struct MobiusMap {
    Rational a, b, c, d;

    MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_);
    static MobiusMap identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
    Rational determinant() const { return a * d - b * c; }
    // Image of a finite point; the argument must avoid the pole -d/c.
    Rational apply(const Rational& x) const;
};

// Coefficients a_k with f = sum C(n,k) a_k t^k; requires deg f <= n.
std::vector<Rational> binomial_normalized_coeffs(const UnivariatePolynomial& f, int n);
UnivariatePolynomial from_binomial_coeffs(const std::vector<Rational>& a);

// sum_k C(n,k) (-1)^(n-k) a_k b_{n-k} over the binomial-normalized
// coefficients. Zero exactly when f and g are apolar (their root-difference
// matrix has permanent zero).
Rational apolarity_form(const UnivariatePolynomial& f, const UnivariatePolynomial& g);

// Degree-n monic polynomial apolar to g: a_n = 1, a_1..a_{n-1} free, a_0
// solved from the single linear apolarity constraint. Requires deg g = n.
UnivariatePolynomial apolar_complement(const UnivariatePolynomial& g, int n,
                                       const std::vector<Rational>& free_params);

// (gamma t + delta)^n f(phi^{-1}(t)) with n = deg f; rejects transforms
// that drop the degree (f vanishing at the relevant point of phi).
UnivariatePolynomial mobius_transform(const UnivariatePolynomial& f, const MobiusMap& phi);

// Root-location demonstration: every apolar partner of a polynomial with
// all roots in a disk has a root in that disk. Floating point lives only
// here.
struct GraceDemoParams {
    std::complex<double> center{0.0, 0.0};
    double radius = 1.0;
    int trials = 100;
    uint64_t seed = 0;
    double tol = 1e-8;
};

struct GraceDemoReport {
    int trials = 0;
    int violations = 0;
    int skipped = 0;  // root-finder non-convergence, reported not hidden
    double max_distance_excess = 0.0;
    uint64_t seed = 0;
};

GraceDemoReport grace_demo(const std::vector<std::complex<double>>& g_roots,
                           const GraceDemoParams& params);

}  // namespace mcperm
