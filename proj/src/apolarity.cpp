#include "mcperm/apolarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcperm/numeric_roots.hpp"
#include "mcperm/rng.hpp"

namespace mcperm {

UnivariatePolynomial RootedPolynomial::expand() const {
    UnivariatePolynomial p = UnivariatePolynomial::constant(lead);
    for (const auto& r : roots) p = p * UnivariatePolynomial({-r, Rational(1)});
    return p;
}

MobiusMap::MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (sgn(determinant()) == 0) throw std::invalid_argument("Mobius map must have ad - bc != 0");
}

Rational MobiusMap::apply(const Rational& x) const {
    Rational den = c * x + d;
    if (sgn(den) == 0) throw std::invalid_argument("Mobius map applied at its pole");
    return (a * x + b) / den;
}

std::vector<Rational> binomial_normalized_coeffs(const UnivariatePolynomial& f, int n) {
    if (f.degree() > n) throw std::invalid_argument("binomial coefficients: degree exceeds n");
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        a[static_cast<size_t>(k)] =
            f.coeff(static_cast<size_t>(k)) /
            Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    return a;
}

UnivariatePolynomial from_binomial_coeffs(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("binomial coefficients: empty");
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<Rational> c(a.size());
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] =
            a[static_cast<size_t>(k)] *
            Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    return UnivariatePolynomial(std::move(c));
}

Rational apolarity_form(const UnivariatePolynomial& f, const UnivariatePolynomial& g) {
    if (f.degree() != g.degree() || f.degree() < 0)
        throw std::invalid_argument("apolarity form: degrees must match and be nonnegative");
    const int n = f.degree();
    const auto a = binomial_normalized_coeffs(f, n);
    const auto b = binomial_normalized_coeffs(g, n);
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(static_cast<unsigned long>(n),
                                          static_cast<unsigned long>(k))) *
                        a[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
        if ((n - k) % 2 != 0) acc -= term;
        else acc += term;
    }
    return acc;
}

UnivariatePolynomial apolar_complement(const UnivariatePolynomial& g, int n,
                                       const std::vector<Rational>& free_params) {
    if (n < 1) throw std::invalid_argument("apolar complement: need degree >= 1");
    if (g.degree() != n)
        throw std::invalid_argument("apolar complement: g must have degree n (b_n = 0 otherwise)");
    if (static_cast<int>(free_params.size()) != n - 1)
        throw std::invalid_argument("apolar complement: expected n-1 free parameters");
    const auto b = binomial_normalized_coeffs(g, n);
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(0));
    a[static_cast<size_t>(n)] = Rational(1);
    for (int k = 1; k < n; ++k) a[static_cast<size_t>(k)] = free_params[static_cast<size_t>(k - 1)];
    // Solve sum_k C(n,k) (-1)^(n-k) a_k b_{n-k} = 0 for a_0; its
    // coefficient is (-1)^n b_n which is nonzero by the degree check.
    Rational rest(0);
    for (int k = 1; k <= n; ++k) {
        Rational term = Rational(binomial(static_cast<unsigned long>(n),
                                          static_cast<unsigned long>(k))) *
                        a[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
        if ((n - k) % 2 != 0) rest -= term;
        else rest += term;
    }
    Rational a0_coeff = b[static_cast<size_t>(n)];
    if (n % 2 != 0) a0_coeff = -a0_coeff;
    a[0] = -rest / a0_coeff;
    return from_binomial_coeffs(a);
}

UnivariatePolynomial mobius_transform(const UnivariatePolynomial& f, const MobiusMap& phi) {
    const int n = f.degree();
    if (n < 0) throw std::invalid_argument("mobius transform: zero polynomial");
    // phi^{-1}(t) = (d t - b) / (-c t + a); the transform is
    // sum_k c_k (d t - b)^k (-c t + a)^(n-k).
    const UnivariatePolynomial num({-phi.b, phi.d});
    const UnivariatePolynomial den({phi.a, -phi.c});
    std::vector<UnivariatePolynomial> num_pow(static_cast<size_t>(n) + 1),
        den_pow(static_cast<size_t>(n) + 1);
    num_pow[0] = den_pow[0] = UnivariatePolynomial::constant(Rational(1));
    for (int k = 1; k <= n; ++k) {
        num_pow[static_cast<size_t>(k)] = num_pow[static_cast<size_t>(k - 1)] * num;
        den_pow[static_cast<size_t>(k)] = den_pow[static_cast<size_t>(k - 1)] * den;
    }
    UnivariatePolynomial out;
    for (int k = 0; k <= n; ++k)
        out = out + num_pow[static_cast<size_t>(k)] * den_pow[static_cast<size_t>(n - k)] *
                        f.coeff(static_cast<size_t>(k));
    if (out.degree() != n)
        throw std::invalid_argument("mobius transform: degree drops (f vanishes at phi^{-1}(inf))");
    return out;
}

GraceDemoReport grace_demo(const std::vector<std::complex<double>>& g_roots,
                           const GraceDemoParams& params) {
    if (g_roots.empty()) throw std::invalid_argument("grace demo: g needs at least one root");
    for (const auto& w : g_roots)
        if (std::abs(w - params.center) > params.radius + params.tol)
            throw std::invalid_argument("grace demo: a root of g lies outside the disk");
    const int n = static_cast<int>(g_roots.size());

    // binomial-normalized coefficients of the monic g
    std::vector<std::complex<double>> gc{1.0};
    for (const auto& w : g_roots) {
        std::vector<std::complex<double>> next(gc.size() + 1, 0.0);
        for (size_t i = 0; i < gc.size(); ++i) {
            next[i + 1] += gc[i];
            next[i] -= gc[i] * w;
        }
        gc = std::move(next);
    }
    std::vector<std::complex<double>> b(gc.size());
    for (int k = 0; k <= n; ++k)
        b[static_cast<size_t>(k)] =
            gc[static_cast<size_t>(k)] /
            binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_d();

    GraceDemoReport report;
    report.trials = params.trials;
    report.seed = params.seed;
    for (int trial = 0; trial < params.trials; ++trial) {
        SplitMix64 rng = trial_rng(params.seed, static_cast<uint64_t>(trial));
        std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1, 0.0);
        a[static_cast<size_t>(n)] = 1.0;
        for (int k = 1; k < n; ++k)
            a[static_cast<size_t>(k)] = {static_cast<double>(rng.range(-100, 100)) / 16.0,
                                         static_cast<double>(rng.range(-100, 100)) / 16.0};
        std::complex<double> rest = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double sign = ((n - k) % 2 != 0) ? -1.0 : 1.0;
            rest += sign *
                    binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_d() *
                    a[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
        }
        const double a0_sign = (n % 2 != 0) ? -1.0 : 1.0;
        a[0] = -rest / (a0_sign * b[static_cast<size_t>(n)]);

        std::vector<std::complex<double>> f_coeffs(a.size());
        for (int k = 0; k <= n; ++k)
            f_coeffs[static_cast<size_t>(k)] =
                a[static_cast<size_t>(k)] *
                binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_d();

        const auto roots = polynomial_roots(f_coeffs);
        if (!roots) {
            ++report.skipped;
            continue;
        }
        double best = std::abs((*roots)[0] - params.center);
        for (const auto& r : *roots) best = std::min(best, std::abs(r - params.center));
        const double excess = best - params.radius;
        report.max_distance_excess = std::max(report.max_distance_excess, excess);
        if (excess > params.tol) ++report.violations;
    }
    return report;
}

}  // namespace mcperm
