#include "mcperm/stability.hpp"

#include <algorithm>

#include "mcperm/rng.hpp"

namespace mcperm {

UnivariatePolynomial square_free_part(const UnivariatePolynomial& u) {
    if (u.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (u.is_constant()) return UnivariatePolynomial::constant(Rational(1));
    const UnivariatePolynomial g = gcd(u, u.derivative());
    auto [q, r] = u.divrem(g);
    if (!r.is_zero()) throw std::logic_error("square_free_part: gcd does not divide");
    return q.primitive();
}

std::vector<std::pair<UnivariatePolynomial, int>> square_free_decomposition(
    const UnivariatePolynomial& u) {
    if (u.is_zero()) throw std::invalid_argument("square_free_decomposition: zero polynomial");
    std::vector<std::pair<UnivariatePolynomial, int>> out;
    UnivariatePolynomial f = u.primitive();
    if (f.is_constant()) return out;
    // Yun's algorithm
    UnivariatePolynomial g = gcd(f, f.derivative());
    UnivariatePolynomial b = f.divrem(g).first;
    UnivariatePolynomial c = f.derivative().divrem(g).first;
    UnivariatePolynomial d = c - b.derivative();
    int mult = 1;
    while (!b.is_constant()) {
        UnivariatePolynomial p = gcd(b, d);
        if (p.degree() > 0) out.emplace_back(p.primitive(), mult);
        b = b.divrem(p).first;
        c = d.divrem(p).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

namespace {

// primitive() flips negative leading coefficients; Sturm chains may only
// be scaled by positive constants.
UnivariatePolynomial primitive_keep_sign(const UnivariatePolynomial& p) {
    if (p.is_zero()) return p;
    const UnivariatePolynomial q = p.primitive();
    return sgn(p.leading()) < 0 ? -q : q;
}

}  // namespace

std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& u) {
    std::vector<UnivariatePolynomial> chain;
    chain.push_back(square_free_part(u));
    if (chain[0].degree() < 1) return chain;
    chain.push_back(primitive_keep_sign(chain[0].derivative()));
    while (chain.back().degree() > 0) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        UnivariatePolynomial r = a.divrem(b).second;
        if (r.is_zero())
            throw std::logic_error("sturm_chain: unexpected common factor in square-free input");
        chain.push_back(primitive_keep_sign(-r));
    }
    return chain;
}

namespace {

// Sign variations of a Sturm chain at -infinity and +infinity.
int variations_at_infinity(const std::vector<UnivariatePolynomial>& chain, bool positive) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.leading());
        if (!positive && (p.degree() % 2 != 0)) s = -s;
        if (prev != 0 && s != 0 && s != prev) ++variations;
        if (s != 0) prev = s;
    }
    return variations;
}

}  // namespace

int count_real_roots(const UnivariatePolynomial& u) {
    if (u.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (u.is_constant()) return 0;
    const auto chain = sturm_chain(u);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

bool real_rooted(const UnivariatePolynomial& u) {
    if (u.is_zero() || u.is_constant()) return true;
    const UnivariatePolynomial s = square_free_part(u);
    return count_real_roots(s) == s.degree();
}

SignOnLine sign_on_real_line(const UnivariatePolynomial& u) {
    if (u.is_zero()) return SignOnLine::Zero;
    if (u.is_constant())
        return sgn(u.leading()) > 0 ? SignOnLine::NonNegative : SignOnLine::NonPositive;
    // Sign changes happen exactly at real roots of odd multiplicity.
    for (const auto& [factor, mult] : square_free_decomposition(u))
        if (mult % 2 == 1 && count_real_roots(factor) > 0) return SignOnLine::Mixed;
    // No sign change; the degree is even, so both tails share the sign of
    // the leading coefficient.
    return sgn(u.leading()) > 0 ? SignOnLine::NonNegative : SignOnLine::NonPositive;
}

Interlacing interlace_check(const UnivariatePolynomial& g, const UnivariatePolynomial& h) {
    if (g.is_zero() && h.is_zero())
        throw std::invalid_argument("interlace_check: both polynomials are zero");
    if (!real_rooted(g) || !real_rooted(h))
        throw std::invalid_argument("interlace_check: inputs must be real-rooted");
    if (g.is_zero() || h.is_zero()) return Interlacing::Both;
    // g + t*h is stable iff W = g'h - gh' is nonnegative on the real line
    // (Hermite-Biehler); the opposite sign gives the opposite position.
    const UnivariatePolynomial w = g.derivative() * h - g * h.derivative();
    switch (sign_on_real_line(w)) {
        case SignOnLine::Zero: return Interlacing::Both;
        case SignOnLine::NonNegative: return Interlacing::HProperG;
        case SignOnLine::NonPositive: return Interlacing::GProperH;
        case SignOnLine::Mixed: return Interlacing::Neither;
    }
    throw std::logic_error("unreachable");
}

std::string to_string(Interlacing v) {
    switch (v) {
        case Interlacing::HProperG: return "h-proper-g";
        case Interlacing::GProperH: return "g-proper-h";
        case Interlacing::Both: return "both";
        case Interlacing::Neither: return "neither";
    }
    return "?";
}

std::string StabilityVerdict::str() const {
    switch (kind) {
        case Kind::CertifiedRealRooted: return "certified-real-rooted";
        case Kind::PassedSampling: return "passed-sampling(" + std::to_string(trials) + ")";
        case Kind::Refuted: return "refuted(trial " + std::to_string(witness ? witness->trial : -1) + ")";
    }
    return "?";
}

StabilityVerdict stability_sample_test(const Polynomial& p, const SamplingParams& params) {
    if (params.trials < 1) throw std::invalid_argument("stability_sample_test: trials must be >= 1");
    StabilityVerdict verdict;
    verdict.seed = params.seed;
    const auto vars = p.variables();
    if (vars.size() <= 1) {
        // Exactly decidable: a univariate real polynomial is stable iff it
        // is identically zero or has only real roots.
        UnivariatePolynomial u = vars.empty() ? UnivariatePolynomial::constant(p.constant_value())
                                              : to_univariate(p, vars[0]);
        verdict.trials = 0;
        verdict.kind = real_rooted(u) ? StabilityVerdict::Kind::CertifiedRealRooted
                                      : StabilityVerdict::Kind::Refuted;
        return verdict;
    }
    verdict.trials = params.trials;
    for (int trial = 0; trial < params.trials; ++trial) {
        SplitMix64 rng = trial_rng(params.seed, static_cast<uint64_t>(trial));
        std::vector<Rational> base, dir;
        base.reserve(vars.size());
        dir.reserve(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) {
            base.push_back(random_rational(rng, params.coeff_bound, params.max_denominator));
            dir.push_back(random_positive_rational(rng, params.coeff_bound, params.max_denominator));
        }
        const UnivariatePolynomial restricted = p.restrict_line(base, dir);
        if (!real_rooted(restricted)) {
            verdict.kind = StabilityVerdict::Kind::Refuted;
            verdict.witness = LineWitness{std::move(base), std::move(dir), trial};
            return verdict;
        }
    }
    verdict.kind = StabilityVerdict::Kind::PassedSampling;
    return verdict;
}

namespace {

struct ComplexRational {
    Rational re, im;
    ComplexRational operator*(const ComplexRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

}  // namespace

HalfPlaneProbeResult upper_halfplane_probe(const Polynomial& p, int trials, uint64_t seed,
                                           long coeff_bound, long max_denominator) {
    HalfPlaneProbeResult result;
    const auto vars = p.variables();
    if (p.is_zero() || vars.empty()) return result;  // constants never vanish unless zero
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = trial_rng(seed, static_cast<uint64_t>(trial));
        std::vector<ComplexRational> point(vars.size());
        for (auto& w : point) {
            w.re = random_rational(rng, coeff_bound, max_denominator);
            w.im = random_positive_rational(rng, coeff_bound, max_denominator);
        }
        ComplexRational acc{Rational(0), Rational(0)};
        for (const auto& [mono, coeff] : p.terms()) {
            ComplexRational term{coeff, Rational(0)};
            for (const auto& [v, e] : mono.entries()) {
                const size_t pos = static_cast<size_t>(
                    std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
                for (uint32_t k = 0; k < e; ++k) term = term * point[pos];
            }
            acc += term;
        }
        if (acc.is_zero()) {
            result.refuted = true;
            for (const auto& w : point) {
                result.witness_re.push_back(w.re);
                result.witness_im.push_back(w.im);
            }
            return result;
        }
    }
    return result;
}

RayleighResult rayleigh_check(const Polynomial& p, VariableId i, VariableId j, int points,
                              uint64_t seed, long coeff_bound, long max_denominator) {
    if (!p.is_multiaffine()) throw std::invalid_argument("rayleigh_check: polynomial not multiaffine");
    if (i == j) throw std::invalid_argument("rayleigh_check: variables must differ");
    const auto vars = p.variables();
    auto has = [&](VariableId v) { return std::binary_search(vars.begin(), vars.end(), v); };
    if (!has(i) || !has(j))
        throw std::invalid_argument("rayleigh_check: variable does not occur in polynomial");
    RayleighResult result;
    result.points = points;
    result.seed = seed;
    const Polynomial pi = p.derivative(i);
    const Polynomial pj = p.derivative(j);
    const Polynomial pij = pi.derivative(j);
    const PointEvaluator ev_p(p, vars), ev_i(pi, vars), ev_j(pj, vars), ev_ij(pij, vars);
    std::vector<Rational> point(vars.size());
    for (int k = 0; k < points; ++k) {
        SplitMix64 rng = trial_rng(seed, static_cast<uint64_t>(k));
        for (auto& x : point) x = random_rational(rng, coeff_bound, max_denominator);
        Rational delta = ev_i.eval(point) * ev_j.eval(point) - ev_p.eval(point) * ev_ij.eval(point);
        if (sgn(delta) < 0) {
            result.pass = false;
            result.witness = RayleighWitness{point, std::move(delta)};
            return result;
        }
    }
    return result;
}

}  // namespace mcperm
