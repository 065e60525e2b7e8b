#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcperm/polynomial.hpp"
#include "mcperm/univariate.hpp"

namespace mcperm {

// u / gcd(u, u'), primitive with positive leading coefficient.
UnivariatePolynomial square_free_part(const UnivariatePolynomial& u);

// Yun decomposition: returns (factor, multiplicity) pairs with the factors
// square-free, pairwise coprime, and u = c * prod factor^multiplicity.
std::vector<std::pair<UnivariatePolynomial, int>> square_free_decomposition(
    const UnivariatePolynomial& u);

// Sturm chain of the square-free part: p0 square-free, p1 = p0', then
// negated remainders down to a nonzero constant.
std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& u);

// Distinct real roots, exact. Input must be nonzero.
int count_real_roots(const UnivariatePolynomial& u);

// Zero and constants count as real-rooted; otherwise every root of the
// square-free part must be real.
bool real_rooted(const UnivariatePolynomial& u);

// Sign behaviour of a polynomial over the whole real line.
enum class SignOnLine { Zero, NonNegative, NonPositive, Mixed };
SignOnLine sign_on_real_line(const UnivariatePolynomial& u);

// Classification of the proper-position relation between two real-rooted
// univariate polynomials. "HProperG" means g + t*h is stable, decided
// exactly through the sign of the Wronskian g'h - gh' on the real line.
enum class Interlacing { HProperG, GProperH, Both, Neither };
Interlacing interlace_check(const UnivariatePolynomial& g, const UnivariatePolynomial& h);
std::string to_string(Interlacing v);

struct LineWitness {
    std::vector<Rational> base;
    std::vector<Rational> direction;
    int trial = -1;
};

struct StabilityVerdict {
    enum class Kind { CertifiedRealRooted, PassedSampling, Refuted };
    Kind kind = Kind::PassedSampling;
    int trials = 0;
    uint64_t seed = 0;
    std::optional<LineWitness> witness;

    bool failed() const { return kind == Kind::Refuted; }
    std::string str() const;
};

struct SamplingParams {
    int trials = 64;
    uint64_t seed = 0;
    long coeff_bound = 100;
    long max_denominator = 16;
    int jobs = 1;
};

// Probabilistic falsifier for real stability: restricts p to random
// rational lines with positive direction and certifies each restriction by
// Sturm counts. Polynomials in at most one variable are decided exactly.
// A refutation carries a deterministic witness line.
StabilityVerdict stability_sample_test(const Polynomial& p, const SamplingParams& params = {});

// Exact nonvanishing probe at random upper half-plane rational points.
// Purely a falsifier; off the default verdict path.
struct HalfPlaneProbeResult {
    bool refuted = false;
    std::vector<Rational> witness_re, witness_im;
};
HalfPlaneProbeResult upper_halfplane_probe(const Polynomial& p, int trials, uint64_t seed,
                                           long coeff_bound = 10, long max_denominator = 8);

struct RayleighWitness {
    std::vector<Rational> point;  // indexed by p.variables() order
    Rational value;
};

struct RayleighResult {
    bool pass = true;
    int points = 0;
    uint64_t seed = 0;
    std::optional<RayleighWitness> witness;
};

// Checks dp/dv_i * dp/dv_j - p * d^2p/dv_i dv_j >= 0 at sampled rational
// points. Requires p multiaffine and i, j distinct variables of p.
RayleighResult rayleigh_check(const Polynomial& p, VariableId i, VariableId j, int points,
                              uint64_t seed, long coeff_bound = 100, long max_denominator = 16);

}  // namespace mcperm
