#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace mcperm {

// Roots of c[0] + c[1] t + ... + c[n] t^n via companion-matrix eigenvalues
// followed by Newton refinement. Returns nullopt when refinement fails to
// converge; callers report the trial rather than guessing.
std::optional<std::vector<std::complex<double>>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs);

}  // namespace mcperm
