#include "mcperm/numeric_roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace mcperm {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            const std::complex<double>& x) {
    std::complex<double> acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

}  // namespace

std::optional<std::vector<std::complex<double>>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) return std::nullopt;  // constants have no roots to locate
    const int n = static_cast<int>(c.size()) - 1;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<size_t>(i)] / c.back();

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) return std::nullopt;

    // derivative coefficients for Newton refinement
    std::vector<std::complex<double>> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);

    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));

    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::complex<double> r = solver.eigenvalues()(i);
        for (int step = 0; step < 8; ++step) {
            const std::complex<double> fx = horner(c, r);
            const std::complex<double> dfx = horner(d, r);
            if (std::abs(dfx) < 1e-300) break;
            const std::complex<double> delta = fx / dfx;
            r -= delta;
            if (std::abs(delta) < 1e-14 * (1.0 + std::abs(r))) break;
        }
        const double magnitude = std::max(1.0, std::pow(std::abs(r), n));
        if (std::abs(horner(c, r)) > 1e-7 * scale * magnitude) return std::nullopt;
        roots.push_back(r);
    }
    return roots;
}

}  // namespace mcperm
