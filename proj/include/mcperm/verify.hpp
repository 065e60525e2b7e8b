#pragma once

#include <cstdint>
#include <vector>

#include "mcperm/matrices.hpp"
#include "mcperm/report.hpp"
#include "mcperm/stability.hpp"

namespace mcperm {

struct VerifyOptions {
    uint64_t seed = 0;
    int trials = 64;
    int jobs = 1;
    int rayleigh_points = 1000;
};

// ---- per-instance identity checks -----------------------------------------

// per(B(A)) = k x_n per(B(A deg)) + x_n y_n d per(B(A deg)) for square A,
// dualizing first when the corner entry is 1.
SuiteReport verify_recurrence(const FerrersMatrix& a);
// Cycle-weighted version with symbolic alpha: the constant k becomes
// (alpha + k - 1).
SuiteReport verify_alpha_recurrence(const FerrersMatrix& a);
// per_k(B(A dual; x; y)) = per_k(B(A; y; x)) for all k; alpha variant when
// square.
SuiteReport verify_duality(const FerrersMatrix& a);
// per(z_j + a_ij) = z_1...z_n per(a_ij y_j + 1 - a_ij) with
// y_j = (z_j + 1)/z_j, cleared of denominators.
SuiteReport verify_z_to_y(const FerrersMatrix& a);
// Real-rootedness (diagonalized, exact) + line sampling + Rayleigh pairs.
SuiteReport verify_mmcpc(const MonotoneColumnMatrix& a, const VerifyOptions& opt = {});
// Padding and coefficient-extraction identities for rectangular shapes,
// plus sampling stability of the k-permanents.
SuiteReport verify_k_identities(const FerrersMatrix& a, const VerifyOptions& opt = {});
SuiteReport verify_k_identities(const MonotoneColumnMatrix& a, const VerifyOptions& opt = {});
// per(B(E_n; 1; y)) against direct enumeration (descent and exceedance
// forms), Eulerian equidistribution, cycle/alpha refinement.
SuiteReport verify_eulerian(int n, const VerifyOptions& opt = {});
// Multiset version with the variable fusion Y(v) and the 1/prod v_i! scale.
SuiteReport verify_multiset_eulerian(const std::vector<int>& v, const VerifyOptions& opt = {});
// Top(i;n) Top(j;n) >= n! Top(i,j;n) for 2 <= i < j <= n.
SuiteReport verify_top_inequality(int n);
// Column negative association, log-submodularity, the column-sum bound and
// threshold-family negative association, all exact.
SuiteReport verify_inequalities(const MonotoneColumnMatrix& a, const VerifyOptions& opt = {});

// ---- corpus drivers --------------------------------------------------------

SuiteReport run_recurrence_suite(int n, const VerifyOptions& opt = {});
SuiteReport run_alpha_recurrence_suite(int n, const VerifyOptions& opt = {});
SuiteReport run_duality_suite(int max_mn, const VerifyOptions& opt = {});
SuiteReport run_z_to_y_suite(int n, const VerifyOptions& opt = {});
// Exact univariate certificates over all n x n Ferrers shapes plus seeded
// random integer monotone matrices.
SuiteReport run_mcpc_suite(int n, int random_count, const VerifyOptions& opt = {});
SuiteReport run_mmcpc_suite(int n, int random_count, const VerifyOptions& opt = {});
SuiteReport run_k_identities_suite(int max_mn, const VerifyOptions& opt = {});
SuiteReport run_eulerian_suite(int max_n, const VerifyOptions& opt = {});
SuiteReport run_multiset_eulerian_suite(int max_total, const VerifyOptions& opt = {});
SuiteReport run_top_inequality_suite(int max_n);
SuiteReport run_inequalities_suite(int pairwise_count, int submodular_count, int bound_count,
                                   int negassoc_count, const VerifyOptions& opt = {});
SuiteReport run_apolarity_suite(int corpus_size, const VerifyOptions& opt = {});
SuiteReport run_engine_crossvalidation_suite(int symbolic_count, int numeric_count,
                                             const VerifyOptions& opt = {});

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt = {});

}  // namespace mcperm
