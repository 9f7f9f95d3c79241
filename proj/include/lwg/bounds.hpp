#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lwg/laplacian.hpp"
#include "lwg/lewis.hpp"

namespace lwg {

/// AM-GM bound on the approximation ratio: 2/(n-1)^2 * Tr L^+ at the given
/// system (intended at g_lw). Always >= 1 and <= diameter.
double alpha1(const LaplacianSystem& sys);

/// Duality-gap bound: max_l ||L^+ b_l||^2 / Tr L^+. Equals the infinity norm
/// of -grad log alpha1 and is <= the condition number of L.
double alpha2(const LaplacianSystem& sys);

struct GradientIdentityReport {
    double alpha2_value = 0.0;     ///< closed form
    double fd_inf_norm = 0.0;      ///< ||-grad log alpha1||_inf by central differences
    double rel_err = 0.0;
    std::vector<int> skipped;      ///< coordinates with g_l too small to probe
};

/// Checks alpha2 == ||-grad log alpha1||_inf by central finite differences
/// with step h (re-assembling the system per perturbation).
GradientIdentityReport alpha2_gradient_identity(const LaplacianSystem& sys, double h = 1e-5);

struct MoharBounds {
    double bound_pairwise = 0.0; ///< 2 / (n * Rtilde_max)
    double bound_diam = 0.0;     ///< 2 / (n * D * R_max)
    double bound_sum = 0.0;      ///< 4 / (n * sum_l R_l)
    double rtilde_max = 0.0;     ///< max pairwise effective resistance
    double r_max = 0.0;          ///< max edge effective resistance
    double sum_r = 0.0;
    int diameter = 0;
    bool exact_pairwise = true;  ///< exhaustive Rtilde_max (n <= 500), else sampled
};

/// Weighted spectral-gap lower bounds; rtilde_max is exact up to n = 500 and
/// otherwise taken over sampled pairs plus BFS-peripheral pairs (in which
/// case bound_pairwise is only reported, not asserted).
MoharBounds mohar_bounds(const LaplacianSystem& sys, std::uint64_t seed = 1);

struct SevDiagnostics {
    double value = 0.0;            ///< Tr exp(L^+)
    Vector gradient;               ///< -Tr[e^{L+} L+ b_l b_l^T L+] per edge
    Vector optimality_residuals;   ///< Tr[e^{L+} L+ (I - b_l b_l^T L+)]
    double grad_dot_g = 0.0;       ///< grad(f)^T g, equals -Tr[e^{L+} L+]
    double trace_exp_pinv_pinv = 0.0; ///< Tr[e^{L+} L+]
};

/// Softmax-eigenvalue diagnostics by dense eigen-decomposition; n <= 400.
SevDiagnostics sev_diagnostics(const LaplacianSystem& sys);

/// Tr[e^{L_lw^+} L_lw^+ (I - L_uni L_lw^+)]; nonnegativity certifies that the
/// Lewis reweighting does not increase Tr exp(L^+) against uniform weights.
double sev_lw_vs_uniform(const LaplacianSystem& lw_sys);

struct BoundsReport {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha_min = 0.0;
    int diameter = 0;
    double kappa = 0.0; ///< condition number lambda_n / lambda_2 of L_lw
    MoharBounds mohar;
    double lambda2 = 0.0;
    double lambda_n = 0.0;
    // metadata
    int n = 0, m = 0;
    double eps = 0.0;
    int lewis_iterations = 0;
    double lewis_residual = 0.0;
    bool lewis_converged = false;
};

/// Full certificate pipeline: Lewis weights at eps, assemble, every bound.
BoundsReport bounds_report(const Graph& g, double eps, const LewisOptions& options = {});

/// JSON serialization with the exact field names of the report (schema 1).
std::string bounds_report_json(const BoundsReport& report);
/// Single-row CSV (with header) carrying the same fields at full precision.
std::string bounds_report_csv(const BoundsReport& report);
BoundsReport bounds_report_from_json(const std::string& text);

} // namespace lwg
