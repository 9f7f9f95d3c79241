#pragma once

#include "lwg/laplacian.hpp"

namespace lwg {

struct LewisOptions {
    /// Iteration budget T = ceil(iter_constant / eps * log(max(m/n, 2))).
    double iter_constant = 4.0;
    bool early_stop = true;
    SolveOptions solve;
};

struct LewisResult {
    Vector w_inf;    ///< unnormalized weights, 0 < w <= 1, sum = n-1
    Vector g_lw;     ///< w_inf / (n-1), normalized to the simplex
    int iterations = 0;
    double residual = 0.0; ///< max_l |tau_l(W^{1/2}B^T)/w_l - 1| of the returned w
    bool converged = false;
    int floor_hits = 0;    ///< iterate entries clamped at the positivity floor
};

/// l-infinity Lewis weights of the edge-incidence matrix via the averaged
/// fixed-point iteration: w^(1) = (n-1)/m, w^(t+1) = tau(w^(t)), output the
/// running average. Stops early once the averaged iterate certifies residual
/// <= eps; a result with residual > eps after the full budget is returned
/// flagged non-converged.
LewisResult lewis_weights(const Graph& g, double eps, const LewisOptions& options = {});

/// max_l |tau_l(W^{1/2}B^T)/w_l - 1| for a positive weight vector.
double fixed_point_residual(const Graph& g, const Vector& w, const SolveOptions& solve = {});

} // namespace lwg
