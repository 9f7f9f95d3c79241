#pragma once

#include <cstdint>

#include "lwg/laplacian.hpp"

namespace lwg {

struct ResistanceProfile {
    Vector edge_resistances; ///< R_l per edge
    double kirchhoff = 0.0;  ///< n * Tr L^+
};

/// R_ij(g) = b_ij^T L_g^+ b_ij.
double effective_resistance(const LaplacianSystem& sys, int i, int j);

/// Kirchhoff index n * Tr L_g^+ (equal to the sum of pairwise effective
/// resistances).
double kirchhoff(const LaplacianSystem& sys);

/// Pairwise-sum evaluation of the Kirchhoff index, O(n^2); the cross-check
/// route against the trace identity.
double kirchhoff_pairwise(const LaplacianSystem& sys);

ResistanceProfile resistance_profile(const LaplacianSystem& sys);

/// (-d LD_G / d g_l)_l. Equals edge_resistances() entry for entry; kept as a
/// named operation because it is the gradient of the logdet objective.
Vector logdet_gradient(const LaplacianSystem& sys);

/// dK/dg_l = -n ||L^+ b_l||^2 for every edge.
Vector kirchhoff_gradient(const LaplacianSystem& sys);

struct MetricCheckReport {
    int samples = 0;
    double max_violation = 0.0; ///< max over sampled triples of R_ij - R_ik - R_kj
    bool ok = true;             ///< no violation beyond 1e-9
};

/// Samples random triples and checks the effective-resistance triangle
/// inequality.
MetricCheckReport metric_check(const LaplacianSystem& sys, int samples, std::uint64_t seed);

} // namespace lwg
