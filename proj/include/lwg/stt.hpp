#pragma once

#include <string>
#include <vector>

#include "lwg/laplacian.hpp"
#include "lwg/lewis.hpp"

namespace lwg {

/// Spectral thinness: the smallest gamma with L_{T,w} <= gamma * L_G, i.e.
/// the top generalized eigenvalue of (L_{T,w}, L_G) on the image of L_G.
/// Power iteration on L_G^+ L_{T,w} restricted to the mean-free subspace,
/// relative tolerance 1e-8. `tree_edges` are indices into g.edges() and must
/// span g.
double thinness(const Graph& g, const std::vector<int>& tree_edges, const Vector& tree_weights,
                const SolveOptions& solve = {});

struct ThinTreeReport {
    std::vector<int> tree_edges;   ///< n-1 edge indices into the host graph
    double tree_weight = 0.0;      ///< uniform weight (n-1)/m on the tree
    double gamma = 0.0;            ///< spectral thinness of the weighted tree
    double scale = 0.0;            ///< reference scale (n-1)/m
    double ratio = 0.0;            ///< gamma / scale
    double lewis_residual = 0.0;
};

/// Lewis-weighted candidate tree: maximum spanning tree under w_inf, uniform
/// weights (n-1)/m, measured (not guaranteed) thinness ratio.
ThinTreeReport lw_thin_tree(const Graph& g, double eps, const LewisOptions& options = {});

std::string thin_tree_report_json(const ThinTreeReport& report);

} // namespace lwg
