#pragma once

#include <Eigen/Dense>
#include <memory>
#include <utility>

#include "lwg/graph.hpp"

namespace lwg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Uniform normalized weights 1/m.
Vector uniform_weights(int m);

/// L_g x computed straight from the edge list in O(m).
Vector apply_laplacian(const Graph& g, const Vector& weights, const Vector& x);

struct SolveOptions {
    /// Dense symmetric factorization up to this many vertices, preconditioned
    /// conjugate gradients above it.
    int dense_threshold = 2000;
    double dense_tol = 1e-10;
    double iter_tol = 1e-8;
    int max_cg_iters = 0; // 0 = automatic
};

/// Factorization of M = L_g + (1/n) 11^T giving pseudo-inverse application:
/// for z with 1^T z = 0, M^{-1} z = L_g^+ z. Immutable after assembly;
/// concurrent solves are safe.
class LaplacianSystem {
  public:
    /// Requires g >= 0 with the positive-weight subgraph connected; throws
    /// std::invalid_argument otherwise, naming the offending component split.
    /// The graph is held by value; the system stays valid on its own.
    LaplacianSystem(Graph g, Vector weights, SolveOptions options = {});
    ~LaplacianSystem();
    LaplacianSystem(LaplacianSystem&&) noexcept;
    LaplacianSystem& operator=(LaplacianSystem&&) noexcept;

    const Graph& graph() const { return graph_; }
    const Vector& weights() const { return weights_; }
    int n() const { return graph_.num_vertices(); }
    int m() const { return graph_.num_edges(); }
    bool dense() const { return dense_; }

    /// L_g^+ z. The mean of z is projected out first (a warning counter is
    /// bumped when |mean| > 1e-9 ||z||).
    Vector pinv_apply(const Vector& z) const;

    /// b_uv^T L_g^+ b_uv, the effective resistance between u and v.
    double pinv_quad(int u, int v) const;

    /// R_l = b_l^T L^+ b_l for every edge.
    Vector edge_resistances() const;

    /// tau_l = g_l * b_l^T L^+ b_l. Sums to n-1 (Foster).
    Vector leverage_scores() const;

    /// ||L^+ b_l||^2 for every edge.
    Vector edge_sqnorms() const;

    double trace_pinv() const;   // Tr L^+ = Tr M^{-1} - 1
    double logdet_pinv() const;  // log det(L^+ + (1/n)11^T) = -log det M

    /// (lambda_2, lambda_n) of L_g: inverse iteration on M with deflation of
    /// the all-ones vector, and power iteration on L_g. Relative accuracy 1e-8.
    std::pair<double, double> eig_extremes() const;

    /// Dense M^{-1} = L^+ + (1/n)11^T (computed on first use; in iterative
    /// mode this solves n systems and is limited to moderate n).
    const Matrix& pinv_shifted() const;

    int mean_projection_warnings() const;

  private:
    struct Impl;
    Graph graph_;
    Vector weights_;
    SolveOptions options_;
    bool dense_ = true;
    std::unique_ptr<Impl> impl_;
};

} // namespace lwg
