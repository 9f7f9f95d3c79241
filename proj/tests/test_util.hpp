#pragma once

// Test-only oracles, independent of the library's solver paths: dense
// pseudo-inverse via eigendecomposition, brute-force quantities, and random
// instance generators.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <random>
#include <vector>

#include "lwg/graph.hpp"
#include "lwg/laplacian.hpp"

namespace testutil {

using lwg::Graph;
using lwg::Matrix;
using lwg::Vector;

inline Matrix dense_laplacian(const Graph& g, const Vector& w) {
    Matrix L = Matrix::Zero(g.num_vertices(), g.num_vertices());
    for (int l = 0; l < g.num_edges(); ++l) {
        const auto& e = g.edge(l);
        L(e.u, e.u) += w[l];
        L(e.v, e.v) += w[l];
        L(e.u, e.v) -= w[l];
        L(e.v, e.u) -= w[l];
    }
    return L;
}

/// Moore-Penrose pseudo-inverse through a full eigendecomposition; this is
/// the reference route, independent of the rank-one-shift factorization.
inline Matrix pinv_eig(const Matrix& sym, double cutoff = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    Vector lam = es.eigenvalues();
    Matrix V = es.eigenvectors();
    Vector inv = Vector::Zero(lam.size());
    const double scale = lam.cwiseAbs().maxCoeff();
    for (int i = 0; i < lam.size(); ++i)
        if (std::abs(lam[i]) > cutoff * scale) inv[i] = 1.0 / lam[i];
    return V * inv.asDiagonal() * V.transpose();
}

inline Matrix pinv_laplacian(const Graph& g, const Vector& w) {
    return pinv_eig(dense_laplacian(g, w));
}

inline double resistance_oracle(const Graph& g, const Vector& w, int i, int j) {
    Matrix P = pinv_laplacian(g, w);
    return P(i, i) + P(j, j) - 2.0 * P(i, j);
}

/// Central finite difference of f along coordinate l.
template <typename F>
double central_diff(F&& f, const Vector& x, int l, double h) {
    Vector plus = x, minus = x;
    plus[l] += h;
    minus[l] -= h;
    return (f(plus) - f(minus)) / (2.0 * h);
}

/// Connected Erdos-Renyi-ish graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(int n, double extra_edge_prob, std::mt19937_64& rng) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> anc(0, v - 1);
        pairs.emplace_back(anc(rng), v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < extra_edge_prob) pairs.emplace_back(i, j);
    return lwg::build_graph(pairs);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    return random_connected_graph(n, 0.0, rng);
}

inline Vector random_positive_weights(int m, std::mt19937_64& rng, double lo = 0.1,
                                      double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vector w(m);
    for (int l = 0; l < m; ++l) w[l] = dist(rng);
    return w;
}

inline Vector random_simplex_weights(int m, std::mt19937_64& rng) {
    Vector w = random_positive_weights(m, rng);
    return w / w.sum();
}

} // namespace testutil
