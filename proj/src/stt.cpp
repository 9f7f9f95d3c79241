#include "lwg/stt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace lwg {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

Vector apply_tree_laplacian(const Graph& g, const std::vector<int>& tree_edges,
                            const Vector& w, const Vector& x) {
    Vector y = Vector::Zero(x.size());
    for (std::size_t i = 0; i < tree_edges.size(); ++i) {
        const auto& e = g.edge(tree_edges[i]);
        const double f = w[i] * (x[e.u] - x[e.v]);
        y[e.u] += f;
        y[e.v] -= f;
    }
    return y;
}

} // namespace

double thinness(const Graph& g, const std::vector<int>& tree_edges, const Vector& tree_weights,
                const SolveOptions& solve) {
    const int n = g.num_vertices();
    if (static_cast<int>(tree_edges.size()) != n - 1)
        throw std::invalid_argument("thinness: tree must have n-1 edges");
    if (tree_weights.size() != static_cast<Eigen::Index>(tree_edges.size()))
        throw std::invalid_argument("thinness: weight/edge count mismatch");
    {
        Dsu dsu(n);
        int merged = 0;
        for (int l : tree_edges)
            if (dsu.unite(g.edge(l).u, g.edge(l).v)) ++merged;
        if (merged != n - 1) throw std::invalid_argument("thinness: edge set does not span");
    }

    const Vector host_weights = Vector::Ones(g.num_edges());
    LaplacianSystem host(g, host_weights, solve);

    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = std::cos(0.9 * i + 0.3) + 1e-3 * i;
    x.array() -= x.mean();
    x.normalize();

    const double tol = 1e-8;
    double gamma = 0.0, prev = 0.0;
    int stable = 0;
    const int max_iters = 50 * n + 20000;
    for (int it = 0; it < max_iters; ++it) {
        Vector tx = apply_tree_laplacian(g, tree_edges, tree_weights, x);
        Vector y = host.pinv_apply(tx);
        // generalized Rayleigh quotient x^T L_T x / x^T L_G x
        const double num = x.dot(tx);
        const double den = x.dot(apply_laplacian(g, host_weights, x));
        gamma = num / den;
        const double ynorm = y.norm();
        if (ynorm == 0.0) break;
        x = y / ynorm;
        if (std::abs(gamma - prev) <= tol * std::abs(gamma)) {
            if (++stable >= 3) break;
        } else
            stable = 0;
        prev = gamma;
    }
    return gamma;
}

ThinTreeReport lw_thin_tree(const Graph& g, double eps, const LewisOptions& options) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    LewisResult lw = lewis_weights(g, eps, options);

    // maximum spanning tree under the unnormalized Lewis weights
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lw.w_inf[a] > lw.w_inf[b]; });
    Dsu dsu(n);
    ThinTreeReport rep;
    for (int l : order)
        if (dsu.unite(g.edge(l).u, g.edge(l).v)) rep.tree_edges.push_back(l);
    std::sort(rep.tree_edges.begin(), rep.tree_edges.end());

    rep.scale = (n - 1.0) / m;
    rep.tree_weight = rep.scale;
    rep.lewis_residual = lw.residual;
    Vector w = Vector::Constant(n - 1, rep.tree_weight);
    rep.gamma = thinness(g, rep.tree_edges, w, options.solve);
    rep.ratio = rep.gamma / rep.scale;
    return rep;
}

std::string thin_tree_report_json(const ThinTreeReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tree_edges"] = rep.tree_edges;
    j["tree_weight"] = rep.tree_weight;
    j["gamma"] = rep.gamma;
    j["scale"] = rep.scale;
    j["ratio"] = rep.ratio;
    j["lewis_residual"] = rep.lewis_residual;
    return j.dump(2);
}

} // namespace lwg
