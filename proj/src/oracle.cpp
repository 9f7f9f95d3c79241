#include "lwg/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace lwg {

namespace {

struct Objective {
    double k = 0.0;    ///< n Tr L^+
    Vector grad;       ///< dK/dg_l = -n ||L^+ b_l||^2
    double gap = 0.0;  ///< duality gap at g
};

Objective evaluate(const Graph& g, const Vector& weights, const SolveOptions& solve,
                   bool want_grad) {
    LaplacianSystem sys(g, weights, solve);
    Objective out;
    out.k = sys.n() * sys.trace_pinv();
    if (want_grad) {
        out.grad = -static_cast<double>(sys.n()) * sys.edge_sqnorms();
        const double steepest = -out.grad.minCoeff(); // max_l n ||L^+ b_l||^2
        out.gap = out.k - out.k * out.k / steepest;
    }
    return out;
}

} // namespace

double duality_gap(const Graph& g, const Vector& weights, const SolveOptions& solve) {
    const double total = weights.sum();
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("duality_gap: weights must be normalized");
    return evaluate(g, weights, solve, true).gap;
}

ErmpSolution ermp_solve(const Graph& g, const ErmpOptions& options) {
    if (g.num_vertices() > 200)
        throw std::invalid_argument("ermp_solve: desk-scale oracle, n <= 200 required");
    const int m = g.num_edges();

    ErmpSolution sol;
    Vector x = uniform_weights(m);
    Objective cur = evaluate(g, x, options.solve, true);
    double step = 1.0;

    for (int it = 1; it <= options.max_iters; ++it) {
        sol.iterations = it;
        if (cur.gap <= options.tol * cur.k) {
            sol.converged = true;
            break;
        }

        // entropic mirror step g <- g * exp(-step * grad) / Z with Armijo
        // backtracking on the sufficient-decrease condition
        const Vector grad = cur.grad;
        const double scale = grad.cwiseAbs().maxCoeff();
        bool accepted = false;
        for (int trial = 0; trial < 60 && !accepted; ++trial) {
            Vector logx = x.array().log() - (step / scale) * grad.array();
            logx.array() -= logx.maxCoeff();
            Vector cand = logx.array().exp();
            cand = cand.cwiseMax(1e-300);
            cand /= cand.sum();
            Objective next = evaluate(g, cand, options.solve, true);
            const double decrease = grad.dot(cand - x);
            if (next.k <= cur.k + 0.25 * decrease || next.k < cur.k * (1.0 - 1e-14)) {
                x = cand;
                cur = next;
                step = std::min(step * 2.0, 1e12);
                accepted = true;
            } else {
                step *= 0.5;
            }
        }
        if (!accepted) break; // line search exhausted at numerical precision
    }

    sol.g_star = x;
    sol.k_star = cur.k;
    sol.duality_gap = cur.gap;
    sol.converged = cur.gap <= options.tol * cur.k;
    return sol;
}

DesignGapDemo design_gap_demo(int n) {
    if (n < 2) throw std::invalid_argument("design_gap_demo: n >= 2 required");
    DesignGapDemo demo;

    // V = diag(1..n): the fixed-point equation v_i^T (V^T W V)^{-1} v_i = 1
    // at w = 1 reads i * (i^2)^{-1} * i = 1 for every row.
    demo.lw_is_ones = true;
    for (int i = 1; i <= n; ++i) {
        const double vi = i;
        const double check = vi * (1.0 / (vi * vi)) * vi;
        if (std::abs(check - 1.0) > 1e-12) demo.lw_is_ones = false;
    }

    double sum_inv_sq = 0.0, harmonic = 0.0;
    for (int i = 1; i <= n; ++i) {
        sum_inv_sq += 1.0 / (static_cast<double>(i) * i);
        harmonic += 1.0 / i;
    }
    demo.trace_at_lw = n * sum_inv_sq;
    demo.trace_at_inverse_law = harmonic * harmonic;
    demo.ratio = demo.trace_at_lw / demo.trace_at_inverse_law;
    return demo;
}

Vector hm_gm_construct(const Vector& x, double t) {
    if (x.size() < 2) throw std::invalid_argument("hm_gm_construct: need n >= 2");
    if ((x.array() <= 0.0).any()) throw std::invalid_argument("hm_gm_construct: x > 0 required");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("hm_gm_construct: t in (0,1) required");

    const double s = x.cwiseInverse().sum();
    const double y1 = 1.0 / x[0];
    const double y2 = 1.0 / x[1];
    const double tp = (1.0 / t - 1.0) * s;
    const double disc = tp * tp + 2.0 * tp * (y1 + y2) + (y1 - y2) * (y1 - y2);
    const double p = ((tp + y1 + y2) + std::sqrt(disc)) / (2.0 * y2);

    Vector out = x;
    out[0] = p * x[0];
    out[1] = x[1] / p;
    return out;
}

double arithmetic_mean(const Vector& x) { return x.mean(); }

double geometric_mean(const Vector& x) {
    return std::exp(x.array().log().sum() / x.size());
}

double harmonic_mean(const Vector& x) {
    return x.size() / x.cwiseInverse().sum();
}

} // namespace lwg
