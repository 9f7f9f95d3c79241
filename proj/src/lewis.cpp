#include "lwg/lewis.hpp"

#include <cmath>
#include <stdexcept>

namespace lwg {

namespace {

constexpr double kFloor = 1e-15;

double residual_of(const Vector& tau, const Vector& w) {
    return ((tau.array() / w.array()) - 1.0).abs().maxCoeff();
}

} // namespace

double fixed_point_residual(const Graph& g, const Vector& w, const SolveOptions& solve) {
    if ((w.array() <= 0.0).any())
        throw std::invalid_argument("fixed_point_residual: weights must be positive");
    LaplacianSystem sys(g, w, solve);
    return residual_of(sys.leverage_scores(), w);
}

LewisResult lewis_weights(const Graph& g, double eps, const LewisOptions& options) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("lewis_weights: eps must lie in (0,1)");
    if (!g.connected()) throw std::invalid_argument("lewis_weights: graph must be connected");

    const int n = g.num_vertices();
    const int m = g.num_edges();
    const double k = n - 1.0;
    const int budget = static_cast<int>(std::ceil(
        options.iter_constant / eps * std::log(std::max(static_cast<double>(m) / n, 2.0))));

    LewisResult res;
    res.floor_hits = 0;

    Vector w = Vector::Constant(m, k / m);
    Vector sum = Vector::Zero(m);

    // Certify the running average every so often; each check is one extra
    // leverage-score pass, so the schedule is geometric early and then flat.
    auto is_checkpoint = [&](int t, double last_resid) {
        if (!options.early_stop) return t == budget;
        if (last_resid <= eps) return true;
        if ((t & (t - 1)) == 0) return true; // powers of two
        const int stride = std::max(1, budget / 16);
        return t % stride == 0 || t == budget;
    };

    Vector avg;
    for (int t = 1; t <= budget; ++t) {
        sum += w;
        LaplacianSystem sys(g, w, options.solve);
        Vector tau = sys.leverage_scores();
        const double r_last = residual_of(tau, w);

        if (is_checkpoint(t, r_last)) {
            avg = sum / t;
            double r_avg;
            if (t == 1) {
                r_avg = r_last; // average equals the first iterate
            } else {
                LaplacianSystem avg_sys(g, avg, options.solve);
                r_avg = residual_of(avg_sys.leverage_scores(), avg);
            }
            res.iterations = t;
            res.residual = r_avg;
            if (r_avg <= eps || t == budget) {
                res.converged = r_avg <= eps;
                res.w_inf = avg;
                res.g_lw = avg / k;
                return res;
            }
        }

        for (int l = 0; l < m; ++l) {
            if (tau[l] < kFloor) {
                tau[l] = kFloor;
                ++res.floor_hits;
            }
        }
        w = tau;
    }

    // unreachable: the t == budget checkpoint above always returns
    res.w_inf = sum / budget;
    res.g_lw = res.w_inf / k;
    return res;
}

} // namespace lwg
