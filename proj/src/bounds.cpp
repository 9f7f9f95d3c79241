#include "lwg/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lwg {

double alpha1(const LaplacianSystem& sys) {
    const double k = sys.n() - 1.0;
    return 2.0 / (k * k) * sys.trace_pinv();
}

double alpha2(const LaplacianSystem& sys) {
    return sys.edge_sqnorms().maxCoeff() / sys.trace_pinv();
}

GradientIdentityReport alpha2_gradient_identity(const LaplacianSystem& sys, double h) {
    const Graph& g = sys.graph();
    const Vector& w = sys.weights();
    GradientIdentityReport rep;
    rep.alpha2_value = alpha2(sys);

    auto log_alpha1_at = [&](const Vector& gw) {
        LaplacianSystem s(g, gw, SolveOptions{});
        return std::log(alpha1(s));
    };

    double inf_norm = 0.0;
    for (int l = 0; l < g.num_edges(); ++l) {
        if (w[l] < 10.0 * h) {
            rep.skipped.push_back(l);
            continue;
        }
        Vector plus = w, minus = w;
        plus[l] += h;
        minus[l] -= h;
        const double deriv = (log_alpha1_at(plus) - log_alpha1_at(minus)) / (2.0 * h);
        inf_norm = std::max(inf_norm, std::abs(-deriv));
    }
    rep.fd_inf_norm = inf_norm;
    rep.rel_err = std::abs(rep.fd_inf_norm - rep.alpha2_value) /
                  std::max(std::abs(rep.alpha2_value), 1e-300);
    return rep;
}

MoharBounds mohar_bounds(const LaplacianSystem& sys, std::uint64_t seed) {
    const Graph& g = sys.graph();
    const int n = sys.n();
    MoharBounds out;
    out.diameter = diameter(g);
    const Vector r = sys.edge_resistances();
    out.r_max = r.maxCoeff();
    out.sum_r = r.sum();

    if (n <= 500) {
        const Matrix& P = sys.pinv_shifted();
        double best = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                best = std::max(best, P(i, i) + P(j, j) - 2.0 * P(i, j));
        out.rtilde_max = best;
        out.exact_pairwise = true;
    } else {
        // sampled pairs plus all pairs of BFS-peripheral vertices; a sampled
        // maximum only under-estimates, so bound_pairwise is reported in
        // lower-bound mode
        out.exact_pairwise = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int s = 0; s < 2000; ++s) {
            int i = pick(rng), j = pick(rng);
            if (i != j) pairs.emplace_back(i, j);
        }
        std::vector<int> periph;
        for (int probe : {0, n / 3, (2 * n) / 3}) {
            auto dist = g.bfs_distances(probe);
            int far = 0;
            for (int v = 0; v < n; ++v)
                if (dist[v] > dist[far]) far = v;
            periph.push_back(far);
        }
        for (std::size_t a = 0; a < periph.size(); ++a)
            for (std::size_t b = a + 1; b < periph.size(); ++b)
                if (periph[a] != periph[b]) pairs.emplace_back(periph[a], periph[b]);
        for (int p : periph)
            for (int s = 0; s < 50; ++s) {
                int j = pick(rng);
                if (j != p) pairs.emplace_back(p, j);
            }
        double best = 0.0;
        for (auto [i, j] : pairs) best = std::max(best, sys.pinv_quad(i, j));
        out.rtilde_max = best;
    }

    out.bound_pairwise = 2.0 / (n * out.rtilde_max);
    out.bound_diam = 2.0 / (n * out.diameter * out.r_max);
    out.bound_sum = 4.0 / (n * out.sum_r);
    return out;
}

namespace {

struct SevDecomposition {
    Matrix exp_pinv;      ///< e^{L^+}
    Matrix pinv;          ///< L^+
    double trace_exp = 0.0;      ///< Tr e^{L^+} (kernel contributes e^0 = 1)
    double trace_exp_pinv = 0.0; ///< Tr[e^{L^+} L^+]
};

SevDecomposition sev_decompose(const LaplacianSystem& sys) {
    const int n = sys.n();
    if (n > 400) throw std::invalid_argument("sev_diagnostics: n <= 400 required");
    Matrix L = Matrix::Zero(n, n);
    const Graph& g = sys.graph();
    for (int l = 0; l < g.num_edges(); ++l) {
        const auto& e = g.edge(l);
        const double w = sys.weights()[l];
        L(e.u, e.u) += w;
        L(e.v, e.v) += w;
        L(e.u, e.v) -= w;
        L(e.v, e.u) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(L);
    if (es.info() != Eigen::Success) throw std::runtime_error("sev: eigendecomposition failed");
    const Vector& lam = es.eigenvalues(); // ascending, lam[0] ~ 0 (kernel)
    const Matrix& V = es.eigenvectors();

    SevDecomposition out;
    Vector mu = Vector::Zero(n);      // eigenvalues of L^+
    Vector emu = Vector::Ones(n);     // eigenvalues of e^{L^+}; kernel -> e^0
    for (int i = 1; i < n; ++i) {
        mu[i] = 1.0 / lam[i];
        emu[i] = std::exp(mu[i]);
    }
    out.pinv = V * mu.asDiagonal() * V.transpose();
    out.exp_pinv = V * emu.asDiagonal() * V.transpose();
    out.trace_exp = emu.sum();
    out.trace_exp_pinv = (emu.array() * mu.array()).sum();
    return out;
}

} // namespace

SevDiagnostics sev_diagnostics(const LaplacianSystem& sys) {
    auto dec = sev_decompose(sys);
    const Graph& g = sys.graph();
    const int m = g.num_edges();

    SevDiagnostics out;
    out.value = dec.trace_exp;
    out.trace_exp_pinv_pinv = dec.trace_exp_pinv;
    out.gradient.resize(m);
    out.optimality_residuals.resize(m);
    for (int l = 0; l < m; ++l) {
        const auto& e = g.edge(l);
        Vector x = dec.pinv.col(e.u) - dec.pinv.col(e.v); // L^+ b_l
        const double quad = x.dot(dec.exp_pinv * x);      // Tr[e^{L+} L+ b b^T L+]
        out.gradient[l] = -quad;
        out.optimality_residuals[l] = dec.trace_exp_pinv - quad;
    }
    out.grad_dot_g = out.gradient.dot(sys.weights());
    return out;
}

double sev_lw_vs_uniform(const LaplacianSystem& lw_sys) {
    auto dec = sev_decompose(lw_sys);
    const Graph& g = lw_sys.graph();
    const int m = g.num_edges();
    double avg_quad = 0.0;
    for (int l = 0; l < m; ++l) {
        const auto& e = g.edge(l);
        Vector x = dec.pinv.col(e.u) - dec.pinv.col(e.v);
        avg_quad += x.dot(dec.exp_pinv * x);
    }
    avg_quad /= m; // Tr[e^{L+} L+ L_uni L+] with L_uni = (1/m) sum b b^T
    return dec.trace_exp_pinv - avg_quad;
}

BoundsReport bounds_report(const Graph& g, double eps, const LewisOptions& options) {
    BoundsReport rep;
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.eps = eps;

    LewisResult lw = lewis_weights(g, eps, options);
    rep.lewis_iterations = lw.iterations;
    rep.lewis_residual = lw.residual;
    rep.lewis_converged = lw.converged;
    if (!lw.converged) throw std::runtime_error("bounds_report: Lewis weights did not converge");

    LaplacianSystem sys(g, lw.g_lw, options.solve);
    rep.alpha1 = alpha1(sys);
    rep.alpha2 = alpha2(sys);
    rep.alpha_min = std::min(rep.alpha1, rep.alpha2);
    rep.diameter = diameter(g);
    auto [l2, ln] = sys.eig_extremes();
    rep.lambda2 = l2;
    rep.lambda_n = ln;
    rep.kappa = ln / l2;
    rep.mohar = mohar_bounds(sys);
    return rep;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const BoundsReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["m"] = r.m;
    j["eps"] = r.eps;
    j["alpha1"] = r.alpha1;
    j["alpha2"] = r.alpha2;
    j["alpha_min"] = r.alpha_min;
    j["diameter"] = r.diameter;
    j["kappa"] = r.kappa;
    j["lambda2"] = r.lambda2;
    j["lambda_n"] = r.lambda_n;
    j["mohar"] = {{"bound_pairwise", r.mohar.bound_pairwise},
                  {"bound_diam", r.mohar.bound_diam},
                  {"bound_sum", r.mohar.bound_sum},
                  {"rtilde_max", r.mohar.rtilde_max},
                  {"r_max", r.mohar.r_max},
                  {"sum_r", r.mohar.sum_r},
                  {"exact_pairwise", r.mohar.exact_pairwise}};
    j["lewis"] = {{"iterations", r.lewis_iterations},
                  {"residual", r.lewis_residual},
                  {"converged", r.lewis_converged}};
    return j;
}

} // namespace

std::string bounds_report_json(const BoundsReport& r) { return to_json(r).dump(2); }

std::string bounds_report_csv(const BoundsReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "schema,n,m,eps,alpha1,alpha2,alpha_min,diameter,kappa,lambda2,lambda_n,"
           "mohar_bound_pairwise,mohar_bound_diam,mohar_bound_sum,mohar_rtilde_max,"
           "mohar_r_max,mohar_sum_r,mohar_exact_pairwise,lewis_iterations,lewis_residual,"
           "lewis_converged\n";
    out << 1 << ',' << r.n << ',' << r.m << ',' << r.eps << ',' << r.alpha1 << ',' << r.alpha2
        << ',' << r.alpha_min << ',' << r.diameter << ',' << r.kappa << ',' << r.lambda2 << ','
        << r.lambda_n << ',' << r.mohar.bound_pairwise << ',' << r.mohar.bound_diam << ','
        << r.mohar.bound_sum << ',' << r.mohar.rtilde_max << ',' << r.mohar.r_max << ','
        << r.mohar.sum_r << ',' << (r.mohar.exact_pairwise ? 1 : 0) << ',' << r.lewis_iterations
        << ',' << r.lewis_residual << ',' << (r.lewis_converged ? 1 : 0) << "\n";
    return out.str();
}

BoundsReport bounds_report_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    BoundsReport r;
    r.n = j.at("n");
    r.m = j.at("m");
    r.eps = j.at("eps");
    r.alpha1 = j.at("alpha1");
    r.alpha2 = j.at("alpha2");
    r.alpha_min = j.at("alpha_min");
    r.diameter = j.at("diameter");
    r.kappa = j.at("kappa");
    r.lambda2 = j.at("lambda2");
    r.lambda_n = j.at("lambda_n");
    const auto& mo = j.at("mohar");
    r.mohar.bound_pairwise = mo.at("bound_pairwise");
    r.mohar.bound_diam = mo.at("bound_diam");
    r.mohar.bound_sum = mo.at("bound_sum");
    r.mohar.rtilde_max = mo.at("rtilde_max");
    r.mohar.r_max = mo.at("r_max");
    r.mohar.sum_r = mo.at("sum_r");
    r.mohar.exact_pairwise = mo.at("exact_pairwise");
    const auto& lw = j.at("lewis");
    r.lewis_iterations = lw.at("iterations");
    r.lewis_residual = lw.at("residual");
    r.lewis_converged = lw.at("converged");
    return r;
}

} // namespace lwg
