#include <doctest.h>

#include <cmath>
#include <random>

#include "lwg/bounds.hpp"
#include "lwg/generators.hpp"
#include "lwg/oracle.hpp"
#include "lwg/resistance.hpp"
#include "lwg/trees.hpp"
#include "test_util.hpp"

using namespace lwg;

TEST_SUITE("bounds") {

TEST_CASE("alpha1 closed forms") {
    for (int n : {4, 6, 9}) {
        LaplacianSystem kn(complete_graph(n), uniform_weights(n * (n - 1) / 2));
        CHECK(alpha1(kn) == doctest::Approx(1.0).epsilon(1e-9));
    }
    LaplacianSystem p3(path_graph(3), uniform_weights(2));
    CHECK(alpha1(p3) == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("alpha2 closed forms") {
    for (int n : {4, 6, 9}) {
        LaplacianSystem kn(complete_graph(n), uniform_weights(n * (n - 1) / 2));
        CHECK(alpha2(kn) == doctest::Approx(1.0).epsilon(1e-9));
    }
    // trees at uniform weights: alpha2 = m c_max / sum c
    std::mt19937_64 rng(3);
    Graph t = testutil::random_tree(16, rng);
    Tree tree(t);
    auto c = congestions(tree);
    double sum_c = 0.0, max_c = 0.0;
    for (auto cl : c) {
        sum_c += static_cast<double>(cl);
        max_c = std::max(max_c, static_cast<double>(cl));
    }
    LaplacianSystem sys(t, uniform_weights(t.num_edges()));
    CHECK(alpha2(sys) == doctest::Approx(t.num_edges() * max_c / sum_c).epsilon(1e-9));
}

TEST_CASE("bowtie duality bound approaches (27/4)/(13/6) from below") {
    double prev = 0.0;
    for (int n : {20, 60, 200}) {
        Graph b = bowtie_graph(n, n - 1, n);
        LaplacianSystem sys(b, uniform_weights(b.num_edges()),
                            SolveOptions{.dense_threshold = 4000});
        const double a2 = alpha2(sys);
        CHECK(a2 <= 3.12);
        CHECK(a2 > prev);
        prev = a2;
    }
    CHECK(prev > 3.0);
}

TEST_CASE("alpha2 equals the infinity norm of -grad log alpha1") {
    LaplacianSystem tri(complete_graph(3), uniform_weights(3));
    auto rep_tri = alpha2_gradient_identity(tri);
    CHECK(rep_tri.alpha2_value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep_tri.fd_inf_norm == doctest::Approx(1.0).epsilon(1e-5));

    std::mt19937_64 rng(5);
    Graph t = testutil::random_tree(10, rng);
    LaplacianSystem tsys(t, uniform_weights(t.num_edges()));
    auto rep_tree = alpha2_gradient_identity(tsys);
    CHECK(rep_tree.rel_err <= 1e-3);

    Graph g = testutil::random_connected_graph(30, 0.12, rng);
    Vector w = testutil::random_simplex_weights(g.num_edges(), rng);
    LaplacianSystem gsys(g, w);
    auto rep = alpha2_gradient_identity(gsys);
    CHECK(rep.rel_err <= 1e-3);
}

TEST_CASE("gradient identity skips boundary weights") {
    Graph g = complete_graph(4);
    Vector w = uniform_weights(6);
    w[0] = 1e-7;
    w /= w.sum();
    LaplacianSystem sys(g, w);
    auto rep = alpha2_gradient_identity(sys, 1e-5);
    CHECK(rep.skipped == std::vector<int>{0});
}

TEST_CASE("mohar bounds on closed-form graphs") {
    // star with unit weights: lambda_2 = 1, R_max = 1, D = 2
    const int n = 9;
    Graph st = star_graph(n);
    LaplacianSystem sys(st, Vector::Ones(n - 1));
    auto mb = mohar_bounds(sys);
    CHECK(mb.exact_pairwise);
    CHECK(mb.r_max == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(mb.diameter == 2);
    CHECK(mb.bound_diam == doctest::Approx(1.0 / n).epsilon(1e-9));
    auto [l2, ln] = sys.eig_extremes();
    CHECK(l2 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mb.bound_pairwise <= l2 + 1e-8);
    CHECK(mb.bound_diam <= l2 + 1e-8);
    CHECK(mb.bound_sum <= l2 + 1e-8);

    LaplacianSystem tri(complete_graph(3), uniform_weights(3));
    auto mtri = mohar_bounds(tri);
    CHECK(mtri.rtilde_max == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(mtri.bound_pairwise == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("unweighted specialization recovers lambda2 >= 2/(nD)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = testutil::random_connected_graph(24, 0.15, rng);
        LaplacianSystem sys(g, Vector::Ones(g.num_edges()));
        auto mb = mohar_bounds(sys);
        CHECK(mb.r_max <= 1.0 + 1e-10);
        auto [l2, ln] = sys.eig_extremes();
        CHECK(l2 >= 2.0 / (g.num_vertices() * mb.diameter) - 1e-9);
        CHECK(l2 >= mb.bound_diam - 1e-8);
    }
}

TEST_CASE("sev diagnostics against finite differences and the trace identity") {
    // unit-scale weights keep 1/lambda_2 moderate so exp(L^+) stays O(1)
    std::mt19937_64 rng(11);
    Graph g = testutil::random_connected_graph(10, 0.3, rng);
    Vector w = testutil::random_positive_weights(g.num_edges(), rng, 0.5, 2.0);
    LaplacianSystem sys(g, w);
    auto sev = sev_diagnostics(sys);

    auto f = [&](const Vector& x) {
        LaplacianSystem s(g, x);
        return sev_diagnostics(s).value;
    };
    for (int l = 0; l < g.num_edges(); ++l) {
        const double fd = testutil::central_diff(f, w, l, 1e-6);
        CHECK(sev.gradient[l] == doctest::Approx(fd).epsilon(1e-4));
    }
    // grad f . g = -Tr[e^{L+} L+], exact algebra: relative roundoff only
    CHECK(std::abs(sev.grad_dot_g + sev.trace_exp_pinv_pinv) <=
          1e-10 * std::abs(sev.trace_exp_pinv_pinv));
    // residual identity through the rank-one spectrum {1,...,1, 1-R_l}
    for (int l = 0; l < g.num_edges(); ++l)
        CHECK(sev.optimality_residuals[l] ==
              doctest::Approx(sev.trace_exp_pinv_pinv + sev.gradient[l]).epsilon(1e-10));
}

TEST_CASE("sev identity at triangle scale meets the absolute gate") {
    LaplacianSystem tri(complete_graph(3), uniform_weights(3));
    auto sev = sev_diagnostics(tri);
    CHECK(std::abs(sev.grad_dot_g + sev.trace_exp_pinv_pinv) <= 1e-6);
}

TEST_CASE("triangle residual spectrum check: 1 - R_l = -1") {
    LaplacianSystem tri(complete_graph(3), uniform_weights(3));
    auto sev = sev_diagnostics(tri);
    // value = e^{1} + e^{1} + e^{0}; mu = {1,1} since lambda = {1,1}
    CHECK(sev.value == doctest::Approx(2.0 * std::exp(1.0) + 1.0).epsilon(1e-9));
    // Tr[e^{L+}L+ b b^T L+] with R_l = 2: x = L+ b has ||x||_{e} weighting
    for (int l = 0; l < 3; ++l) {
        CHECK(sev.optimality_residuals[l] ==
              doctest::Approx(sev.trace_exp_pinv_pinv + sev.gradient[l]).epsilon(1e-12));
        // spectrum of I - b b^T L+ is {1, 1, 1 - R_l} = {1, 1, -1}
        CHECK(effective_resistance(tri, tri.graph().edge(l).u, tri.graph().edge(l).v) ==
              doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("sev relative optimality certificate for lewis vs uniform") {
    Graph g = random_regular_graph(4, 18, 13);
    LewisResult lw = lewis_weights(g, 0.001);
    REQUIRE(lw.converged);
    LaplacianSystem lws(g, lw.g_lw);
    const double cert = sev_lw_vs_uniform(lws);
    CHECK(cert >= 0.0);
    // certificate implies f(g_lw) <= f(g_uni)
    LaplacianSystem uni(g, uniform_weights(g.num_edges()));
    CHECK(sev_diagnostics(lws).value <= sev_diagnostics(uni).value + 1e-9);
}

TEST_CASE("sev size guard") {
    Graph big = cycle_graph(401);
    LaplacianSystem sys(big, uniform_weights(401));
    CHECK_THROWS_AS(sev_diagnostics(sys), std::invalid_argument);
}

TEST_CASE("bounds_report invariants on small graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = testutil::random_connected_graph(20 + 5 * trial, 0.5, rng);
        const double eps = 0.01;
        auto rep = bounds_report(g, eps);
        CHECK(rep.alpha1 >= 1.0 - 1e-9);
        CHECK(rep.alpha1 <= rep.diameter + 5 * eps * rep.diameter);
        CHECK(rep.alpha2 <= rep.kappa * (1.0 + 1e-6));
        CHECK(rep.alpha_min == doctest::Approx(std::min(rep.alpha1, rep.alpha2)));
        CHECK(rep.mohar.bound_pairwise <= rep.lambda2 + 1e-8);
        CHECK(rep.mohar.bound_diam <= rep.lambda2 + 1e-8);
        CHECK(rep.mohar.bound_sum <= rep.lambda2 + 1e-8);
        CHECK(rep.lewis_converged);
    }
}

TEST_CASE("certificate soundness: alpha_min dominates the true ratio") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = testutil::random_connected_graph(14 + 4 * trial, 0.5, rng);
        const double eps = 0.001;
        LewisResult lw = lewis_weights(g, eps);
        REQUIRE(lw.converged);
        LaplacianSystem sys(g, lw.g_lw);
        auto sol = ermp_solve(g, {.tol = 1e-6, .max_iters = 60000});
        REQUIRE(sol.converged);
        const double ratio = kirchhoff(sys) / sol.k_star;
        CHECK(ratio >= 1.0 - 1e-3);
        CHECK(std::min(alpha1(sys), alpha2(sys)) >= ratio - 1e-3);
    }
}

TEST_CASE("report serialization round trips") {
    Graph g = lollipop_graph(6, 4);
    auto rep = bounds_report(g, 0.05);
    const std::string json = bounds_report_json(rep);
    auto back = bounds_report_from_json(json);
    CHECK(back.alpha1 == rep.alpha1);
    CHECK(back.alpha2 == rep.alpha2);
    CHECK(back.alpha_min == rep.alpha_min);
    CHECK(back.kappa == rep.kappa);
    CHECK(back.mohar.bound_pairwise == rep.mohar.bound_pairwise);
    CHECK(back.lewis_residual == rep.lewis_residual);
    CHECK(bounds_report_json(back) == json);

    const std::string csv = bounds_report_csv(rep);
    CHECK(csv.find("alpha_min") != std::string::npos);
    CHECK(csv.find('\n') != std::string::npos);
}

} // TEST_SUITE
