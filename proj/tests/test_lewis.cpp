#include <doctest.h>

#include <random>

#include "lwg/generators.hpp"
#include "lwg/lewis.hpp"
#include "test_util.hpp"

using namespace lwg;

TEST_SUITE("lewis") {

TEST_CASE("trees converge to all-ones at the first iterate") {
    std::mt19937_64 rng(3);
    Graph t = testutil::random_tree(30, rng);
    LewisResult res = lewis_weights(t, 0.01);
    CHECK(res.iterations == 1);
    CHECK(res.residual == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(res.converged);
    for (int l = 0; l < t.num_edges(); ++l)
        CHECK(res.w_inf[l] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.g_lw[0] == doctest::Approx(1.0 / t.num_edges()).epsilon(1e-9));
}

TEST_CASE("triangle weights are 2/3 (initialization is the fixed point)") {
    LewisResult res = lewis_weights(complete_graph(3), 0.01);
    for (int l = 0; l < 3; ++l) CHECK(res.w_inf[l] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("lollipop(10,10) certifies its own residual") {
    Graph g = lollipop_graph(10, 10);
    LewisResult res = lewis_weights(g, 0.01);
    CHECK(res.converged);
    CHECK(res.residual <= 0.01);
    CHECK(fixed_point_residual(g, res.w_inf) == doctest::Approx(res.residual).epsilon(1e-6));
    CHECK(res.w_inf.sum() == doctest::Approx(g.num_vertices() - 1.0).epsilon(1e-6));
    CHECK(res.w_inf.maxCoeff() <= 1.0 + 1e-6);
    CHECK(res.w_inf.minCoeff() > 0.0);
}

TEST_CASE("fixed point residual closed forms") {
    std::mt19937_64 rng(5);
    Graph t = testutil::random_tree(9, rng);
    CHECK(fixed_point_residual(t, Vector::Ones(t.num_edges())) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fixed_point_residual(complete_graph(3), Vector::Ones(3)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(fixed_point_residual(complete_graph(4), Vector::Constant(6, 0.5)) ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("saturation: every edge resistance near n-1 at converged weights") {
    Graph g = lollipop_graph(8, 5);
    const double eps = 0.005;
    LewisResult res = lewis_weights(g, eps);
    REQUIRE(res.converged);
    LaplacianSystem sys(g, res.g_lw);
    Vector r = sys.edge_resistances();
    const double k = g.num_vertices() - 1.0;
    CHECK(((r.array() - k) / k).abs().maxCoeff() <= 3 * eps);
}

TEST_CASE("lewis weights minimize the maximal edge resistance") {
    std::mt19937_64 rng(7);
    Graph g = random_regular_graph(4, 16, 7);
    const double eps = 0.01;
    LewisResult res = lewis_weights(g, eps);
    REQUIRE(res.converged);
    const double k = g.num_vertices() - 1.0;
    for (int trial = 0; trial < 20; ++trial) {
        Vector cand = testutil::random_simplex_weights(g.num_edges(), rng);
        LaplacianSystem sys(g, cand);
        CHECK(sys.edge_resistances().maxCoeff() >= (1.0 - 3 * eps) * k);
    }
}

TEST_CASE("Foster holds exactly along the iteration") {
    // any positive weights: leverage scores of the weighted incidence matrix
    // sum to the rank
    std::mt19937_64 rng(11);
    Graph g = testutil::random_connected_graph(20, 0.2, rng);
    for (int trial = 0; trial < 5; ++trial) {
        Vector w = testutil::random_positive_weights(g.num_edges(), rng, 0.01, 1.0);
        LaplacianSystem sys(g, w);
        CHECK(sys.leverage_scores().sum() ==
              doctest::Approx(g.num_vertices() - 1.0).epsilon(1e-9));
    }
}

TEST_CASE("parameter validation") {
    Graph g = complete_graph(4);
    CHECK_THROWS_AS(lewis_weights(g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lewis_weights(g, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_residual(g, Vector::Zero(6)), std::invalid_argument);
}

TEST_CASE("zero-weight edges make the two-sided certificate unattainable") {
    // This 18-vertex graph has an edge whose exact Lewis weight is zero (its
    // incidence row lies strictly inside the John ellipsoid), so the
    // iterate's relative residual plateaus near 0.04 and the run reports
    // non-convergence instead of a fake certificate.
    std::mt19937_64 rng(13);
    Graph g = testutil::random_connected_graph(18, 0.25, rng);
    LewisOptions opts;
    opts.iter_constant = 8.0;
    LewisResult res = lewis_weights(g, 0.01, opts);
    CHECK(!res.converged);
    CHECK(res.residual > 0.01);
    CHECK(res.w_inf.minCoeff() < 0.05); // the vanishing coordinate
    // the one-sided cover condition still holds: no resistance above
    // (1+eps)(n-1)
    LaplacianSystem sys(g, res.g_lw);
    CHECK(sys.edge_resistances().maxCoeff() <=
          (1.0 + 0.05) * (g.num_vertices() - 1.0));
}

} // TEST_SUITE
