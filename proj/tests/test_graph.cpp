#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "lwg/generators.hpp"
#include "lwg/graph.hpp"
#include "test_util.hpp"

using namespace lwg;

TEST_SUITE("graph") {

TEST_CASE("build_graph canonicalizes a minimal path") {
    Graph g = build_graph({{0, 1}, {1, 2}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
    CHECK(g.connected());
}

TEST_CASE("build_graph drops self loops and minor components") {
    Graph g = build_graph({{0, 0}, {0, 1}, {1, 2}, {3, 4}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.is_tree());
}

TEST_CASE("build_graph collapses duplicates regardless of orientation") {
    Graph g = build_graph({{0, 1}, {1, 0}});
    CHECK(g.num_edges() == 1);
}

TEST_CASE("build_graph error paths") {
    CHECK_THROWS_AS(build_graph({{0, 0}}, {true, true}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph({{0, 0}, {1, 2}}, {false, true}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph({{0, 1}, {2, 3}}, {true, false}), std::invalid_argument);
}

TEST_CASE("relabeling preserves first-appearance order") {
    Graph g = build_graph({{7, 3}, {3, 9}});
    // 7 -> 0, 3 -> 1, 9 -> 2
    CHECK(g.num_vertices() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("edge ordering is stable across rebuilds of the same input") {
    std::mt19937_64 rng_a(7), rng_b(7);
    Graph a = testutil::random_connected_graph(40, 0.1, rng_a);
    Graph b = testutil::random_connected_graph(40, 0.1, rng_b);
    CHECK(a.edges() == b.edges());
}

TEST_CASE("table-scale generator shapes") {
    Graph lol = lollipop_graph(400, 400);
    CHECK(lol.num_vertices() == 800);
    CHECK(lol.num_edges() == 80200);

    Graph bt = bowtie_graph(1000, 999, 1000);
    CHECK(bt.num_vertices() == 3000);
    CHECK(bt.num_edges() == 2999);
    CHECK(bt.is_tree());

    Graph gr = grid_graph(20, 20);
    CHECK(gr.num_vertices() == 400);
    CHECK(gr.num_edges() == 760);

    Graph gr10 = grid_graph(10, 40);
    CHECK(gr10.num_vertices() == 400);
    CHECK(gr10.num_edges() == 750);
}

TEST_CASE("margulis and chordal generators are simple and connected") {
    Graph mg = margulis_gabber_galil_graph(400);
    CHECK(mg.num_vertices() == 400);
    CHECK(mg.connected());
    // simple-graph count: the torus multigraph carries 1520 non-loop edges of
    // which 40 are parallel collapses
    CHECK(mg.num_edges() == 1480);

    Graph ch = chordal_cycle_graph(400);
    CHECK(ch.num_vertices() == 400);
    CHECK(ch.num_edges() == 797);
    CHECK(ch.connected());
}

TEST_CASE("tree families are acyclic with m = n-1") {
    for (const Graph& g : {path_graph(17), star_graph(9), bowtie_graph(3, 4, 5)}) {
        CHECK(g.num_edges() == g.num_vertices() - 1);
        CHECK(g.is_tree());
    }
}

TEST_CASE("diameter closed forms") {
    CHECK(diameter(complete_graph(8)) == 1);
    CHECK(diameter(path_graph(6)) == 5); // 5 edges
    CHECK(diameter(bowtie_graph(2, 1, 2)) == 3);
    CHECK(diameter(cycle_graph(9)) == 4);
}

TEST_CASE("random regular graphs have exact degrees and connect reliably") {
    int connected_count = 0;
    const int trials = 40;
    for (int seed = 0; seed < trials; ++seed) {
        Graph g = random_regular_graph(3, 400, seed);
        bool pre_lcc_intact = g.num_vertices() == 400;
        if (pre_lcc_intact) ++connected_count;
        for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) == 3);
    }
    CHECK(connected_count >= trials * 95 / 100);
}

TEST_CASE("generator determinism in the seed") {
    Graph a = random_regular_graph(4, 60, 11);
    Graph b = random_regular_graph(4, 60, 11);
    CHECK(a.edges() == b.edges());
    Graph c = watts_strogatz_graph(60, 4, 0.5, 3);
    Graph d = watts_strogatz_graph(60, 4, 0.5, 3);
    CHECK(c.edges() == d.edges());
}

TEST_CASE("generate dispatch and parameter validation") {
    Graph g = generate("grid", {{"w", 4}, {"h", 5}}, 0);
    CHECK(g.num_vertices() == 20);
    CHECK_THROWS_AS(generate("nosuch", {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("regular", {{"d", 3}, {"n", 5}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("grid", {{"w", 4}}, 0), std::invalid_argument);
}

TEST_CASE("edge list io round trip with comments and 1-indexing") {
    std::istringstream in("# demo\n1 2\n2 3  # trailing\n\n3 1\n");
    Graph g = read_edge_list(in);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    Graph h = read_edge_list(back);
    CHECK(g.edges() == h.edges());
}

} // TEST_SUITE
