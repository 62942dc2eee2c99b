#include <doctest.h>

#include <random>

#include "gsr/hypergraph.hpp"
#include "gsr/random.hpp"

using namespace gsr;

TEST_CASE("edge canonicalization and ordering") {
    const Edge e(3, 1, 2);
    CHECK(e.size() == 3);
    CHECK(e[0] == 1);
    CHECK(e.contains(3));
    CHECK_FALSE(e.contains(4));
    CHECK(Edge(0, 1, 2) < Edge(0, 1, 2, 3)); // prefix sorts first
    CHECK(Edge(0, 1, 2, 3) < Edge(1, 2, 3));
    CHECK(Edge(2, 1, 0) == Edge(0, 1, 2));
    CHECK_THROWS_AS(Edge(1, 1, 2), input_error);
    CHECK(Edge(0, 1, 2).is_conflict());
    CHECK_FALSE(Edge(0, 1, 3).is_conflict());
    CHECK(Edge(0, 1, 5, 6).is_conflict());
}

TEST_CASE("build_naive on tiny rulers") {
    CHECK(build_naive(Ruler({0, 1, 3})).edge_count() == 0);

    const Hypergraph h1 = build_naive(Ruler({0, 1, 2}));
    REQUIRE(h1.edge_count() == 1);
    CHECK(h1.edges()[0] == Edge(0, 1, 2));

    const Hypergraph h2 = build_naive(Ruler({0, 1, 2, 3}));
    REQUIRE(h2.edge_count() == 3);
    CHECK(h2.edges()[0] == Edge(0, 1, 2));
    CHECK(h2.edges()[1] == Edge(0, 1, 2, 3));
    CHECK(h2.edges()[2] == Edge(1, 2, 3));
}

TEST_CASE("constructor equivalence, serial and parallel") {
    for (std::size_t n = 0; n <= 25; ++n) {
        const Ruler r = consecutive_ruler(n);
        const Hypergraph naive = build_naive(r);
        const Hypergraph improved = build_improved(r);
        const Hypergraph parallel = build_improved_parallel(r);
        CHECK(naive.edges() == improved.edges());
        CHECK(improved.edges() == parallel.edges());
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 15, 60);
        const Hypergraph naive = build_naive(r);
        CHECK(naive.edges() == build_improved(r).edges());
        CHECK(naive.edges() == build_improved_parallel(r).edges());
    }
}

TEST_CASE("graph emptiness characterizes Golomb rulers") {
    CHECK(is_golomb_via_graph(Ruler({0, 1, 3})));
    CHECK_FALSE(is_golomb_via_graph(Ruler({0, 1, 2})));
    CHECK(is_golomb_via_graph(Ruler({0, 1, 4, 9, 11})));
    CHECK_FALSE(is_golomb_via_graph(Ruler({8, 9, 64, 65})));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 150; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 12, 45);
        CHECK(is_golomb_via_graph(r) == is_golomb(r));
    }
}

TEST_CASE("every built edge is a conflict with a short generating distance") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        const Ruler r = random_ruler(rng, 3 + rng() % 12, 50);
        const Mark half = (r.back() - r.front()) / 2;
        for (const Edge& e : build_improved(r).edges()) {
            CHECK(e.is_conflict());                  // non-overlapping equal pair exists
            CHECK(e.generating_distance() <= half);  // at most half the maximum distance
        }
    }
}

TEST_CASE("consecutive edge-count lower bound") {
    // 1 and 7 recomputed by hand and equal to the full edge counts of
    // H_{0..2} and H_{0..4}.
    CHECK(consecutive_edge_lower_bound(2) == 1);
    CHECK(consecutive_edge_lower_bound(4) == 7);
    CHECK_THROWS_AS(consecutive_edge_lower_bound(3), input_error);
    CHECK_THROWS_AS(consecutive_edge_lower_bound(0), input_error);
    for (std::uint64_t n = 2; n <= 40; n += 2) {
        const auto bound = consecutive_edge_lower_bound(n);
        const auto edges = build_improved(consecutive_ruler(n + 1)).edge_count();
        CHECK(bound <= edges);
    }
}

TEST_CASE("hypergraph incidence audit and validation") {
    const Hypergraph h = build_improved(consecutive_ruler(9));
    CHECK(h.audit());
    CHECK(h.vertex_index(4).value() == 4);
    CHECK_FALSE(h.vertex_index(99).has_value());
    CHECK_THROWS_AS(Hypergraph({0, 1}, {Edge(0, 1, 2)}), input_error);
    CHECK_THROWS_AS(Hypergraph({0, 1, 1}, {}), input_error);
}

TEST_CASE("hand-built graphs deduplicate edges") {
    const Hypergraph h({0, 1, 2, 3}, {Edge(0, 1, 2), Edge(2, 1, 0), Edge(0, 1, 2, 3)});
    CHECK(h.edge_count() == 2);
    CHECK(h.audit());
}

TEST_CASE("dump format") {
    CHECK(format_hypergraph(build_improved(consecutive_ruler(4))) ==
          "vertices: 4 edges: 3\n0 1 2\n0 1 2 3\n1 2 3\n");
    CHECK(format_hypergraph(build_improved(Ruler({0, 1, 3}))) == "vertices: 3 edges: 0\n");
}

TEST_CASE("graph view deletion and rollback restore state exactly") {
    const Hypergraph h = build_improved(consecutive_ruler(10));
    GraphView view(h);
    const int edges0 = view.alive_edge_count();
    const int verts0 = view.vertices_in_edges();

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cp = view.checkpoint();
        std::vector<int> killed;
        for (int step = 0; step < 4; ++step) {
            const int v = static_cast<int>(rng() % h.vertex_count());
            if (view.vertex_alive(v)) {
                view.delete_vertex(v);
                killed.push_back(v);
            }
        }
        for (int v : killed) {
            CHECK_FALSE(view.vertex_alive(v));
            CHECK(view.degree(v) == 0);
        }
        view.rollback(cp);
        CHECK(view.alive_edge_count() == edges0);
        CHECK(view.vertices_in_edges() == verts0);
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            CHECK(view.vertex_alive(static_cast<int>(v)));
        }
    }
    CHECK(view.materialize().edges() == h.edges());
}

TEST_CASE("materialized views keep only alive structure") {
    const Hypergraph h = build_improved(consecutive_ruler(5));
    GraphView view(h);
    view.delete_vertex(*h.vertex_index(2));
    const Hypergraph reduced = view.materialize();
    CHECK(reduced.vertex_count() == 4);
    for (const Edge& e : reduced.edges()) CHECK_FALSE(e.contains(2));
    CHECK(reduced.audit());
}
