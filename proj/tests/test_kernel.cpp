#include <doctest.h>

#include <random>

#include "gsr/kernel.hpp"
#include "gsr/oracle.hpp"
#include "gsr/random.hpp"
#include "gsr/search.hpp"

using namespace gsr;

TEST_CASE("lone edges rule") {
    const Hypergraph h = build_improved(consecutive_ruler(3)); // single edge {0,1,2}
    const KernelResult r1 = rule_lone_edges(h, 1);
    CHECK(r1.graph.vertex_count() == 0);
    CHECK(r1.graph.edge_count() == 0);
    CHECK(r1.budget == 0);
    CHECK(r1.forced_deletions == std::vector<Mark>{0});
    CHECK(r1.kept_marks == std::vector<Mark>{1, 2});
    CHECK_FALSE(r1.infeasible);

    const KernelResult r0 = rule_lone_edges(h, 0);
    CHECK(r0.budget == -1);
    CHECK(r0.infeasible);

    // Intersecting edges are untouched.
    const Hypergraph h2 = build_improved(consecutive_ruler(4));
    const KernelResult r2 = rule_lone_edges(h2, 2);
    CHECK(r2.graph.edge_count() == h2.edge_count());
    CHECK(r2.budget == 2);
    CHECK(r2.forced_deletions.empty());
}

TEST_CASE("lone vertices rule") {
    const Hypergraph edgeless = build_improved(Ruler({0, 1, 3}));
    const KernelResult r = rule_lone_vertices(edgeless, 0);
    CHECK(r.graph.vertex_count() == 0);
    CHECK(r.budget == 0);
    CHECK(r.kept_marks == std::vector<Mark>{0, 1, 3});

    const Hypergraph h = build_improved(consecutive_ruler(3));
    CHECK(rule_lone_vertices(h, 1).graph.vertex_count() == 3); // all degree 1

    // After the lone-edge rule nothing remains to sweep.
    const KernelResult after = rule_lone_vertices(rule_lone_edges(h, 1).graph, 0);
    CHECK(after.graph.vertex_count() == 0);
    CHECK(after.kept_marks.empty());
}

TEST_CASE("leaf edges rule") {
    // {0,1,2} and {2,10,20} intersect exactly in vertex 2.
    const Hypergraph twoLeaves({0, 1, 2, 10, 20}, {Edge(0, 1, 2), Edge(2, 10, 20)});
    const KernelResult r = rule_leaf_edges(twoLeaves, 2);
    CHECK(r.forced_deletions == std::vector<Mark>{2});
    CHECK(r.budget == 1);
    CHECK(r.graph.edge_count() == 0);

    // In H_{0..3} every edge shares two or more vertices with another.
    const Hypergraph h = build_improved(consecutive_ruler(4));
    const KernelResult r2 = rule_leaf_edges(h, 3);
    CHECK(r2.graph.edge_count() == h.edge_count());
    CHECK(r2.forced_deletions.empty());
}

TEST_CASE("high degree rules") {
    // Vertex 0 sits in four 3-edges: more than 3k for k=1.
    const Hypergraph deg3({0, 1, 2, 3, 4, 5, 6, 7, 8},
                          {Edge(0, 1, 2), Edge(0, 3, 4), Edge(0, 5, 6), Edge(0, 7, 8)});
    const KernelResult r3 = rule_high_degree_3(deg3, 1);
    CHECK(r3.forced_deletions == std::vector<Mark>{0});
    CHECK(r3.budget == 0);
    CHECK(r3.graph.edge_count() == 0);

    // Threshold is strict: three 3-edges at k=1 stay.
    const Hypergraph deg3ok({0, 1, 2, 3, 4, 5, 6},
                            {Edge(0, 1, 2), Edge(0, 3, 4), Edge(0, 5, 6)});
    CHECK(rule_high_degree_3(deg3ok, 1).forced_deletions.empty());

    // k = 0: any vertex in a 3-edge exceeds the threshold.
    const KernelResult zero = rule_high_degree_3(build_improved(consecutive_ruler(3)), 0);
    CHECK(zero.infeasible);
    CHECK(zero.budget == -1);

    // Vertex 0 in four 4-edges: more than 3k^2 for k=1.
    const Hypergraph deg4({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                          {Edge(0, 1, 2, 3), Edge(0, 4, 5, 6), Edge(0, 7, 8, 9),
                           Edge(0, 10, 11, 12)});
    const KernelResult r4 = rule_high_degree_4(deg4, 1);
    CHECK(r4.forced_deletions == std::vector<Mark>{0});
    CHECK(r4.budget == 0);
}

TEST_CASE("kernelize driver") {
    const Hypergraph h = build_improved(consecutive_ruler(3));
    const KernelResult r = kernelize(h, 1);
    CHECK(r.graph.vertex_count() == 0);
    CHECK(r.budget == 0);
    CHECK_FALSE(r.infeasible);
    CHECK(within_kernel_bounds(r.graph, r.budget));

    CHECK(kernelize(h, 0).infeasible);

    const KernelResult big = kernelize(build_improved(consecutive_ruler(7)), 6);
    CHECK_FALSE(big.infeasible);
    CHECK(within_kernel_bounds(big.graph, big.budget));

    CHECK_THROWS_AS(kernelize(h, -1), input_error);
}

TEST_CASE("kernelize monotonicity and accounting") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 13, 40);
        const Hypergraph h = build_improved(r);
        const long long k = static_cast<long long>(rng() % (r.size() + 1));
        const KernelResult res = kernelize(h, k);
        CHECK(res.budget <= k);
        CHECK(res.graph.vertex_count() <= h.vertex_count());
        CHECK(res.graph.edge_count() <= h.edge_count());
        if (!res.infeasible) {
            CHECK(static_cast<long long>(res.forced_deletions.size()) == k - res.budget);
        }
        // Deleted and kept marks are disjoint and drawn from the ruler.
        for (Mark m : res.forced_deletions) {
            CHECK(r.contains(m));
            CHECK_FALSE(std::binary_search(res.kept_marks.begin(), res.kept_marks.end(), m));
        }
    }
}

TEST_CASE("kernelize preserves the decision with forced deletions applied") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 11, 28);
        const Hypergraph h = build_improved(r);
        const std::size_t opt = brute_force_min_deletions(r);
        for (long long k = 0; k <= static_cast<long long>(r.size()); ++k) {
            const bool expected = opt <= static_cast<std::size_t>(k);
            const KernelResult res = kernelize(h, k);
            bool actual = false;
            if (!res.infeasible) {
                DeletionInstance inst;
                inst.graph = res.graph;
                inst.budget = res.budget;
                actual = solve_parameterized(inst).solution.has_value();
            }
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("kernel bounds hold on reduced yes-instances") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 12, 30);
        const std::size_t opt = brute_force_min_deletions(r);
        const Hypergraph h = build_improved(r);
        for (long long k = static_cast<long long>(opt); k <= static_cast<long long>(r.size());
             ++k) {
            const KernelResult res = kernelize(h, k);
            REQUIRE_FALSE(res.infeasible);
            CHECK(within_kernel_bounds(res.graph, res.budget));
        }
    }
}
