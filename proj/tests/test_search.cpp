#include <doctest.h>

#include <random>

#include "gsr/oracle.hpp"
#include "gsr/random.hpp"
#include "gsr/search.hpp"

using namespace gsr;

namespace {

DeletionInstance instance_for(const Ruler& r, long long k) {
    DeletionInstance inst;
    inst.graph = build_improved(r);
    inst.budget = k;
    return inst;
}

bool edge_free_after(const Ruler& r, const std::vector<Mark>& deleted) {
    std::vector<Mark> remaining;
    for (Mark m : r.marks()) {
        if (std::find(deleted.begin(), deleted.end(), m) == deleted.end()) {
            remaining.push_back(m);
        }
    }
    return is_golomb(Ruler(remaining));
}

} // namespace

TEST_CASE("solve_parameterized on small consecutive rulers") {
    const Ruler r4 = consecutive_ruler(4);
    const SearchResult yes = solve_parameterized(instance_for(r4, 1));
    REQUIRE(yes.solution.has_value());
    CHECK(yes.solution->size() == 1);
    CHECK(edge_free_after(r4, *yes.solution));

    CHECK_FALSE(solve_parameterized(instance_for(r4, 0)).solution.has_value());

    const Ruler r6 = consecutive_ruler(6);
    CHECK_FALSE(solve_parameterized(instance_for(r6, 2)).solution.has_value());
    const SearchResult found = solve_parameterized(instance_for(r6, 3));
    REQUIRE(found.solution.has_value());
    CHECK(found.solution->size() <= 3);
    CHECK(edge_free_after(r6, *found.solution));

    CHECK_THROWS_AS(solve_parameterized(instance_for(r4, -1)), input_error);
}

TEST_CASE("search agrees with the oracle under every flag combination") {
    std::mt19937_64 rng(43);
    const SearchOptions configs[] = {
        {true, true, true},   {false, true, true},  {true, false, true},
        {true, true, false},  {false, false, false},
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 11, 26);
        const std::size_t opt = brute_force_min_deletions(r);
        for (long long k = 0; k <= static_cast<long long>(r.size()); ++k) {
            const bool expected = opt <= static_cast<std::size_t>(k);
            for (const SearchOptions& opts : configs) {
                const SearchResult res = solve_parameterized(instance_for(r, k), opts);
                CHECK(res.solution.has_value() == expected);
                if (res.solution) {
                    CHECK(res.solution->size() <= static_cast<std::size_t>(k));
                    CHECK(edge_free_after(r, *res.solution));
                }
            }
        }
    }
}

TEST_CASE("node counts stay within the branching envelope") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Ruler r = random_ruler(rng, rng() % 10, 24);
        const long long k = static_cast<long long>(rng() % 7);
        const SearchResult res = solve_parameterized(instance_for(r, k));
        const double bound = std::pow(4.0, static_cast<double>(k));
        CHECK(static_cast<double>(res.stats.nodes_visited) <= std::max(1.0, bound));
    }
}

TEST_CASE("search is deterministic") {
    const Ruler r = consecutive_ruler(12);
    const SearchResult a = solve_parameterized(instance_for(r, 7));
    const SearchResult b = solve_parameterized(instance_for(r, 7));
    REQUIRE(a.solution.has_value());
    CHECK(a.solution == b.solution);
    CHECK(a.stats.nodes_visited == b.stats.nodes_visited);
    CHECK(a.stats.cement_deletions == b.stats.cement_deletions);
}

TEST_CASE("cementation reduces search tree size at the optimal budget") {
    const Ruler r = consecutive_ruler(14);
    const long long k = static_cast<long long>(brute_force_min_deletions(r));
    const SearchResult with = solve_parameterized(instance_for(r, k), {true, true, true});
    const SearchResult without = solve_parameterized(instance_for(r, k), {false, true, true});
    REQUIRE(with.solution.has_value());
    REQUIRE(without.solution.has_value());
    CHECK(with.stats.nodes_visited < without.stats.nodes_visited);
}

TEST_CASE("choose_branching_edge prefers few free vertices then 3-edges") {
    DeletionInstance inst;
    inst.graph = Hypergraph({0, 1, 2, 10, 11, 12, 13},
                            {Edge(0, 1, 2), Edge(10, 11, 12, 13)});
    CHECK(choose_branching_edge(inst) == Edge(0, 1, 2)); // 3 free beats 4 free

    inst.cemented = {10, 11};
    CHECK(choose_branching_edge(inst) == Edge(10, 11, 12, 13)); // 2 free beats 3 free

    DeletionInstance all4;
    all4.graph = Hypergraph({0, 1, 2, 3, 4, 5, 6, 7},
                            {Edge(4, 5, 6, 7), Edge(0, 1, 2, 3)});
    CHECK(choose_branching_edge(all4) == Edge(0, 1, 2, 3)); // lexicographic tie-break

    DeletionInstance empty;
    empty.graph = build_improved(Ruler({0, 1, 3}));
    CHECK_THROWS_AS(choose_branching_edge(empty), input_error);
}

TEST_CASE("find_dominating_vertex") {
    const Hypergraph single({5, 7, 9}, {Edge(5, 7, 9)});
    const auto pair = find_dominating_vertex(single);
    REQUIRE(pair.has_value());
    CHECK(pair->first == 7);  // smallest dominator of the smallest dominated vertex
    CHECK(pair->second == 5);

    const auto h4 = find_dominating_vertex(build_improved(consecutive_ruler(4)));
    REQUIRE(h4.has_value());
    CHECK(h4->first == 1);
    CHECK(h4->second == 0);

    CHECK_FALSE(find_dominating_vertex(build_improved(Ruler({0, 1, 3}))).has_value());
}

TEST_CASE("cement_and_propagate forces conflicting marks out") {
    DeletionInstance inst;
    inst.graph = build_improved(consecutive_ruler(5));
    inst.budget = 4;
    inst.cemented = {0, 1};

    const auto updated = cement_and_propagate(inst, 3);
    REQUIRE(updated.has_value());
    // Distance 1 is fixed by {0,1}; marks 2 and 4 would recreate it next to 3.
    CHECK(updated->solution == std::vector<Mark>{2, 4});
    CHECK(updated->budget == 2);
    CHECK(updated->cemented == std::vector<Mark>{0, 1, 3});
    CHECK(updated->graph.vertex_count() == 3);
    CHECK_FALSE(updated->graph.vertex_index(2).has_value());

    // Cementing 2 makes {0,1,2} non-Golomb: abort.
    CHECK_FALSE(cement_and_propagate(inst, 2).has_value());
    CHECK_THROWS_AS(cement_and_propagate(inst, 99), input_error);
}

TEST_CASE("solutions returned extend the instance's prior solution") {
    DeletionInstance inst;
    const Ruler r = consecutive_ruler(4);
    inst.graph = build_improved(r);
    inst.budget = 1;
    inst.solution = {100};
    const SearchResult res = solve_parameterized(inst);
    REQUIRE(res.solution.has_value());
    CHECK(res.solution->size() == 2);
    CHECK(std::find(res.solution->begin(), res.solution->end(), 100) != res.solution->end());
}

TEST_CASE("a non-Golomb cemented seed admits no solution") {
    DeletionInstance inst;
    inst.graph = build_improved(consecutive_ruler(5));
    inst.budget = 5;
    inst.cemented = {0, 1, 2};
    CHECK_FALSE(solve_parameterized(inst).solution.has_value());
}

TEST_CASE("in-node kernelization is answer-preserving") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const Ruler r = random_ruler(rng, 4 + rng() % 8, 30);
        const long long k = static_cast<long long>(rng() % 6);
        const SearchResult with = solve_parameterized(instance_for(r, k), {true, true, true});
        const SearchResult without = solve_parameterized(instance_for(r, k), {true, true, false});
        CHECK(with.solution.has_value() == without.solution.has_value());
    }
}
