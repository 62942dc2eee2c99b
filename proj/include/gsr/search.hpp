#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsr/hypergraph.hpp"

namespace gsr {

struct SearchOptions {
    bool cementation = true;
    bool domination = true;
    bool inner_kernel = true;
};

struct SearchStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t cement_deletions = 0;
    std::uint64_t rule_deletions = 0;
    std::uint64_t branches_aborted = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes_visited += o.nodes_visited;
        cement_deletions += o.cement_deletions;
        rule_deletions += o.rule_deletions;
        branches_aborted += o.branches_aborted;
        return *this;
    }
};

/// One mark-deletion decision instance: graph, remaining budget, the set
/// of cemented (deletion-forbidden) marks and the deletions spent so far.
struct DeletionInstance {
    Hypergraph graph;
    long long budget = 0;
    std::vector<Mark> cemented;
    std::vector<Mark> solution;
};

struct SearchResult {
    // Sorted deletion set (including the instance's prior solution marks)
    // whose removal leaves the graph edge-free, or absent.
    std::optional<std::vector<Mark>> solution;
    SearchStats stats;
};

// Bounded search tree with 3-edge preference, dominating-vertex branching,
// cementation and in-node reduction. Deterministic: all tie-breaking is
// lexicographic on mark values.
SearchResult solve_parameterized(const DeletionInstance& inst, const SearchOptions& opts = {});

// The edge minimizing |e \ cemented|, preferring 3-edges, then the
// lexicographically smallest. Errors if the graph is edge-free.
Edge choose_branching_edge(const DeletionInstance& inst);

// First (dominator, dominated) pair: v dominates u when v lies in every
// edge incident to u. Scans dominated vertices in ascending mark order,
// then candidate dominators ascending.
std::optional<std::pair<Mark, Mark>> find_dominating_vertex(const Hypergraph& h);

// Cements v and force-deletes every mark that would recreate a distance
// already fixed inside the cemented set. Returns the updated instance, or
// absent if the cemented set stops being Golomb or a forced mark is
// itself cemented.
std::optional<DeletionInstance> cement_and_propagate(const DeletionInstance& inst, Mark v);

} // namespace gsr
