#pragma once

#include <vector>

#include "gsr/hypergraph.hpp"

namespace gsr {

struct KernelResult {
    Hypergraph graph;
    long long budget = 0; // k'; negative signals infeasibility
    std::vector<Mark> forced_deletions;
    std::vector<Mark> kept_marks; // removed but retained in every solution's complement
    bool infeasible = false;
};

// Lone edges: an edge disjoint from all others loses one deterministic
// representative (smallest mark) against the budget; its remaining
// vertices are kept.
KernelResult rule_lone_edges(const Hypergraph& h, long long k);

// Lone vertices: degree-0 vertices are removed and kept; budget unchanged.
KernelResult rule_lone_vertices(const Hypergraph& h, long long k);

// Leaf edges: an edge whose intersection with all other edges fits in a
// single vertex v loses v against the budget.
KernelResult rule_leaf_edges(const Hypergraph& h, long long k);

// High degree: a vertex in more than 3k 3-edges (resp. more than 3k^2
// 4-edges) must be deleted.
KernelResult rule_high_degree_3(const Hypergraph& h, long long k);
KernelResult rule_high_degree_4(const Hypergraph& h, long long k);

// Full reduction: lone edges, leaf edges and the high-degree rules looped
// to fixpoint, then lone vertices swept.
KernelResult kernelize(const Hypergraph& h, long long k);

// Kernel size predicate: at most 3k^2 3-edges, 3k^3 4-edges and
// 9k^3 + 2k^2 + k marks in edges.
bool within_kernel_bounds(const Hypergraph& h, long long k);
bool within_kernel_bounds(const GraphView& view, long long k);

namespace detail {

// Shared rules engine over a deletion view, used by kernelize and by the
// in-node reduction of the search. `cemented` (optional, indexed like base
// vertices) marks vertices that must not be deleted; a rule that would be
// forced to delete one makes the instance infeasible. Appends base vertex
// indices of budget-consuming deletions to `forced` and of degree-0
// removals to `kept`. Returns false iff infeasible.
bool reduce_to_fixpoint(GraphView& view, long long& k, const std::vector<char>* cemented,
                        std::vector<int>& forced, std::vector<int>& kept);

} // namespace detail

} // namespace gsr
