#pragma once

#include <vector>

#include "gsr/hypergraph.hpp"
#include "gsr/ruler.hpp"
#include "gsr/search.hpp"

namespace gsr {

struct ParameterizedRun {
    long long k = 0;
    bool found = false;
    SearchStats stats;
};

struct SolveOutcome {
    Ruler best_subruler;
    std::vector<Mark> deletions;
    std::size_t greedy_bound = 0;
    std::vector<ParameterizedRun> runs; // one entry per parameter value tried

    SearchStats total_stats() const {
        SearchStats total;
        for (const auto& r : runs) total += r.stats;
        return total;
    }
};

// Repeatedly deletes a maximum-degree vertex (ties: smallest mark) until
// the graph is edge-free.
std::vector<Mark> greedy_vertex_deletion(const Hypergraph& h);

// Repeatedly deletes all vertices of the smallest remaining edge; at most
// four times the optimal number of deletions.
std::vector<Mark> greedy_edge_deletion(const Hypergraph& h);

// Maximum-cardinality Golomb subruler: both greedy bounds seed the
// parameter, then the parameterized search runs with k = |last solution|-1
// until it fails; the last success is optimal.
SolveOutcome find_max_golomb_subruler(const Ruler& r, const SearchOptions& opts = {});

// Maximum number of marks of any Golomb ruler of length at most max_length,
// found by solving the consecutive ruler {0..max_length}.
SolveOutcome max_marks_for_length(Mark max_length, const SearchOptions& opts = {});

} // namespace gsr
