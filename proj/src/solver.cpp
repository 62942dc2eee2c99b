#include "gsr/solver.hpp"

#include <algorithm>

namespace gsr {

std::vector<Mark> greedy_vertex_deletion(const Hypergraph& h) {
    GraphView view(h);
    std::vector<Mark> deleted;
    while (view.alive_edge_count() > 0) {
        int best = -1;
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            const int vi = static_cast<int>(v);
            if (!view.vertex_alive(vi)) continue;
            if (best < 0 || view.degree(vi) > view.degree(best)) best = vi;
        }
        view.delete_vertex(best);
        deleted.push_back(h.mark_of(best));
    }
    return deleted;
}

std::vector<Mark> greedy_edge_deletion(const Hypergraph& h) {
    GraphView view(h);
    std::vector<Mark> deleted;
    for (int e = view.first_alive_edge(); e >= 0; e = view.first_alive_edge()) {
        for (Mark m : h.edges()[static_cast<std::size_t>(e)].vertices()) {
            const int v = *h.vertex_index(m);
            if (view.vertex_alive(v)) {
                view.delete_vertex(v);
                deleted.push_back(m);
            }
        }
    }
    std::sort(deleted.begin(), deleted.end());
    return deleted;
}

SolveOutcome find_max_golomb_subruler(const Ruler& r, const SearchOptions& opts) {
    SolveOutcome outcome;
    Hypergraph graph = build_improved(r);

    auto by_vertex = greedy_vertex_deletion(graph);
    const auto by_edge = greedy_edge_deletion(graph);
    std::sort(by_vertex.begin(), by_vertex.end());
    const auto& seed = by_vertex.size() <= by_edge.size() ? by_vertex : by_edge;
    outcome.greedy_bound = seed.size();
    outcome.deletions = seed;

    long long k = static_cast<long long>(seed.size());
    while (true) {
        DeletionInstance inst;
        inst.graph = graph;
        inst.budget = k;
        SearchResult res = solve_parameterized(inst, opts);
        outcome.runs.push_back({k, res.solution.has_value(), res.stats});
        if (!res.solution) break;
        outcome.deletions = *res.solution;
        if (res.solution->empty()) break; // cannot do better than zero deletions
        k = static_cast<long long>(res.solution->size()) - 1;
    }

    std::vector<Mark> remaining;
    for (Mark m : r.marks()) {
        if (!std::binary_search(outcome.deletions.begin(), outcome.deletions.end(), m)) {
            remaining.push_back(m);
        }
    }
    outcome.best_subruler = Ruler(std::move(remaining));
    return outcome;
}

SolveOutcome max_marks_for_length(Mark max_length, const SearchOptions& opts) {
    return find_max_golomb_subruler(consecutive_ruler(static_cast<std::size_t>(max_length) + 1), opts);
}

} // namespace gsr
