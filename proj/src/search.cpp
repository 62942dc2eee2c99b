#include "gsr/search.hpp"

#include <algorithm>
#include <unordered_set>

#include "gsr/kernel.hpp"

namespace gsr {

namespace {

// Dominated vertices scanned ascending, candidate dominators ascending;
// `cemented` (optional) excludes dominators that may not be deleted.
std::optional<std::pair<int, int>> find_dominating_pair(const GraphView& view,
                                                        const std::vector<char>* cemented) {
    const Hypergraph& base = view.base();
    std::vector<int> candidates;
    for (std::size_t u = 0; u < base.vertex_count(); ++u) {
        const int ui = static_cast<int>(u);
        if (!view.vertex_alive(ui) || view.degree(ui) == 0) continue;
        candidates.clear();
        bool first = true;
        for (int e : base.incident_edges(ui)) {
            if (!view.edge_alive(e)) continue;
            const Edge& edge = base.edges()[static_cast<std::size_t>(e)];
            if (first) {
                for (Mark m : edge.vertices()) {
                    const int v = *base.vertex_index(m);
                    if (v != ui) candidates.push_back(v);
                }
                first = false;
            } else {
                std::erase_if(candidates, [&](int v) { return !edge.contains(base.mark_of(v)); });
            }
            if (candidates.empty()) break;
        }
        for (int v : candidates) {
            if (cemented && (*cemented)[static_cast<std::size_t>(v)]) continue;
            return std::make_pair(v, ui);
        }
    }
    return std::nullopt;
}

// Minimum |e \ C|, 3-edges before 4-edges, then lexicographically smallest
// (= lowest edge index, since edges are stored in canonical order).
int pick_branching_edge(const GraphView& view, const std::vector<char>& cemented) {
    const Hypergraph& base = view.base();
    int best = -1;
    int best_free = 5;
    int best_size = 5;
    for (std::size_t e = 0; e < base.edge_count(); ++e) {
        if (!view.edge_alive(static_cast<int>(e))) continue;
        const Edge& edge = base.edges()[e];
        int free = 0;
        for (Mark m : edge.vertices()) {
            if (!cemented[static_cast<std::size_t>(*base.vertex_index(m))]) ++free;
        }
        if (free < best_free || (free == best_free && edge.size() < best_size)) {
            best = static_cast<int>(e);
            best_free = free;
            best_size = edge.size();
        }
    }
    return best;
}

class Searcher {
  public:
    Searcher(const Hypergraph& base, const SearchOptions& opts)
        : base_(base), view_(base), opts_(opts), cemented_(base.vertex_count(), 0) {}

    // Seeds the cemented set; returns false if it is not a Golomb ruler.
    bool seed_cemented(const std::vector<Mark>& marks) {
        for (Mark m : marks) {
            auto idx = base_.vertex_index(m);
            if (!idx) throw input_error("cemented mark " + std::to_string(m) + " is not a vertex");
            std::vector<Mark> fresh;
            if (!collect_new_distances(m, fresh)) return false;
            cemented_[static_cast<std::size_t>(*idx)] = 1;
            cem_stack_.push_back(*idx);
            for (Mark d : fresh) {
                cem_distances_.insert(d);
                cem_distance_log_.push_back(d);
            }
        }
        return true;
    }

    bool run(long long budget) {
        k_ = budget;
        return solve_node();
    }

    std::vector<Mark> solution_marks() const {
        std::vector<Mark> marks;
        marks.reserve(solution_.size());
        for (int v : solution_) marks.push_back(base_.mark_of(v));
        std::sort(marks.begin(), marks.end());
        return marks;
    }

    const SearchStats& stats() const { return stats_; }

  private:
    bool collect_new_distances(Mark vm, std::vector<Mark>& fresh) const {
        for (int u : cem_stack_) {
            const Mark um = base_.mark_of(u);
            const Mark d = vm > um ? vm - um : um - vm;
            if (d == 0 || cem_distances_.count(d)) return false;
            if (std::find(fresh.begin(), fresh.end(), d) != fresh.end()) return false;
            fresh.push_back(d);
        }
        return true;
    }

    // Adds v to the cemented set; false when the set stops being Golomb.
    bool cement_vertex(int v) {
        std::vector<Mark> fresh;
        if (!collect_new_distances(base_.mark_of(v), fresh)) return false;
        cemented_[static_cast<std::size_t>(v)] = 1;
        cem_stack_.push_back(v);
        for (Mark d : fresh) {
            cem_distances_.insert(d);
            cem_distance_log_.push_back(d);
        }
        return true;
    }

    // Every mark at distance |a-b| from a cemented mark would recreate a
    // fixed distance: force-delete it, abort if it is cemented itself.
    // Only triples involving the newly cemented v need scanning.
    bool propagate_cement(int v) {
        const Mark vm = base_.mark_of(v);
        const std::size_t n = cem_stack_.size() - 1; // members before v
        // v as the base mark, distance from an older pair
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const Mark a = base_.mark_of(cem_stack_[i]);
                const Mark b = base_.mark_of(cem_stack_[j]);
                const Mark d = a > b ? a - b : b - a;
                if (!force_delete_around(vm, d)) return false;
            }
        }
        // v in the distance pair, an older mark as base
        for (std::size_t i = 0; i < n; ++i) {
            const Mark b = base_.mark_of(cem_stack_[i]);
            const Mark d = vm > b ? vm - b : b - vm;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (!force_delete_around(base_.mark_of(cem_stack_[j]), d)) return false;
            }
        }
        return true;
    }

    bool force_delete_around(Mark base_mark, Mark dist) {
        const Mark candidates[2] = {base_mark + dist, base_mark >= dist ? base_mark - dist : 0};
        const bool valid[2] = {base_mark + dist >= base_mark, base_mark >= dist};
        for (int i = 0; i < 2; ++i) {
            if (!valid[i]) continue;
            auto idx = base_.vertex_index(candidates[i]);
            if (!idx) continue;
            if (cemented_[static_cast<std::size_t>(*idx)]) return false;
            if (view_.vertex_alive(*idx)) {
                view_.delete_vertex(*idx);
                solution_.push_back(*idx);
                --k_;
                ++stats_.cement_deletions;
            }
        }
        return true;
    }

    void unwind_cement(std::size_t stack_size, std::size_t distance_log_size) {
        while (cem_stack_.size() > stack_size) {
            cemented_[static_cast<std::size_t>(cem_stack_.back())] = 0;
            cem_stack_.pop_back();
        }
        while (cem_distance_log_.size() > distance_log_size) {
            cem_distances_.erase(cem_distance_log_.back());
            cem_distance_log_.pop_back();
        }
    }

    // Dominator branch: delete v, or a vertex of a shared edge that v does
    // not dominate. Returns an empty list when no usable pair exists.
    std::vector<int> domination_branch() const {
        auto pair = find_dominating_pair(view_, &cemented_);
        if (!pair) return {};
        const auto [v, u] = *pair;
        int shared_edge = -1;
        for (int e : base_.incident_edges(u)) {
            if (view_.edge_alive(e)) {
                shared_edge = e; // every alive edge of u contains v
                break;
            }
        }
        std::vector<int> branch;
        for (Mark m : base_.edges()[static_cast<std::size_t>(shared_edge)].vertices()) {
            const int w = *base_.vertex_index(m);
            if (w == v) {
                branch.push_back(w);
            } else if (!cemented_[static_cast<std::size_t>(w)] && !dominates(v, w)) {
                branch.push_back(w);
            }
        }
        return branch; // edge vertices are sorted, so this is ascending
    }

    bool dominates(int v, int w) const {
        const Mark vm = base_.mark_of(v);
        for (int e : base_.incident_edges(w)) {
            if (view_.edge_alive(e) && !base_.edges()[static_cast<std::size_t>(e)].contains(vm)) {
                return false;
            }
        }
        return true;
    }

    bool solve_node() {
        ++stats_.nodes_visited;
        const std::size_t view_cp = view_.checkpoint();
        const std::size_t sol_cp = solution_.size();
        const std::size_t cem_cp = cem_stack_.size();
        const std::size_t dist_cp = cem_distance_log_.size();
        const long long k_cp = k_;

        const auto fail = [&] {
            view_.rollback(view_cp);
            solution_.resize(sol_cp);
            k_ = k_cp;
            unwind_cement(cem_cp, dist_cp);
            return false;
        };

        // Re-entered whenever node-level forced deletions invalidate the
        // current branch list.
        while (true) {
            if (k_ < 0) return fail();
            if (view_.alive_edge_count() == 0) return true;
            if (opts_.inner_kernel) {
                const std::size_t before = solution_.size();
                std::vector<int> kept;
                const bool feasible =
                    detail::reduce_to_fixpoint(view_, k_, &cemented_, solution_, kept);
                stats_.rule_deletions += solution_.size() - before;
                if (!feasible || !within_kernel_bounds(view_, k_)) {
                    ++stats_.branches_aborted;
                    return fail();
                }
                if (view_.alive_edge_count() == 0) return true;
            }

            std::vector<int> branch;
            if (opts_.domination) branch = domination_branch();
            if (branch.empty()) {
                const int e = pick_branching_edge(view_, cemented_);
                for (Mark m : base_.edges()[static_cast<std::size_t>(e)].vertices()) {
                    const int v = *base_.vertex_index(m);
                    if (!cemented_[static_cast<std::size_t>(v)]) branch.push_back(v);
                }
            }
            if (branch.empty()) {
                // Branching edge fully cemented: the cemented set carries a
                // conflict, unreachable while it stays Golomb.
                ++stats_.branches_aborted;
                return fail();
            }

            bool invalidated = false;
            for (int v : branch) {
                if (!view_.vertex_alive(v)) {
                    invalidated = true; // a forced deletion already hit this edge
                    break;
                }
                const std::size_t cp = view_.checkpoint();
                const std::size_t scp = solution_.size();
                view_.delete_vertex(v);
                solution_.push_back(v);
                --k_;
                if (solve_node()) return true;
                view_.rollback(cp);
                solution_.resize(scp);
                ++k_;

                if (!opts_.cementation) continue;
                if (!cement_vertex(v) || !propagate_cement(v)) {
                    ++stats_.branches_aborted;
                    return fail();
                }
                if (k_ < 0) return fail();
                if (view_.alive_edge_count() == 0) return true;
            }
            if (!invalidated) return fail();
        }
    }

    const Hypergraph& base_;
    GraphView view_;
    SearchOptions opts_;
    SearchStats stats_;
    long long k_ = 0;
    std::vector<char> cemented_;
    std::vector<int> cem_stack_;
    std::unordered_set<Mark> cem_distances_;
    std::vector<Mark> cem_distance_log_;
    std::vector<int> solution_;
};

} // namespace

SearchResult solve_parameterized(const DeletionInstance& inst, const SearchOptions& opts) {
    if (inst.budget < 0) {
        throw input_error("search budget must be nonnegative");
    }
    SearchResult result;
    Searcher searcher(inst.graph, opts);
    if (!searcher.seed_cemented(inst.cemented)) {
        result.stats = searcher.stats();
        return result; // cemented seed is not Golomb: no admissible solution
    }
    if (searcher.run(inst.budget)) {
        std::vector<Mark> all = inst.solution;
        const auto found = searcher.solution_marks();
        all.insert(all.end(), found.begin(), found.end());
        std::sort(all.begin(), all.end());
        result.solution = std::move(all);
    }
    result.stats = searcher.stats();
    return result;
}

Edge choose_branching_edge(const DeletionInstance& inst) {
    if (inst.graph.edge_count() == 0) {
        throw input_error("choose_branching_edge requires at least one edge");
    }
    GraphView view(inst.graph);
    std::vector<char> cemented(inst.graph.vertex_count(), 0);
    for (Mark m : inst.cemented) {
        if (auto idx = inst.graph.vertex_index(m)) cemented[static_cast<std::size_t>(*idx)] = 1;
    }
    return inst.graph.edges()[static_cast<std::size_t>(pick_branching_edge(view, cemented))];
}

std::optional<std::pair<Mark, Mark>> find_dominating_vertex(const Hypergraph& h) {
    GraphView view(h);
    auto pair = find_dominating_pair(view, nullptr);
    if (!pair) return std::nullopt;
    return std::make_pair(h.mark_of(pair->first), h.mark_of(pair->second));
}

std::optional<DeletionInstance> cement_and_propagate(const DeletionInstance& inst, Mark v) {
    if (!inst.graph.vertex_index(v)) {
        throw input_error("cannot cement mark " + std::to_string(v) + ": not a vertex");
    }
    std::vector<Mark> cem = inst.cemented;
    cem.push_back(v);
    Ruler cem_ruler;
    try {
        cem_ruler = Ruler(cem);
    } catch (const input_error&) {
        return std::nullopt; // v already cemented
    }
    if (!is_golomb(cem_ruler)) return std::nullopt;

    GraphView view(inst.graph);
    DeletionInstance out;
    out.budget = inst.budget;
    out.cemented = cem_ruler.marks();
    out.solution = inst.solution;
    const auto& marks = cem_ruler.marks();
    const auto in_cemented = [&](Mark x) {
        return std::binary_search(marks.begin(), marks.end(), x);
    };
    const auto apply = [&](Mark base_mark, Mark dist) -> bool {
        const Mark candidates[2] = {base_mark + dist, base_mark - dist};
        const bool valid[2] = {base_mark + dist >= base_mark, base_mark >= dist};
        for (int i = 0; i < 2; ++i) {
            if (!valid[i]) continue;
            const Mark x = candidates[i];
            if (in_cemented(x)) return false;
            if (auto idx = inst.graph.vertex_index(x); idx && view.vertex_alive(*idx)) {
                view.delete_vertex(*idx);
                out.solution.push_back(x);
                --out.budget;
            }
        }
        return true;
    };
    // All triples a,b,c in the cemented set that involve v.
    for (std::size_t i = 0; i < cem.size(); ++i) {
        if (cem[i] == v) continue;
        for (std::size_t j = i + 1; j < cem.size(); ++j) {
            if (cem[j] == v) continue;
            const Mark d = cem[j] > cem[i] ? cem[j] - cem[i] : cem[i] - cem[j];
            if (!apply(v, d)) return std::nullopt;
            const Mark dv1 = v > cem[i] ? v - cem[i] : cem[i] - v;
            if (!apply(cem[j], dv1)) return std::nullopt;
            const Mark dv2 = v > cem[j] ? v - cem[j] : cem[j] - v;
            if (!apply(cem[i], dv2)) return std::nullopt;
        }
    }
    out.graph = view.materialize();
    std::sort(out.solution.begin(), out.solution.end());
    return out;
}

} // namespace gsr
