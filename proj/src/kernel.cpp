#include "gsr/kernel.hpp"

#include <algorithm>

namespace gsr {

namespace {

bool is_cemented(const std::vector<char>* cemented, int v) {
    return cemented && (*cemented)[static_cast<std::size_t>(v)];
}

struct RuleContext {
    GraphView& view;
    long long& k;
    const std::vector<char>* cemented;
    std::vector<int>& forced;
    std::vector<int>& kept;
    bool infeasible = false;

    const Hypergraph& base() const { return view.base(); }

    void force_delete(int v) {
        view.delete_vertex(v);
        forced.push_back(v);
        --k;
        if (k < 0) infeasible = true;
    }

    // Smallest non-cemented vertex of the edge, or -1.
    int smallest_free(const Edge& e) const {
        for (Mark m : e.vertices()) {
            const int v = *base().vertex_index(m);
            if (!is_cemented(cemented, v)) return v;
        }
        return -1;
    }
};

// Edge whose vertices all have degree one: disjoint from every other edge.
bool lone_edges_pass(RuleContext& ctx) {
    bool changed = false;
    for (bool applied = true; applied && !ctx.infeasible;) {
        applied = false;
        for (std::size_t e = 0; e < ctx.base().edge_count(); ++e) {
            if (!ctx.view.edge_alive(static_cast<int>(e))) continue;
            const Edge& edge = ctx.base().edges()[e];
            bool lone = true;
            for (Mark m : edge.vertices()) {
                if (ctx.view.degree(*ctx.base().vertex_index(m)) != 1) {
                    lone = false;
                    break;
                }
            }
            if (!lone) continue;
            const int rep = ctx.smallest_free(edge);
            if (rep < 0) {
                ctx.infeasible = true; // every vertex cemented: the conflict is fixed
                return changed;
            }
            ctx.force_delete(rep);
            for (Mark m : edge.vertices()) {
                const int v = *ctx.base().vertex_index(m);
                if (v != rep && ctx.view.vertex_alive(v)) {
                    ctx.view.delete_vertex(v);
                    ctx.kept.push_back(v);
                }
            }
            applied = true;
            changed = true;
            break;
        }
    }
    return changed;
}

bool leaf_edges_pass(RuleContext& ctx) {
    bool changed = false;
    for (bool applied = true; applied && !ctx.infeasible;) {
        applied = false;
        for (std::size_t e = 0; e < ctx.base().edge_count(); ++e) {
            if (!ctx.view.edge_alive(static_cast<int>(e))) continue;
            const Edge& edge = ctx.base().edges()[e];
            int shared = -1;
            int shared_count = 0;
            for (Mark m : edge.vertices()) {
                const int v = *ctx.base().vertex_index(m);
                if (ctx.view.degree(v) >= 2) {
                    ++shared_count;
                    shared = v;
                }
            }
            if (shared_count > 1) continue;
            int target;
            if (shared_count == 1 && !is_cemented(ctx.cemented, shared)) {
                target = shared;
            } else {
                // Fall back to a degree-one vertex: all of them hit only
                // this edge, so any non-cemented one is optimal.
                target = -1;
                for (Mark m : edge.vertices()) {
                    const int v = *ctx.base().vertex_index(m);
                    if (v != shared && !is_cemented(ctx.cemented, v)) {
                        target = v;
                        break;
                    }
                }
                if (target < 0) {
                    ctx.infeasible = true;
                    return changed;
                }
            }
            ctx.force_delete(target);
            applied = true;
            changed = true;
            break;
        }
    }
    return changed;
}

bool high_degree_pass(RuleContext& ctx, bool three_edges) {
    bool changed = false;
    for (bool applied = true; applied && !ctx.infeasible;) {
        applied = false;
        if (ctx.k < 0) {
            ctx.infeasible = true;
            break;
        }
        const long long threshold = three_edges ? 3 * ctx.k : 3 * ctx.k * ctx.k;
        for (std::size_t v = 0; v < ctx.base().vertex_count(); ++v) {
            const int vi = static_cast<int>(v);
            if (!ctx.view.vertex_alive(vi)) continue;
            const long long deg = three_edges ? ctx.view.degree3(vi) : ctx.view.degree4(vi);
            if (deg <= threshold) continue;
            if (is_cemented(ctx.cemented, vi)) {
                ctx.infeasible = true;
                return changed;
            }
            ctx.force_delete(vi);
            applied = true;
            changed = true;
            break;
        }
    }
    return changed;
}

bool lone_vertices_pass(RuleContext& ctx) {
    bool changed = false;
    for (std::size_t v = 0; v < ctx.base().vertex_count(); ++v) {
        const int vi = static_cast<int>(v);
        if (ctx.view.vertex_alive(vi) && ctx.view.degree(vi) == 0) {
            ctx.view.delete_vertex(vi);
            ctx.kept.push_back(vi);
            changed = true;
        }
    }
    return changed;
}

KernelResult materialize_result(const Hypergraph& base, const GraphView& view, long long k,
                                const std::vector<int>& forced, const std::vector<int>& kept,
                                bool infeasible) {
    KernelResult result;
    result.graph = view.materialize();
    result.budget = k;
    result.infeasible = infeasible;
    for (int v : forced) result.forced_deletions.push_back(base.mark_of(v));
    for (int v : kept) result.kept_marks.push_back(base.mark_of(v));
    std::sort(result.forced_deletions.begin(), result.forced_deletions.end());
    std::sort(result.kept_marks.begin(), result.kept_marks.end());
    return result;
}

KernelResult run_single_rule(const Hypergraph& h, long long k, bool (*pass)(RuleContext&)) {
    if (k < 0) throw input_error("kernel rules require a nonnegative budget");
    GraphView view(h);
    std::vector<int> forced, kept;
    RuleContext ctx{view, k, nullptr, forced, kept};
    pass(ctx);
    return materialize_result(h, view, k, forced, kept, ctx.infeasible);
}

} // namespace

KernelResult rule_lone_edges(const Hypergraph& h, long long k) {
    return run_single_rule(h, k, lone_edges_pass);
}

KernelResult rule_lone_vertices(const Hypergraph& h, long long k) {
    return run_single_rule(h, k, lone_vertices_pass);
}

KernelResult rule_leaf_edges(const Hypergraph& h, long long k) {
    return run_single_rule(h, k, leaf_edges_pass);
}

KernelResult rule_high_degree_3(const Hypergraph& h, long long k) {
    return run_single_rule(h, k, [](RuleContext& ctx) { return high_degree_pass(ctx, true); });
}

KernelResult rule_high_degree_4(const Hypergraph& h, long long k) {
    return run_single_rule(h, k, [](RuleContext& ctx) { return high_degree_pass(ctx, false); });
}

namespace detail {

bool reduce_to_fixpoint(GraphView& view, long long& k, const std::vector<char>* cemented,
                        std::vector<int>& forced, std::vector<int>& kept) {
    RuleContext ctx{view, k, cemented, forced, kept};
    bool changed = true;
    while (changed && !ctx.infeasible) {
        changed = false;
        changed |= lone_edges_pass(ctx);
        if (ctx.infeasible) break;
        changed |= leaf_edges_pass(ctx);
        if (ctx.infeasible) break;
        changed |= high_degree_pass(ctx, true);
        if (ctx.infeasible) break;
        changed |= high_degree_pass(ctx, false);
    }
    if (!ctx.infeasible) lone_vertices_pass(ctx);
    return !ctx.infeasible;
}

} // namespace detail

KernelResult kernelize(const Hypergraph& h, long long k) {
    if (k < 0) throw input_error("kernelize requires a nonnegative budget");
    GraphView view(h);
    std::vector<int> forced, kept;
    const bool feasible = detail::reduce_to_fixpoint(view, k, nullptr, forced, kept);
    return materialize_result(h, view, k, forced, kept, !feasible);
}

bool within_kernel_bounds(const Hypergraph& h, long long k) {
    if (k < 0) return false;
    long long e3 = 0, e4 = 0;
    for (const Edge& e : h.edges()) (e.size() == 3 ? e3 : e4)++;
    long long verts_in_edges = 0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (!h.incident_edges(static_cast<int>(v)).empty()) ++verts_in_edges;
    }
    return e3 <= 3 * k * k && e4 <= 3 * k * k * k &&
           verts_in_edges <= 9 * k * k * k + 2 * k * k + k;
}

bool within_kernel_bounds(const GraphView& view, long long k) {
    if (k < 0) return false;
    return view.alive_3edge_count() <= 3 * k * k && view.alive_4edge_count() <= 3 * k * k * k &&
           view.vertices_in_edges() <= 9 * k * k * k + 2 * k * k + k;
}

} // namespace gsr
