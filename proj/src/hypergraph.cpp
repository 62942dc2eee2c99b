#include "gsr/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsr {

namespace {

void validate_edge_vertices(std::span<const Mark> v, int size) {
    for (int i = 1; i < size; ++i) {
        if (v[static_cast<std::size_t>(i - 1)] >= v[static_cast<std::size_t>(i)]) {
            throw input_error("edge vertices must be distinct");
        }
    }
}

} // namespace

Edge::Edge(Mark a, Mark b, Mark c) : v_{a, b, c, 0}, size_(3) {
    std::sort(v_.begin(), v_.begin() + 3);
    validate_edge_vertices({v_.data(), 3}, 3);
}

Edge::Edge(Mark a, Mark b, Mark c, Mark d) : v_{a, b, c, d}, size_(4) {
    std::sort(v_.begin(), v_.end());
    validate_edge_vertices({v_.data(), 4}, 4);
}

Edge::Edge(std::span<const Mark> verts) {
    if (verts.size() != 3 && verts.size() != 4) {
        throw input_error("edge must have 3 or 4 vertices");
    }
    size_ = static_cast<int>(verts.size());
    std::copy(verts.begin(), verts.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
    validate_edge_vertices({v_.data(), static_cast<std::size_t>(size_)}, size_);
}

bool Edge::contains(Mark m) const {
    for (int i = 0; i < size_; ++i) {
        if (v_[static_cast<std::size_t>(i)] == m) return true;
    }
    return false;
}

bool Edge::is_conflict() const {
    if (size_ == 3) {
        return v_[1] - v_[0] == v_[2] - v_[1];
    }
    return v_[1] - v_[0] == v_[3] - v_[2];
}

bool Edge::operator==(const Edge& o) const {
    return size_ == o.size_ && std::equal(v_.begin(), v_.begin() + size_, o.v_.begin());
}

std::strong_ordering Edge::operator<=>(const Edge& o) const {
    const int n = std::min(size_, o.size_);
    for (int i = 0; i < n; ++i) {
        if (auto c = v_[static_cast<std::size_t>(i)] <=> o.v_[static_cast<std::size_t>(i)]; c != 0) return c;
    }
    return size_ <=> o.size_;
}

Hypergraph::Hypergraph(std::vector<Mark> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw input_error("duplicate vertex in hypergraph");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    incidence_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        for (Mark m : edges_[e].vertices()) {
            auto idx = vertex_index(m);
            if (!idx) {
                throw input_error("edge uses mark " + std::to_string(m) + " that is not a vertex");
            }
            incidence_[static_cast<std::size_t>(*idx)].push_back(static_cast<int>(e));
        }
    }
}

std::optional<int> Hypergraph::vertex_index(Mark m) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), m);
    if (it == vertices_.end() || *it != m) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

bool Hypergraph::audit() const {
    std::size_t pins = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        for (int e : incidence_[v]) {
            if (e < 0 || static_cast<std::size_t>(e) >= edges_.size()) return false;
            if (!edges_[static_cast<std::size_t>(e)].contains(vertices_[v])) return false;
            ++pins;
        }
    }
    std::size_t expected = 0;
    for (const Edge& e : edges_) {
        expected += static_cast<std::size_t>(e.size());
        for (Mark m : e.vertices()) {
            if (!vertex_index(m)) return false;
        }
    }
    if (pins != expected) return false;
    return std::is_sorted(edges_.begin(), edges_.end()) &&
           std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

Hypergraph build_naive(const Ruler& r) {
    const auto& m = r.marks();
    const std::size_t n = m.size();
    std::vector<Edge> edges;
    // Two disjoint pairs with equal difference: every ordered 4-tuple from
    // the tuple scan reduces to such a configuration.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Mark d1 = m[j] - m[i];
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    if (m[l] - m[k] == d1) {
                        edges.emplace_back(m[i], m[j], m[k], m[l]);
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (m[j] - m[i] == m[k] - m[j]) {
                    edges.emplace_back(m[i], m[j], m[k]);
                }
            }
        }
    }
    return Hypergraph(m, std::move(edges));
}

namespace {

// Shared inner step of the improved construction: all edges whose smaller
// generating pair starts at mark index a.
void improved_edges_from(const std::vector<Mark>& m, std::size_t a, Mark half,
                         const std::map<Mark, std::vector<std::pair<Mark, Mark>>>& pairs_by_distance,
                         std::vector<Edge>& out) {
    for (std::size_t b = a + 1; b < m.size() && m[b] - m[a] <= half; ++b) {
        auto it = pairs_by_distance.find(m[b] - m[a]);
        if (it == pairs_by_distance.end()) continue;
        for (const auto& [k, l] : it->second) {
            if (k < m[b]) continue;
            if (k == m[b]) {
                out.emplace_back(m[a], m[b], l); // shared mark: midpoint triple
            } else {
                out.emplace_back(m[a], m[b], k, l);
            }
        }
    }
}

std::map<Mark, std::vector<std::pair<Mark, Mark>>> short_distance_pairs(const std::vector<Mark>& m,
                                                                        Mark half) {
    std::map<Mark, std::vector<std::pair<Mark, Mark>>> pairs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size() && m[j] - m[i] <= half; ++j) {
            pairs[m[j] - m[i]].emplace_back(m[i], m[j]);
        }
    }
    return pairs;
}

} // namespace

Hypergraph build_improved(const Ruler& r) {
    const auto& m = r.marks();
    if (m.size() < 3) return Hypergraph(m, {});
    const Mark half = (m.back() - m.front()) / 2;
    const auto pairs = short_distance_pairs(m, half);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < m.size(); ++a) {
        improved_edges_from(m, a, half, pairs, edges);
    }
    return Hypergraph(m, std::move(edges));
}

Hypergraph build_improved_parallel(const Ruler& r) {
    const auto& m = r.marks();
    if (m.size() < 3) return Hypergraph(m, {});
    const Mark half = (m.back() - m.front()) / 2;
    const auto pairs = short_distance_pairs(m, half);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::vector<std::vector<Edge>> buckets(static_cast<std::size_t>(threads));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        auto& local = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
        for (long long a = 0; a < static_cast<long long>(m.size()); ++a) {
            improved_edges_from(m, static_cast<std::size_t>(a), half, pairs, local);
        }
    }
#else
    for (std::size_t a = 0; a < m.size(); ++a) {
        improved_edges_from(m, a, half, pairs, buckets[0]);
    }
#endif
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    std::vector<Edge> edges;
    edges.reserve(total);
    for (auto& b : buckets) {
        edges.insert(edges.end(), b.begin(), b.end());
    }
    // Canonical sort in the Hypergraph constructor makes the result
    // independent of the thread partition.
    return Hypergraph(m, std::move(edges));
}

bool is_golomb_via_graph(const Ruler& r) {
    return build_improved(r).edge_count() == 0;
}

std::uint64_t consecutive_edge_lower_bound(std::uint64_t n) {
    if (n < 2 || n % 2 != 0) {
        throw input_error("consecutive_edge_lower_bound requires even n >= 2");
    }
    std::uint64_t total = 0;
    for (std::uint64_t delta = 1; delta <= n / 2; ++delta) {
        for (std::uint64_t j = 0; j + 2 * delta <= n; ++j) {
            total += (n - delta) - (j + delta) + 1;
        }
    }
    return total;
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices: " << h.vertex_count() << " edges: " << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (int i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

GraphView::GraphView(const Hypergraph& base)
    : base_(&base),
      vertex_alive_(base.vertex_count(), 1),
      edge_alive_(base.edge_count(), 1),
      deg3_(base.vertex_count(), 0),
      deg4_(base.vertex_count(), 0) {
    for (const Edge& e : base.edges()) {
        (e.size() == 3 ? alive_edges3_ : alive_edges4_)++;
        for (Mark m : e.vertices()) {
            const int v = *base.vertex_index(m);
            (e.size() == 3 ? deg3_ : deg4_)[static_cast<std::size_t>(v)]++;
        }
    }
    for (std::size_t v = 0; v < base.vertex_count(); ++v) {
        if (deg3_[v] + deg4_[v] > 0) ++verts_in_edges_;
    }
}

void GraphView::kill_edge(int e) {
    edge_alive_[static_cast<std::size_t>(e)] = 0;
    const Edge& edge = base_->edges()[static_cast<std::size_t>(e)];
    (edge.size() == 3 ? alive_edges3_ : alive_edges4_)--;
    for (Mark m : edge.vertices()) {
        const int u = *base_->vertex_index(m);
        auto& deg = (edge.size() == 3 ? deg3_ : deg4_);
        deg[static_cast<std::size_t>(u)]--;
        if (vertex_alive_[static_cast<std::size_t>(u)] && degree(u) == 0) --verts_in_edges_;
    }
    log_.push_back({LogEntry::EdgeKilled, e});
}

void GraphView::revive_edge(int e) {
    edge_alive_[static_cast<std::size_t>(e)] = 1;
    const Edge& edge = base_->edges()[static_cast<std::size_t>(e)];
    (edge.size() == 3 ? alive_edges3_ : alive_edges4_)++;
    for (Mark m : edge.vertices()) {
        const int u = *base_->vertex_index(m);
        auto& deg = (edge.size() == 3 ? deg3_ : deg4_);
        if (vertex_alive_[static_cast<std::size_t>(u)] && degree(u) == 0) ++verts_in_edges_;
        deg[static_cast<std::size_t>(u)]++;
    }
}

void GraphView::delete_vertex(int v) {
    for (int e : base_->incident_edges(v)) {
        if (edge_alive_[static_cast<std::size_t>(e)]) kill_edge(e);
    }
    vertex_alive_[static_cast<std::size_t>(v)] = 0;
    log_.push_back({LogEntry::VertexKilled, v});
}

void GraphView::rollback(std::size_t checkpoint) {
    while (log_.size() > checkpoint) {
        const LogEntry entry = log_.back();
        log_.pop_back();
        if (entry.kind == LogEntry::VertexKilled) {
            vertex_alive_[static_cast<std::size_t>(entry.index)] = 1;
        } else {
            revive_edge(entry.index);
        }
    }
}

int GraphView::first_alive_edge() const {
    for (std::size_t e = 0; e < edge_alive_.size(); ++e) {
        if (edge_alive_[e]) return static_cast<int>(e);
    }
    return -1;
}

Hypergraph GraphView::materialize() const {
    std::vector<Mark> verts;
    for (std::size_t v = 0; v < vertex_alive_.size(); ++v) {
        if (vertex_alive_[v]) verts.push_back(base_->vertices()[v]);
    }
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < edge_alive_.size(); ++e) {
        if (edge_alive_[e]) edges.push_back(base_->edges()[e]);
    }
    return Hypergraph(std::move(verts), std::move(edges));
}

} // namespace gsr
