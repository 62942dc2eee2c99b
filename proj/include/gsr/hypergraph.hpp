#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsr/ruler.hpp"

namespace gsr {

/// A conflict edge: 3 or 4 distinct marks, stored sorted.
/// A 3-edge {a,b,c} records a midpoint conflict (b-a = c-b); a 4-edge
/// {a,b,c,d} records two disjoint pairs measuring the same distance
/// (b-a = d-c in sorted order). The arithmetic property is guaranteed
/// for edges produced by the graph builders, not enforced here, so that
/// tests can build adversarial non-characteristic fixtures.
class Edge {
  public:
    Edge(Mark a, Mark b, Mark c);
    Edge(Mark a, Mark b, Mark c, Mark d);
    explicit Edge(std::span<const Mark> verts);

    int size() const { return size_; }
    std::span<const Mark> vertices() const { return {v_.data(), static_cast<std::size_t>(size_)}; }
    Mark operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    bool contains(Mark m) const;

    // True iff the sorted vertices satisfy the conflict arithmetic.
    bool is_conflict() const;
    // The distance whose double measurement caused this edge (b-a in sorted order).
    Mark generating_distance() const { return v_[1] - v_[0]; }

    bool operator==(const Edge& o) const;
    // Lexicographic on the sorted vertex sequence; a prefix sorts first,
    // which puts {0,1,2} before {0,1,2,3}.
    std::strong_ordering operator<=>(const Edge& o) const;

  private:
    std::array<Mark, 4> v_{};
    int size_ = 0;
};

/// The characteristic hypergraph of a ruler: one vertex per mark, one edge
/// per repeated-distance conflict. A ruler is Golomb iff its graph has no
/// edges. Immutable after construction; share freely across threads.
class Hypergraph {
  public:
    Hypergraph() = default;

    // Vertices are the ruler marks; edges are canonicalized (sorted,
    // deduplicated). Edges must only use listed vertices.
    Hypergraph(std::vector<Mark> vertices, std::vector<Edge> edges);

    const std::vector<Mark>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<int> vertex_index(Mark m) const;
    Mark mark_of(int vertex_idx) const { return vertices_[static_cast<std::size_t>(vertex_idx)]; }

    // Indices of edges incident to the given vertex index.
    const std::vector<int>& incident_edges(int vertex_idx) const {
        return incidence_[static_cast<std::size_t>(vertex_idx)];
    }

    // Consistency of the incidence index with the edge set.
    bool audit() const;

  private:
    std::vector<Mark> vertices_;            // sorted
    std::vector<Edge> edges_;               // sorted lexicographically, unique
    std::vector<std::vector<int>> incidence_;
};

// Tuple-scan construction, O(n^4). Reference implementation.
Hypergraph build_naive(const Ruler& r);

// Distance-map construction, O(n^3); only distances up to half the ruler
// length are enumerated. Produces the same edge set as build_naive.
Hypergraph build_improved(const Ruler& r);

// OpenMP version of build_improved; identical output, used by large
// constructions and the construction benchmark.
Hypergraph build_improved_parallel(const Ruler& r);

// True iff build_improved(r) has no edges; agrees with is_golomb.
bool is_golomb_via_graph(const Ruler& r);

// The closed-form triple sum counting non-overlapping same-distance pair
// placements on {0..n}; a lower bound on |E(H_{0..n})| for even n.
std::uint64_t consecutive_edge_lower_bound(std::uint64_t n);

// Dump format: "vertices: <n> edges: <m>" header, then one edge per line,
// sorted marks separated by single spaces, edges in lexicographic order.
std::string format_hypergraph(const Hypergraph& h);

/// Mutable deletion view over an immutable hypergraph, with an undo log.
/// A view is owned by a single search/kernelization pass at a time;
/// checkpoints and rollbacks restore any earlier state exactly.
class GraphView {
  public:
    explicit GraphView(const Hypergraph& base);

    const Hypergraph& base() const { return *base_; }

    bool vertex_alive(int v) const { return vertex_alive_[static_cast<std::size_t>(v)] != 0; }
    bool edge_alive(int e) const { return edge_alive_[static_cast<std::size_t>(e)] != 0; }

    int alive_edge_count() const { return alive_edges3_ + alive_edges4_; }
    int alive_3edge_count() const { return alive_edges3_; }
    int alive_4edge_count() const { return alive_edges4_; }
    // Alive vertices with at least one alive incident edge.
    int vertices_in_edges() const { return verts_in_edges_; }

    int degree(int v) const { return deg3_[static_cast<std::size_t>(v)] + deg4_[static_cast<std::size_t>(v)]; }
    int degree3(int v) const { return deg3_[static_cast<std::size_t>(v)]; }
    int degree4(int v) const { return deg4_[static_cast<std::size_t>(v)]; }

    // Kills the vertex and every alive edge incident to it.
    void delete_vertex(int v);

    std::size_t checkpoint() const { return log_.size(); }
    void rollback(std::size_t checkpoint);

    // Smallest alive edge in the canonical (lexicographic) edge order,
    // or -1 if the view is edge-free.
    int first_alive_edge() const;

    // The alive subgraph as a standalone hypergraph.
    Hypergraph materialize() const;

  private:
    void kill_edge(int e);
    void revive_edge(int e);

    struct LogEntry {
        enum Kind : std::uint8_t { VertexKilled, EdgeKilled };
        Kind kind;
        int index;
    };

    const Hypergraph* base_;
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    std::vector<int> deg3_, deg4_;
    int alive_edges3_ = 0, alive_edges4_ = 0;
    int verts_in_edges_ = 0;
    std::vector<LogEntry> log_;
};

} // namespace gsr
