#include "gsr/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gsr {

namespace {

using Pair = std::pair<Mark, Mark>;
using Triple = std::array<Mark, 3>;

// Count-first candidate tables: co-occurrence of vertex pairs in 3-edges
// and of pairs/triples in 4-edges. Pattern search only runs on entries
// that reach the lemma thresholds.
std::map<Pair, std::vector<int>> pairs_in_3edges(const Hypergraph& h) {
    std::map<Pair, std::vector<int>> table;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Edge& edge = h.edges()[e];
        if (edge.size() != 3) continue;
        auto v = edge.vertices();
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                table[{v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]}].push_back(
                    static_cast<int>(e));
            }
        }
    }
    return table;
}

std::map<Pair, std::vector<int>> pairs_in_4edges(const Hypergraph& h) {
    std::map<Pair, std::vector<int>> table;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Edge& edge = h.edges()[e];
        if (edge.size() != 4) continue;
        auto v = edge.vertices();
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                table[{v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]}].push_back(
                    static_cast<int>(e));
            }
        }
    }
    return table;
}

std::map<Triple, std::vector<int>> triples_in_4edges(const Hypergraph& h) {
    std::map<Triple, std::vector<int>> table;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Edge& edge = h.edges()[e];
        if (edge.size() != 4) continue;
        auto v = edge.vertices();
        for (int skip = 0; skip < 4; ++skip) {
            Triple t{};
            int pos = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != skip) t[static_cast<std::size_t>(pos++)] = v[static_cast<std::size_t>(i)];
            }
            table[t].push_back(static_cast<int>(e));
        }
    }
    return table;
}

bool has_edge(const Hypergraph& h, const Edge& e) {
    return std::binary_search(h.edges().begin(), h.edges().end(), e);
}

std::vector<Mark> union_of_edges(const Hypergraph& h, const std::vector<int>& edge_ids) {
    std::set<Mark> verts;
    for (int e : edge_ids) {
        for (Mark m : h.edges()[static_cast<std::size_t>(e)].vertices()) verts.insert(m);
    }
    return {verts.begin(), verts.end()};
}

void check_small_hand_impl(const Hypergraph& h, StructureReport* report) {
    for (const auto& [pair, edges] : pairs_in_3edges(h)) {
        if (report) {
            report->max_3edges_per_pair =
                std::max(report->max_3edges_per_pair, static_cast<int>(edges.size()));
        }
        if (edges.size() > 3 && report) {
            report->violations.push_back({"small-hand", {pair.first, pair.second}});
        }
    }
}

void check_large_hand_impl(const Hypergraph& h, StructureReport* report) {
    for (const auto& [triple, edges] : triples_in_4edges(h)) {
        if (report) {
            report->max_4edges_per_triple =
                std::max(report->max_4edges_per_triple, static_cast<int>(edges.size()));
        }
        if (edges.size() > 3 && report) {
            report->violations.push_back({"large-hand", {triple[0], triple[1], triple[2]}});
        }
    }
}

void check_rotor_impl(const Hypergraph& h, StructureReport* report) {
    // Three distinct 3-edges with a four-vertex union; any two of them
    // share two vertices, so candidates come from the pair table.
    std::set<std::vector<Mark>> seen;
    for (const auto& [pair, edges] : pairs_in_3edges(h)) {
        (void)pair;
        if (edges.size() < 2) continue;
        for (std::size_t a = 0; a < edges.size(); ++a) {
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                std::vector<Mark> u = union_of_edges(h, {edges[a], edges[b]});
                if (u.size() != 4) continue;
                int present = 0;
                for (int skip = 0; skip < 4; ++skip) {
                    Triple t{};
                    int pos = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (i != skip) t[static_cast<std::size_t>(pos++)] = u[static_cast<std::size_t>(i)];
                    }
                    if (has_edge(h, Edge(t[0], t[1], t[2]))) ++present;
                }
                if (present >= 3 && seen.insert(u).second && report) {
                    report->violations.push_back({"rotor", u});
                }
            }
        }
    }
}

void check_scissors_impl(const Hypergraph& h, StructureReport* report) {
    std::set<std::vector<Mark>> seen;
    for (const auto& [triple, edges] : triples_in_4edges(h)) {
        if (edges.size() < 2) continue;
        for (std::size_t a = 0; a < edges.size(); ++a) {
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                const Edge& ea = h.edges()[static_cast<std::size_t>(edges[a])];
                const Edge& eb = h.edges()[static_cast<std::size_t>(edges[b])];
                Mark d = 0, e_mark = 0;
                for (Mark m : ea.vertices()) {
                    if (std::find(triple.begin(), triple.end(), m) == triple.end()) d = m;
                }
                for (Mark m : eb.vertices()) {
                    if (std::find(triple.begin(), triple.end(), m) == triple.end()) e_mark = m;
                }
                bool companion = false;
                for (Mark m : triple) {
                    if (m != d && m != e_mark && has_edge(h, Edge(d, e_mark, m))) {
                        companion = true;
                        break;
                    }
                }
                if (!companion) {
                    std::vector<Mark> witness{triple[0], triple[1], triple[2], d, e_mark};
                    std::sort(witness.begin(), witness.end());
                    if (seen.insert(witness).second && report) {
                        report->violations.push_back({"scissors", witness});
                    }
                }
            }
        }
    }
}

void check_bird_of_prey_impl(const Hypergraph& h, StructureReport* report) {
    for (const auto& [pair, edges] : pairs_in_4edges(h)) {
        if (edges.size() < 3) continue;
        std::vector<Mark> u = union_of_edges(h, edges);
        std::set<Mark> inner(u.begin(), u.end());
        inner.erase(pair.first);
        inner.erase(pair.second);
        bool extra = false;
        for (const Edge& candidate : h.edges()) {
            bool inside = true;
            for (Mark m : candidate.vertices()) {
                if (!inner.count(m)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                extra = true;
                break;
            }
        }
        if (!extra && report) {
            report->violations.push_back({"bird-of-prey", u});
        }
    }
}

bool pattern_free(const Hypergraph& h, void (*impl)(const Hypergraph&, StructureReport*),
                  const char* name) {
    StructureReport report;
    impl(h, &report);
    for (const auto& v : report.violations) {
        if (v.pattern == name) return false;
    }
    return true;
}

} // namespace

bool check_small_hand(const Hypergraph& h) { return pattern_free(h, check_small_hand_impl, "small-hand"); }
bool check_large_hand(const Hypergraph& h) { return pattern_free(h, check_large_hand_impl, "large-hand"); }
bool check_rotor(const Hypergraph& h) { return pattern_free(h, check_rotor_impl, "rotor"); }
bool check_scissors(const Hypergraph& h) { return pattern_free(h, check_scissors_impl, "scissors"); }
bool check_bird_of_prey(const Hypergraph& h) {
    return pattern_free(h, check_bird_of_prey_impl, "bird-of-prey");
}

StructureReport validate_structure(const Hypergraph& h) {
    StructureReport report;
    check_small_hand_impl(h, &report);
    check_large_hand_impl(h, &report);
    check_rotor_impl(h, &report);
    check_scissors_impl(h, &report);
    check_bird_of_prey_impl(h, &report);
    return report;
}

std::string format_structure_report(const StructureReport& report) {
    std::ostringstream out;
    out << "max-3edges-per-pair: " << report.max_3edges_per_pair << '\n';
    out << "max-4edges-per-triple: " << report.max_4edges_per_triple << '\n';
    const char* names[] = {"small-hand", "large-hand", "rotor", "scissors", "bird-of-prey"};
    for (const char* name : names) {
        bool hit = false;
        for (const auto& v : report.violations) {
            if (v.pattern == name) hit = true;
        }
        out << name << ": " << (hit ? "violated" : "ok") << '\n';
    }
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
        out << "violation: " << v.pattern;
        for (Mark m : v.witness) out << ' ' << m;
        out << '\n';
    }
    return out.str();
}

} // namespace gsr
