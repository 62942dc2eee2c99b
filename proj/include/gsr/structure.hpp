#pragma once

#include <string>
#include <vector>

#include "gsr/hypergraph.hpp"

namespace gsr {

struct StructureViolation {
    std::string pattern;
    std::vector<Mark> witness;
};

struct StructureReport {
    int max_3edges_per_pair = 0;
    int max_4edges_per_triple = 0;
    std::vector<StructureViolation> violations;

    bool ok() const { return violations.empty(); }
};

// No pair of vertices lies in more than three common 3-edges.
bool check_small_hand(const Hypergraph& h);

// No triple of vertices lies in more than three common 4-edges.
bool check_large_hand(const Hypergraph& h);

// No three 3-edges span a common set of four vertices.
bool check_rotor(const Hypergraph& h);

// Two 4-edges sharing three vertices {a,b,c} must be accompanied by an
// edge {d,e,m} with m in {a,b,c}, d,e their private vertices.
bool check_scissors(const Hypergraph& h);

// A pair of vertices in three or more common 4-edges must be accompanied
// by an additional edge inside the union of those edges minus the pair.
bool check_bird_of_prey(const Hypergraph& h);

// Runs all five checks and aggregates counters plus violation witnesses.
StructureReport validate_structure(const Hypergraph& h);

std::string format_structure_report(const StructureReport& report);

} // namespace gsr
