#pragma once

#include <cstdint>

#include "gsr/ruler.hpp"

namespace gsr {

struct OracleResult {
    std::size_t max_size = 0;
    Ruler witness;
    std::uint64_t instances_explored = 0;
};

// Exact maximum-cardinality Golomb subruler by descending-size subset
// enumeration with duplicate-difference pruning. Independent of the
// hypergraph/search modules by design; refuses rulers with more than
// 20 marks.
OracleResult brute_force_max_subruler(const Ruler& r);

// |r| - brute_force_max_subruler(r).max_size.
std::size_t brute_force_min_deletions(const Ruler& r);

} // namespace gsr
