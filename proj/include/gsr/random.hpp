#pragma once

#include <random>

#include "gsr/ruler.hpp"

namespace gsr {

// Deterministic random ruler: `marks` distinct values from [0, max_value].
// Used by the CLI's random: inputs and by the test corpora.
inline Ruler random_ruler(std::mt19937_64& rng, std::size_t marks, Mark max_value) {
    if (marks > max_value + 1) {
        throw input_error("cannot draw " + std::to_string(marks) + " distinct marks from [0, " +
                          std::to_string(max_value) + "]");
    }
    std::vector<Mark> chosen;
    while (chosen.size() < marks) {
        const Mark candidate = rng() % (max_value + 1);
        if (std::find(chosen.begin(), chosen.end(), candidate) == chosen.end()) {
            chosen.push_back(candidate);
        }
    }
    return Ruler(std::move(chosen));
}

} // namespace gsr
