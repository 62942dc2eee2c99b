#include "gsr/oracle.hpp"

#include <algorithm>

namespace gsr {

namespace {

constexpr std::size_t kMaxOracleMarks = 20;

struct Enumerator {
    const std::vector<Mark>& marks;
    std::size_t target = 0;
    std::uint64_t explored = 0;
    std::vector<Mark> chosen;
    std::vector<Mark> diffs; // differences among chosen, unsorted

    bool extend_ok(Mark candidate) const {
        for (Mark c : chosen) {
            const Mark d = candidate - c;
            if (std::find(diffs.begin(), diffs.end(), d) != diffs.end()) return false;
        }
        // New differences must also be pairwise distinct among themselves:
        // candidate - c1 == candidate - c2 would need c1 == c2.
        return true;
    }

    // Lexicographic subsets of exactly `target` marks, pruned as soon as a
    // duplicate difference appears.
    bool search(std::size_t from) {
        ++explored;
        if (chosen.size() == target) return true;
        const std::size_t needed = target - chosen.size();
        for (std::size_t i = from; i + needed <= marks.size(); ++i) {
            if (!extend_ok(marks[i])) continue;
            const std::size_t diffs_before = diffs.size();
            for (Mark c : chosen) diffs.push_back(marks[i] - c);
            chosen.push_back(marks[i]);
            if (search(i + 1)) return true;
            chosen.pop_back();
            diffs.resize(diffs_before);
        }
        return false;
    }
};

} // namespace

OracleResult brute_force_max_subruler(const Ruler& r) {
    if (r.size() > kMaxOracleMarks) {
        throw guard_error("oracle refuses rulers with more than " +
                          std::to_string(kMaxOracleMarks) + " marks (got " +
                          std::to_string(r.size()) + ")");
    }
    OracleResult result;
    Enumerator en{r.marks(), 0, 0, {}, {}};
    for (std::size_t size = r.size(); size > 0; --size) {
        en.target = size;
        en.chosen.clear();
        en.diffs.clear();
        if (en.search(0)) {
            result.max_size = size;
            result.witness = Ruler(en.chosen);
            result.instances_explored = en.explored;
            return result;
        }
    }
    result.max_size = 0;
    result.witness = Ruler{};
    result.instances_explored = en.explored;
    return result;
}

std::size_t brute_force_min_deletions(const Ruler& r) {
    return r.size() - brute_force_max_subruler(r).max_size;
}

} // namespace gsr
