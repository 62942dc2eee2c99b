#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "gsr/ruler.hpp"
#include "gsr/search.hpp"

namespace gsr::cli {

// Uniform exit codes: 0 ok, 1 negative decision, 2 input error, 3 guard error.
constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kGuardError = 3;

struct CommonFlags {
    std::optional<long long> k;
    bool no_cement = false;
    bool no_domination = false;
    bool no_inner_kernel = false;
    std::uint64_t seed = 1;
    bool json = false;

    SearchOptions search_options() const {
        return SearchOptions{!no_cement, !no_domination, !no_inner_kernel};
    }
};

// Ruler inputs: a file path, "range:N" for {0..N-1}, or
// "random:<marks>:<maxvalue>" drawn deterministically from the seed.
Ruler load_input(const std::string& descriptor, std::uint64_t seed);

int cmd_solve(const std::string& input, const CommonFlags& flags, std::ostream& out);
int cmd_ogr(Mark max_length, const CommonFlags& flags, std::ostream& out);
int cmd_graph(const std::string& input, const CommonFlags& flags, std::ostream& out);
int cmd_kernelize(const std::string& input, long long k, const CommonFlags& flags,
                  std::ostream& out);
int cmd_oracle(const std::string& input, const CommonFlags& flags, std::ostream& out);
int cmd_validate(const std::string& input, const CommonFlags& flags, std::ostream& out);
int cmd_reduce_sat(const std::string& formula_path, long long k, const CommonFlags& flags,
                   std::ostream& out);

struct BenchSpec {
    std::size_t min_marks = 10;
    std::size_t max_marks = 20;
    int jobs = 1;
};

int cmd_bench(const BenchSpec& spec, const CommonFlags& flags, std::ostream& out);

/// One benchmark run; serializes to JSON and back without loss.
struct RunRecord {
    std::string command;
    std::string input;
    std::string config;
    double wall_ms = 0.0;
    SearchStats stats;
    std::string result_summary;

    bool operator==(const RunRecord&) const = default;

    std::string to_json() const;
    static RunRecord from_json(const std::string& text);
};

} // namespace gsr::cli
