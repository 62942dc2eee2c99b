#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsr/ruler.hpp"

namespace gsr {

/// 2-CNF with every literal negative. Clauses are unordered variable
/// pairs; two clauses over the same variables are rejected.
struct AntimonotoneFormula {
    int num_vars = 0;
    std::vector<std::pair<int, int>> clauses; // 1-based, first < second

    AntimonotoneFormula() = default;
    AntimonotoneFormula(int num_vars, std::vector<std::pair<int, int>> clauses);

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

/// Hard instance produced from a formula: variable marks V, clause marks
/// C_i, and the sought subruler size l = k + 2m.
struct ReducedInstance {
    Ruler ruler;
    Mark target_size = 0; // l
    std::vector<Mark> v_marks;
    std::vector<std::vector<Mark>> clause_marks; // clause_marks[i-1] = C_i
};

/// Simple undirected graph for the independent-set route; 1-based vertices.
struct SimpleGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

// One all-negative clause per edge: independent sets of size k correspond
// to satisfying assignments with at least k true variables.
AntimonotoneFormula formula_from_graph(const SimpleGraph& g);

// Construction: V = {2^((m+2)i)}, C_i = {2^((m+2)i) + 2^j - 1 : x_i in
// clause j}, l = k + 2m. Guarded so every mark stays below 2^63.
ReducedInstance reduce_to_ruler(const AntimonotoneFormula& f, long long k);

// Every edge of the instance's characteristic hypergraph must be a 4-edge
// with two V-marks whose variables share a clause plus the matching C_i
// and C_j marks, and distinct edges may only intersect inside V.
bool verify_reduction_structure(const ReducedInstance& inst);

// Powers of two {2^1 .. 2^count}: always a Golomb ruler.
Ruler generate_beta_ruler(std::size_t count);

// {2^(d*i) + f(i) : 1 <= i <= count} with 0 <= f(i) <= 2^d, d >= 2: a
// Golomb ruler with pairwise distances at least 2^(2d-1).
Ruler generate_beta_approx(unsigned d, const std::function<Mark(std::size_t)>& f, std::size_t count);

// Largest number of true variables over all satisfying assignments,
// checked exhaustively (formulas here are tiny).
int max_true_assignment(const AntimonotoneFormula& f);

// Text format: header "p wcnf2 <vars> <clauses>", one clause per line as
// two positive variable indices; '#' comments allowed.
AntimonotoneFormula parse_formula_text(std::string_view text);
AntimonotoneFormula load_formula_file(const std::filesystem::path& path);
std::string format_formula(const AntimonotoneFormula& f);

} // namespace gsr
