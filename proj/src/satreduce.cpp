#include "gsr/satreduce.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "gsr/hypergraph.hpp"

namespace gsr {

AntimonotoneFormula::AntimonotoneFormula(int vars, std::vector<std::pair<int, int>> cls)
    : num_vars(vars), clauses(std::move(cls)) {
    if (num_vars < 0) throw input_error("negative variable count");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : clauses) {
        if (a > b) std::swap(a, b);
        if (a == b) throw input_error("clause with a repeated variable");
        if (a < 1 || b > num_vars) throw input_error("clause variable out of range");
        if (!seen.insert({a, b}).second) {
            throw input_error("two clauses over the same variables");
        }
    }
}

AntimonotoneFormula formula_from_graph(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> clauses;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw input_error("self-loop in graph");
        if (u < 1 || v > g.num_vertices) throw input_error("graph edge endpoint out of range");
        if (!seen.insert({u, v}).second) throw input_error("duplicate edge in graph");
        clauses.emplace_back(u, v);
    }
    return AntimonotoneFormula(g.num_vertices, std::move(clauses));
}

ReducedInstance reduce_to_ruler(const AntimonotoneFormula& f, long long k) {
    const long long m = f.num_clauses();
    const long long n = f.num_vars;
    if (k < 0) throw input_error("reduction parameter k must be nonnegative");
    if ((m + 2) * n > 62) {
        throw guard_error("reduction marks would exceed 2^63: (m+2)*n = " +
                          std::to_string((m + 2) * n) + " > 62");
    }
    ReducedInstance inst;
    inst.target_size = static_cast<Mark>(k + 2 * m);
    inst.clause_marks.assign(static_cast<std::size_t>(n), {});
    std::vector<Mark> marks;
    for (long long i = 1; i <= n; ++i) {
        const Mark base = Mark{1} << ((m + 2) * i);
        inst.v_marks.push_back(base);
        marks.push_back(base);
    }
    for (long long j = 1; j <= m; ++j) {
        const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
        for (int var : {clause.first, clause.second}) {
            const Mark mark = inst.v_marks[static_cast<std::size_t>(var - 1)] + (Mark{1} << j) - 1;
            inst.clause_marks[static_cast<std::size_t>(var - 1)].push_back(mark);
            marks.push_back(mark);
        }
    }
    inst.ruler = Ruler(std::move(marks));
    return inst;
}

bool verify_reduction_structure(const ReducedInstance& inst) {
    const Hypergraph h = build_improved(inst.ruler);
    const auto& v = inst.v_marks;
    const auto in_v = [&](Mark m) { return std::find(v.begin(), v.end(), m) != v.end(); };
    const auto clause_set_of = [&](Mark m) -> int {
        for (std::size_t i = 0; i < inst.clause_marks.size(); ++i) {
            const auto& ci = inst.clause_marks[i];
            if (std::find(ci.begin(), ci.end(), m) != ci.end()) return static_cast<int>(i);
        }
        return -1;
    };

    for (const Edge& e : h.edges()) {
        if (e.size() != 4) return false;
        std::vector<Mark> vmarks, cmarks;
        for (Mark m : e.vertices()) {
            (in_v(m) ? vmarks : cmarks).push_back(m);
        }
        if (vmarks.size() != 2 || cmarks.size() != 2) return false;
        const int vi = static_cast<int>(
            std::find(v.begin(), v.end(), vmarks[0]) - v.begin());
        const int vj = static_cast<int>(
            std::find(v.begin(), v.end(), vmarks[1]) - v.begin());
        const int ci = clause_set_of(cmarks[0]);
        const int cj = clause_set_of(cmarks[1]);
        if (ci < 0 || cj < 0) return false;
        if (!((ci == vi && cj == vj) || (ci == vj && cj == vi))) return false;
        // Both clause marks must carry the same clause offset.
        const Mark off0 = cmarks[0] - v[static_cast<std::size_t>(ci)];
        const Mark off1 = cmarks[1] - v[static_cast<std::size_t>(cj)];
        if (off0 != off1) return false;
    }
    // Distinct edges intersect only inside V.
    for (std::size_t a = 0; a < h.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
            for (Mark m : h.edges()[a].vertices()) {
                if (h.edges()[b].contains(m) && !in_v(m)) return false;
            }
        }
    }
    return true;
}

Ruler generate_beta_ruler(std::size_t count) {
    if (count > 62) {
        throw guard_error("beta ruler would exceed the 64-bit mark guard");
    }
    std::vector<Mark> marks;
    for (std::size_t i = 1; i <= count; ++i) {
        marks.push_back(Mark{1} << i);
    }
    return Ruler(std::move(marks));
}

Ruler generate_beta_approx(unsigned d, const std::function<Mark(std::size_t)>& f,
                           std::size_t count) {
    if (d < 2) throw input_error("beta approximation requires d >= 2");
    if (static_cast<std::uint64_t>(d) * count > 62) {
        throw guard_error("beta approximation would exceed the 64-bit mark guard");
    }
    std::vector<Mark> marks;
    for (std::size_t i = 1; i <= count; ++i) {
        const Mark noise = f(i);
        if (noise > (Mark{1} << d)) {
            throw input_error("beta approximation noise exceeds 2^d");
        }
        marks.push_back((Mark{1} << (d * i)) + noise);
    }
    return Ruler(std::move(marks));
}

int max_true_assignment(const AntimonotoneFormula& f) {
    if (f.num_vars > 20) throw guard_error("exhaustive assignment check limited to 20 variables");
    int best = -1;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f.num_vars); ++bits) {
        bool ok = true;
        for (const auto& [a, b] : f.clauses) {
            if ((bits >> (a - 1) & 1) && (bits >> (b - 1) & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<int>(std::popcount(bits)));
    }
    return best; // all-false always satisfies, so best >= 0
}

AntimonotoneFormula parse_formula_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool header_seen = false;
    int vars = 0, expected_clauses = 0;
    std::vector<std::pair<int, int>> clauses;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!header_seen) {
            std::string tag;
            if (first != "p" || !(ls >> tag) || tag != "wcnf2" || !(ls >> vars >> expected_clauses)) {
                throw input_error("formula must start with a 'p wcnf2 <vars> <clauses>' header");
            }
            header_seen = true;
            continue;
        }
        int a = 0, b = 0;
        std::istringstream cs(line);
        if (!(cs >> a >> b) || a <= 0 || b <= 0) {
            throw input_error("malformed clause line: '" + line + "'");
        }
        clauses.emplace_back(a, b);
    }
    if (!header_seen) throw input_error("missing formula header");
    if (static_cast<int>(clauses.size()) != expected_clauses) {
        throw input_error("header announces " + std::to_string(expected_clauses) +
                          " clauses but " + std::to_string(clauses.size()) + " were given");
    }
    return AntimonotoneFormula(vars, std::move(clauses));
}

AntimonotoneFormula load_formula_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open formula file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_formula_text(buf.str());
}

std::string format_formula(const AntimonotoneFormula& f) {
    std::ostringstream out;
    out << "p wcnf2 " << f.num_vars << ' ' << f.num_clauses() << '\n';
    for (const auto& [a, b] : f.clauses) {
        out << a << ' ' << b << '\n';
    }
    return out.str();
}

} // namespace gsr
