#include "gsr/commands.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "gsr/hypergraph.hpp"
#include "gsr/kernel.hpp"
#include "gsr/oracle.hpp"
#include "gsr/random.hpp"
#include "gsr/satreduce.hpp"
#include "gsr/solver.hpp"
#include "gsr/structure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsr::cli {

namespace {

using json = nlohmann::json;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string join_marks(const std::vector<Mark>& marks) {
    std::string out;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(marks[i]);
    }
    return out;
}

void print_stats(std::ostream& out, const SearchStats& stats) {
    out << "nodes-visited: " << stats.nodes_visited << '\n';
    out << "cement-deletions: " << stats.cement_deletions << '\n';
    out << "rule-deletions: " << stats.rule_deletions << '\n';
    out << "branches-aborted: " << stats.branches_aborted << '\n';
}

json stats_to_json(const SearchStats& stats) {
    return json{{"nodes_visited", stats.nodes_visited},
                {"cement_deletions", stats.cement_deletions},
                {"rule_deletions", stats.rule_deletions},
                {"branches_aborted", stats.branches_aborted}};
}

SearchStats stats_from_json(const json& j) {
    SearchStats stats;
    stats.nodes_visited = j.at("nodes_visited").get<std::uint64_t>();
    stats.cement_deletions = j.at("cement_deletions").get<std::uint64_t>();
    stats.rule_deletions = j.at("rule_deletions").get<std::uint64_t>();
    stats.branches_aborted = j.at("branches_aborted").get<std::uint64_t>();
    return stats;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw input_error("malformed " + what + ": '" + text + "'");
    }
}

} // namespace

Ruler load_input(const std::string& descriptor, std::uint64_t seed) {
    if (descriptor.rfind("range:", 0) == 0) {
        const std::uint64_t n = parse_uint(descriptor.substr(6), "range size");
        return consecutive_ruler(static_cast<std::size_t>(n));
    }
    if (descriptor.rfind("random:", 0) == 0) {
        const std::string rest = descriptor.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) {
            throw input_error("random input must look like random:<marks>:<maxvalue>");
        }
        const std::uint64_t marks = parse_uint(rest.substr(0, colon), "random mark count");
        const std::uint64_t maxv = parse_uint(rest.substr(colon + 1), "random mark bound");
        std::mt19937_64 rng(seed);
        return random_ruler(rng, static_cast<std::size_t>(marks), maxv);
    }
    return load_ruler_file(descriptor);
}

int cmd_solve(const std::string& input, const CommonFlags& flags, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Ruler ruler = load_input(input, flags.seed);
    const Hypergraph graph = build_improved(ruler);

    if (flags.k) {
        // Decision variant: is there a deletion set of size <= k?
        DeletionInstance inst;
        inst.graph = graph;
        inst.budget = *flags.k;
        const SearchResult res = solve_parameterized(inst, flags.search_options());
        const bool yes = res.solution.has_value();
        if (flags.json) {
            json record{{"command", "solve"},
                        {"input", input},
                        {"mode", "decision"},
                        {"marks", ruler.size()},
                        {"edges", graph.edge_count()},
                        {"k", *flags.k},
                        {"decision", yes ? "yes" : "no"},
                        {"stats", stats_to_json(res.stats)},
                        {"wall_ms", elapsed_ms(start)}};
            if (yes) record["deletions"] = *res.solution;
            out << record.dump() << '\n';
        } else {
            out << "input: " << input << '\n';
            out << "marks: " << ruler.size() << '\n';
            out << "edges: " << graph.edge_count() << '\n';
            out << "k: " << *flags.k << '\n';
            out << "decision: " << (yes ? "yes" : "no") << '\n';
            if (yes) out << "deletions: " << join_marks(*res.solution) << '\n';
            print_stats(out, res.stats);
            out << "wall-ms: " << elapsed_ms(start) << '\n';
        }
        return yes ? kOk : kNo;
    }

    const SolveOutcome outcome = find_max_golomb_subruler(ruler, flags.search_options());
    const SearchStats total = outcome.total_stats();
    if (flags.json) {
        json runs = json::array();
        for (const auto& run : outcome.runs) {
            runs.push_back(
                {{"k", run.k}, {"found", run.found}, {"stats", stats_to_json(run.stats)}});
        }
        json record{{"command", "solve"},
                    {"input", input},
                    {"mode", "optimize"},
                    {"marks", ruler.size()},
                    {"edges", graph.edge_count()},
                    {"greedy_bound", outcome.greedy_bound},
                    {"best_size", outcome.best_subruler.size()},
                    {"deletions", outcome.deletions},
                    {"subruler", outcome.best_subruler.marks()},
                    {"runs", runs},
                    {"stats", stats_to_json(total)},
                    {"wall_ms", elapsed_ms(start)}};
        out << record.dump() << '\n';
    } else {
        out << "input: " << input << '\n';
        out << "marks: " << ruler.size() << '\n';
        out << "edges: " << graph.edge_count() << '\n';
        out << "greedy-bound: " << outcome.greedy_bound << '\n';
        out << "best-size: " << outcome.best_subruler.size() << '\n';
        out << "deletions: " << join_marks(outcome.deletions) << '\n';
        out << "subruler: " << format_ruler(outcome.best_subruler) << '\n';
        for (const auto& run : outcome.runs) {
            out << "run: k=" << run.k << " found=" << (run.found ? "yes" : "no")
                << " nodes=" << run.stats.nodes_visited << '\n';
        }
        print_stats(out, total);
        out << "wall-ms: " << elapsed_ms(start) << '\n';
    }
    return kOk;
}

int cmd_ogr(Mark max_length, const CommonFlags& flags, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome outcome = max_marks_for_length(max_length, flags.search_options());
    if (flags.json) {
        json record{{"command", "ogr"},
                    {"max_length", max_length},
                    {"max_marks", outcome.best_subruler.size()},
                    {"ruler", outcome.best_subruler.marks()},
                    {"stats", stats_to_json(outcome.total_stats())},
                    {"wall_ms", elapsed_ms(start)}};
        out << record.dump() << '\n';
    } else {
        out << "max-length: " << max_length << '\n';
        out << "max-marks: " << outcome.best_subruler.size() << '\n';
        out << "ruler: " << format_ruler(outcome.best_subruler) << '\n';
        print_stats(out, outcome.total_stats());
        out << "wall-ms: " << elapsed_ms(start) << '\n';
    }
    return kOk;
}

int cmd_graph(const std::string& input, const CommonFlags& flags, std::ostream& out) {
    const Ruler ruler = load_input(input, flags.seed);
    const Hypergraph graph = build_improved(ruler);
    if (flags.json) {
        json edges = json::array();
        for (const Edge& e : graph.edges()) {
            edges.push_back(std::vector<Mark>(e.vertices().begin(), e.vertices().end()));
        }
        out << json{{"command", "graph"},
                    {"input", input},
                    {"vertices", graph.vertex_count()},
                    {"edges", graph.edge_count()},
                    {"edge_list", edges}}
                   .dump()
            << '\n';
    } else {
        out << format_hypergraph(graph);
    }
    return kOk;
}

int cmd_kernelize(const std::string& input, long long k, const CommonFlags& flags,
                  std::ostream& out) {
    const Ruler ruler = load_input(input, flags.seed);
    const Hypergraph graph = build_improved(ruler);
    const KernelResult result = kernelize(graph, k);
    const bool bounded = within_kernel_bounds(result.graph, result.budget);
    if (flags.json) {
        json edges = json::array();
        for (const Edge& e : result.graph.edges()) {
            edges.push_back(std::vector<Mark>(e.vertices().begin(), e.vertices().end()));
        }
        out << json{{"command", "kernelize"},
                    {"input", input},
                    {"k", k},
                    {"k_prime", result.budget},
                    {"forced_deletions", result.forced_deletions},
                    {"kept_marks", result.kept_marks},
                    {"infeasible", result.infeasible},
                    {"within_kernel_bounds", bounded},
                    {"vertices", result.graph.vertex_count()},
                    {"edges", result.graph.edge_count()},
                    {"edge_list", edges}}
                   .dump()
            << '\n';
    } else {
        out << format_hypergraph(result.graph);
        out << "k-prime: " << result.budget << '\n';
        out << "forced-deletions: " << join_marks(result.forced_deletions) << '\n';
        out << "kept-marks: " << join_marks(result.kept_marks) << '\n';
        out << "infeasible: " << (result.infeasible ? "yes" : "no") << '\n';
        out << "within-kernel-bounds: " << (bounded ? "yes" : "no") << '\n';
    }
    return result.infeasible ? kNo : kOk;
}

int cmd_oracle(const std::string& input, const CommonFlags& flags, std::ostream& out) {
    const Ruler ruler = load_input(input, flags.seed);
    const OracleResult result = brute_force_max_subruler(ruler);
    if (flags.json) {
        out << json{{"command", "oracle"},
                    {"input", input},
                    {"marks", ruler.size()},
                    {"max_size", result.max_size},
                    {"min_deletions", ruler.size() - result.max_size},
                    {"witness", result.witness.marks()},
                    {"instances_explored", result.instances_explored}}
                   .dump()
            << '\n';
    } else {
        out << "input: " << input << '\n';
        out << "marks: " << ruler.size() << '\n';
        out << "max-size: " << result.max_size << '\n';
        out << "min-deletions: " << ruler.size() - result.max_size << '\n';
        out << "witness: " << format_ruler(result.witness) << '\n';
        out << "instances-explored: " << result.instances_explored << '\n';
    }
    return kOk;
}

int cmd_validate(const std::string& input, const CommonFlags& flags, std::ostream& out) {
    const Ruler ruler = load_input(input, flags.seed);
    const Hypergraph graph = build_improved(ruler);
    const StructureReport report = validate_structure(graph);
    if (flags.json) {
        json violations = json::array();
        for (const auto& v : report.violations) {
            violations.push_back({{"pattern", v.pattern}, {"witness", v.witness}});
        }
        out << json{{"command", "validate"},
                    {"input", input},
                    {"max_3edges_per_pair", report.max_3edges_per_pair},
                    {"max_4edges_per_triple", report.max_4edges_per_triple},
                    {"violations", violations}}
                   .dump()
            << '\n';
    } else {
        out << "input: " << input << '\n';
        out << format_structure_report(report);
    }
    return report.ok() ? kOk : kNo;
}

int cmd_reduce_sat(const std::string& formula_path, long long k, const CommonFlags& flags,
                   std::ostream& out) {
    const AntimonotoneFormula formula = load_formula_file(formula_path);
    const ReducedInstance inst = reduce_to_ruler(formula, k);
    if (flags.json) {
        json clause_marks = json::array();
        for (const auto& ci : inst.clause_marks) clause_marks.push_back(ci);
        out << json{{"command", "reduce-sat"},
                    {"input", formula_path},
                    {"num_vars", formula.num_vars},
                    {"num_clauses", formula.num_clauses()},
                    {"k", k},
                    {"target_size", inst.target_size},
                    {"v_marks", inst.v_marks},
                    {"clause_marks", clause_marks},
                    {"ruler", inst.ruler.marks()}}
                   .dump()
            << '\n';
    } else {
        out << "# reduce-sat: vars=" << formula.num_vars << " clauses=" << formula.num_clauses()
            << " k=" << k << '\n';
        out << "# target-size: " << inst.target_size << '\n';
        out << "# V: " << join_marks(inst.v_marks) << '\n';
        for (std::size_t i = 0; i < inst.clause_marks.size(); ++i) {
            out << "# C_" << (i + 1) << ": " << join_marks(inst.clause_marks[i]) << '\n';
        }
        out << format_ruler(inst.ruler) << '\n';
    }
    return kOk;
}

std::string RunRecord::to_json() const {
    return json{{"command", command},
                {"input", input},
                {"config", config},
                {"wall_ms", wall_ms},
                {"stats", stats_to_json(stats)},
                {"result", result_summary}}
        .dump();
}

RunRecord RunRecord::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed run record: ") + e.what());
    }
    RunRecord record;
    record.command = j.at("command").get<std::string>();
    record.input = j.at("input").get<std::string>();
    record.config = j.at("config").get<std::string>();
    record.wall_ms = j.at("wall_ms").get<double>();
    record.stats = stats_from_json(j.at("stats"));
    record.result_summary = j.at("result").get<std::string>();
    return record;
}

int cmd_bench(const BenchSpec& spec, const CommonFlags& flags, std::ostream& out) {
    if (spec.min_marks > spec.max_marks) {
        throw input_error("bench range is empty");
    }
    struct Task {
        std::size_t n;
        const char* config;
        SearchOptions opts;
    };
    std::vector<Task> tasks;
    for (std::size_t n = spec.min_marks; n <= spec.max_marks; ++n) {
        tasks.push_back({n, "default", SearchOptions{}});
        tasks.push_back({n, "no-cement", SearchOptions{false, true, true}});
        tasks.push_back({n, "no-inner-kernel", SearchOptions{true, true, false}});
    }
    std::vector<RunRecord> records(tasks.size());

#ifdef _OPENMP
    const int jobs = std::max(1, spec.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
#endif
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        const Task& task = tasks[static_cast<std::size_t>(t)];
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome outcome =
            find_max_golomb_subruler(consecutive_ruler(task.n), task.opts);
        RunRecord& record = records[static_cast<std::size_t>(t)];
        record.command = "bench";
        record.input = "range:" + std::to_string(task.n);
        record.config = task.config;
        record.wall_ms = elapsed_ms(start);
        record.stats = outcome.total_stats();
        record.result_summary = "best-size=" + std::to_string(outcome.best_subruler.size()) +
                                " deletions=" + std::to_string(outcome.deletions.size());
    }

    if (flags.json) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(json::parse(r.to_json()));
        out << arr.dump() << '\n';
    } else {
        for (const auto& r : records) {
            out << "record: input=" << r.input << " config=" << r.config
                << " wall-ms=" << r.wall_ms << " nodes=" << r.stats.nodes_visited
                << " cement-deletions=" << r.stats.cement_deletions
                << " rule-deletions=" << r.stats.rule_deletions
                << " branches-aborted=" << r.stats.branches_aborted << " " << r.result_summary
                << '\n';
        }
    }
    return kOk;
}

} // namespace gsr::cli
