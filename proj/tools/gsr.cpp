#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsr/commands.hpp"
#include "gsr/errors.hpp"

namespace {

void add_search_flags(CLI::App* cmd, gsr::cli::CommonFlags& flags) {
    cmd->add_flag("--no-cement", flags.no_cement, "disable cementation of failed branch vertices");
    cmd->add_flag("--no-domination", flags.no_domination, "disable dominating-vertex branching");
    cmd->add_flag("--no-inner-kernel", flags.no_inner_kernel,
                  "disable in-node reduction rules and kernel-size pruning");
}

void add_io_flags(CLI::App* cmd, gsr::cli::CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "seed for random: inputs")->capture_default_str();
    cmd->add_flag("--json", flags.json, "emit one machine-readable JSON record");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsr: exact maximum Golomb subruler solver suite"};
    app.require_subcommand(1);

    gsr::cli::CommonFlags flags;
    std::string input;
    std::string formula_path;
    long long k = 0;
    gsr::Mark max_length = 0;
    gsr::cli::BenchSpec bench;

    auto* solve = app.add_subcommand(
        "solve", "maximum Golomb subruler of a ruler (or decision variant with --k)");
    solve->add_option("input", input, "ruler file, range:N or random:<marks>:<max>")->required();
    auto* solve_k = solve->add_option("--k", "decide deletability within budget k instead");
    add_search_flags(solve, flags);
    add_io_flags(solve, flags);

    auto* ogr = app.add_subcommand("ogr", "densest Golomb ruler of bounded length");
    ogr->add_option("--max-length", max_length, "maximum ruler length")->required();
    add_search_flags(ogr, flags);
    add_io_flags(ogr, flags);

    auto* graph = app.add_subcommand("graph", "dump the characteristic hypergraph");
    graph->add_option("input", input)->required();
    add_io_flags(graph, flags);

    auto* kernelize = app.add_subcommand("kernelize", "reduce a ruler instance with budget k");
    kernelize->add_option("input", input)->required();
    kernelize->add_option("--k", k, "deletion budget")->required();
    add_io_flags(kernelize, flags);

    auto* oracle = app.add_subcommand("oracle", "brute-force maximum Golomb subruler (<= 20 marks)");
    oracle->add_option("input", input)->required();
    add_io_flags(oracle, flags);

    auto* validate = app.add_subcommand("validate", "check forbidden substructure lemmas");
    validate->add_option("input", input)->required();
    add_io_flags(validate, flags);

    auto* reduce_sat =
        app.add_subcommand("reduce-sat", "antimonotone 2-CNF to Golomb subruler instance");
    reduce_sat->add_option("formula", formula_path, "formula file (p wcnf2 header)")->required();
    reduce_sat->add_option("--k", k, "sought number of true variables")->required();
    add_io_flags(reduce_sat, flags);

    auto* bench_cmd = app.add_subcommand("bench", "solve consecutive rulers with ablations");
    bench_cmd->add_option("--min", bench.min_marks, "smallest mark count")->capture_default_str();
    bench_cmd->add_option("--max", bench.max_marks, "largest mark count")->capture_default_str();
    bench_cmd->add_option("--jobs", bench.jobs, "parallel worker slots")->capture_default_str();
    add_io_flags(bench_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return gsr::cli::kInputError;
    }

    try {
        if (solve->parsed()) {
            if (solve_k->count() > 0) flags.k = solve_k->as<long long>();
            return gsr::cli::cmd_solve(input, flags, std::cout);
        }
        if (ogr->parsed()) return gsr::cli::cmd_ogr(max_length, flags, std::cout);
        if (graph->parsed()) return gsr::cli::cmd_graph(input, flags, std::cout);
        if (kernelize->parsed()) return gsr::cli::cmd_kernelize(input, k, flags, std::cout);
        if (oracle->parsed()) return gsr::cli::cmd_oracle(input, flags, std::cout);
        if (validate->parsed()) return gsr::cli::cmd_validate(input, flags, std::cout);
        if (reduce_sat->parsed()) {
            return gsr::cli::cmd_reduce_sat(formula_path, k, flags, std::cout);
        }
        if (bench_cmd->parsed()) return gsr::cli::cmd_bench(bench, flags, std::cout);
    } catch (const gsr::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return gsr::cli::kInputError;
    } catch (const gsr::guard_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return gsr::cli::kGuardError;
    }
    return gsr::cli::kInputError;
}
