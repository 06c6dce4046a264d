// Command line front end: solve, chromatic-index, verify, decompose,
// generate and bench subcommands over the text formats in eck/io.hpp.
// Exit codes: 0 = yes/ok, 1 = no/violation, 2 = usage or IO error,
// 3 = solve timeout.

#include "eck/bench.hpp"
#include "eck/colouring.hpp"
#include "eck/generators.hpp"
#include "eck/graph.hpp"
#include "eck/io.hpp"
#include "eck/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;
constexpr int exit_timeout = 3;

void print_report(const eck::SolveReport& report) {
    std::cout << (report.colourable ? "YES" : "NO") << '\n'
              << "delta " << report.delta << '\n'
              << "core " << report.core_size << '\n'
              << "semi-core " << report.semi_core_size << '\n'
              << "semi-core-edges " << report.semi_core_edges << '\n'
              << "shortcut " << eck::to_string(report.shortcut) << '\n';
    std::printf("time-decompose %.9f\n", report.timings.decompose_seconds);
    std::printf("time-semicore %.9f\n", report.timings.semi_core_seconds);
    std::printf("time-extend %.9f\n", report.timings.extend_seconds);
    std::printf("time-total %.9f\n", report.timings.total_seconds);
}

int run_solve(const std::string& graph_path, int k, const std::string& out_path, double timeout,
              bool verbose) {
    eck::Graph g = eck::read_graph_file(graph_path);
    eck::SolveOptions opts;
    if (verbose) opts.trace = &std::cerr;

    eck::SolveReport report = [&] {
        if (timeout <= 0) return eck::solve(g, k, opts);
        auto task = std::async(std::launch::async, [&] { return eck::solve(g, k, opts); });
        if (task.wait_for(std::chrono::duration<double>(timeout)) != std::future_status::ready) {
            std::cerr << "timeout after " << timeout << " s\n";
            std::_Exit(exit_timeout);
        }
        return task.get();
    }();

    print_report(report);
    if (report.colourable && !out_path.empty())
        eck::write_text_file(out_path, eck::write_colouring(g, report.witness->colours()));
    return report.colourable ? exit_yes : exit_no;
}

int run_chromatic_index(const std::string& graph_path, const std::string& out_path, bool verbose) {
    eck::Graph g = eck::read_graph_file(graph_path);
    eck::SolveOptions opts;
    if (verbose) opts.trace = &std::cerr;
    eck::ChromaticIndexResult result = eck::chromatic_index(g, opts);
    std::cout << result.chromatic_index << " (Class " << (result.class_one ? 1 : 2) << ")\n";
    if (!out_path.empty())
        eck::write_text_file(out_path, eck::write_colouring(g, result.witness.colours()));
    return exit_yes;
}

int run_verify(const std::string& graph_path, const std::string& colouring_path, int k) {
    eck::Graph g = eck::read_graph_file(graph_path);
    std::vector<eck::Colour> colours = eck::read_colouring_file(colouring_path, g);
    if (auto violation = eck::find_violation(g, colours, k, true)) {
        std::cout << violation->describe(g) << '\n';
        return exit_no;
    }
    std::cout << "OK\n";
    return exit_yes;
}

int run_decompose(const std::string& graph_path) {
    eck::Graph g = eck::read_graph_file(graph_path);
    eck::SemiCoreDecomposition dec = eck::decompose(g);
    std::cout << "delta " << g.max_degree() << '\n'
              << "core " << dec.core_size() << '\n'
              << "semi-core " << dec.semi_core_size() << '\n'
              << "semi-core-edges " << dec.semi_core.graph.edge_count() << '\n'
              << "excluded " << dec.excluded_order.size() << '\n';
    return exit_yes;
}

int run_generate(const std::string& family, const std::vector<int>& params, int p, int k, int n,
                 std::uint64_t seed, const std::string& out_path) {
    auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count)
            throw CLI::ValidationError("generate", std::string("usage: generate ") + usage);
    };
    eck::Graph g = [&] {
        if (family == "complete") {
            need(1, "complete <n>");
            return eck::gen_complete(params[0]);
        }
        if (family == "cycle") {
            need(1, "cycle <n>");
            return eck::gen_cycle(params[0]);
        }
        if (family == "star") {
            need(1, "star <leaves>");
            return eck::gen_star(params[0]);
        }
        if (family == "petersen") {
            need(0, "petersen");
            return eck::gen_petersen();
        }
        if (family == "few-max-degree") {
            need(0, "few-max-degree --p <int> --k <int> --n <int> [--seed <int>]");
            return eck::gen_few_max_degree(p, k, n, seed);
        }
        throw CLI::ValidationError("generate", "unknown family '" + family +
                                                   "' (complete, cycle, star, petersen, "
                                                   "few-max-degree)");
    }();
    if (out_path.empty())
        std::cout << eck::write_graph(g);
    else
        eck::write_text_file(out_path, eck::write_graph(g));
    return exit_yes;
}

int run_bench_cmd(int k, int p, const std::vector<int>& n_values, std::uint64_t seed, int repeats) {
    std::vector<eck::BenchRow> rows = eck::run_bench(k, p, n_values, seed, repeats);
    std::printf("%10s %10s %6s %15s %15s %15s %15s\n", "n", "m", "q", "t_decompose", "t_semicore",
                "t_extend", "t_total");
    for (const auto& r : rows)
        std::printf("%10d %10d %6d %15.9f %15.9f %15.9f %15.9f\n", r.n, r.m, r.q, r.t_decompose,
                    r.t_semicore, r.t_extend, r.t_total);
    std::printf("n,m,q,t_decompose,t_semicore,t_extend,t_total\n");
    for (const auto& r : rows)
        std::printf("%d,%d,%d,%.9f,%.9f,%.9f,%.9f\n", r.n, r.m, r.q, r.t_decompose, r.t_semicore,
                    r.t_extend, r.t_total);
    return exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-edge colouring solver: semi-core kernel plus alternating-path extension"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide k-edge colourability and build a witness");
    int solve_k = 0;
    std::string solve_graph, solve_out;
    double solve_timeout = 0.0;
    bool solve_verbose = false;
    solve_cmd->add_option("--k", solve_k, "palette size")->required();
    solve_cmd->add_option("graph", solve_graph, "graph file")->required();
    solve_cmd->add_option("--out", solve_out, "write the witness colouring here");
    solve_cmd->add_option("--timeout", solve_timeout, "wall-clock limit in seconds (exit 3)");
    solve_cmd->add_flag("--verbose", solve_verbose, "trace extension steps to stderr");

    // chromatic-index
    auto* chrom_cmd = app.add_subcommand("chromatic-index", "compute the chromatic index");
    std::string chrom_graph, chrom_out;
    bool chrom_verbose = false;
    chrom_cmd->add_option("graph", chrom_graph, "graph file")->required();
    chrom_cmd->add_option("--out", chrom_out, "write the witness colouring here");
    chrom_cmd->add_flag("--verbose", chrom_verbose, "trace extension steps to stderr");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a colouring file against a graph");
    int verify_k = 0;
    std::string verify_graph, verify_colouring;
    verify_cmd->add_option("--k", verify_k, "palette size")->required();
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("colouring", verify_colouring, "colouring file")->required();

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "print semi-core decomposition statistics");
    std::string dec_graph;
    dec_cmd->add_option("graph", dec_graph, "graph file")->required();

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a generated graph");
    std::string gen_family, gen_out;
    std::vector<int> gen_params;
    int gen_p = 0, gen_k = 0, gen_n = 0;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("family", gen_family, "complete|cycle|star|petersen|few-max-degree")
        ->required();
    gen_cmd->add_option("params", gen_params, "family parameters");
    gen_cmd->add_option("--p", gen_p, "few-max-degree: number of max-degree vertices");
    gen_cmd->add_option("--k", gen_k, "few-max-degree: the maximum degree");
    gen_cmd->add_option("--n", gen_n, "few-max-degree: total vertex count");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "write the graph here instead of stdout");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "phase timings over growing n, fixed (k, p)");
    int bench_k = 0, bench_p = 0, bench_repeats = 5;
    std::vector<int> bench_n;
    std::uint64_t bench_seed = 0;
    bench_cmd->add_option("--k", bench_k, "palette size = maximum degree")->required();
    bench_cmd->add_option("--p", bench_p, "number of max-degree vertices")->required();
    bench_cmd->add_option("--n", bench_n, "vertex counts, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "generator seed");
    bench_cmd->add_option("--repeats", bench_repeats, "timing repeats per row (median)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_error;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_graph, solve_k, solve_out, solve_timeout, solve_verbose);
        if (*chrom_cmd) return run_chromatic_index(chrom_graph, chrom_out, chrom_verbose);
        if (*verify_cmd) return run_verify(verify_graph, verify_colouring, verify_k);
        if (*dec_cmd) return run_decompose(dec_graph);
        if (*gen_cmd)
            return run_generate(gen_family, gen_params, gen_p, gen_k, gen_n, gen_seed, gen_out);
        if (*bench_cmd) return run_bench_cmd(bench_k, bench_p, bench_n, bench_seed, bench_repeats);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
