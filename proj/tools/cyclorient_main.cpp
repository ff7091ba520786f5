#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclorient/cli.hpp"

namespace {

using namespace cyclorient::cli;

// Opens path for reading; "-" selects stdin.
std::istream* open_input(const std::string& path, std::ifstream& file) {
    if (path == "-") return &std::cin;
    file.open(path);
    if (!file) {
        std::cerr << "error: cannot open " << path << "\n";
        return nullptr;
    }
    return &file;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides cyclic orientability, builds witness orientations, and validates them"};
    app.require_subcommand(1);

    std::string graph_path = "-";
    std::string orientation_path;
    std::string out_path;

    CheckOptions check_options;
    auto* check = app.add_subcommand("check", "Decide whether a graph is cyclically orientable");
    check->add_option("path", graph_path, "edge-list file, or - for stdin");
    check->add_flag("--naive", check_options.naive, "use the quadratic reference procedure");
    check->add_flag("--json", check_options.json, "emit a JSON report (schema cyclorient/1)");

    OrientOptions orient_options;
    auto* orient = app.add_subcommand("orient", "Print a witness cyclic orientation");
    orient->add_option("path", graph_path, "edge-list file, or - for stdin");
    orient->add_flag("--dot", orient_options.dot, "emit a DOT digraph instead of an edge list");

    auto* verify = app.add_subcommand("verify", "Check an orientation against every chordless cycle");
    verify->add_option("graph", graph_path, "edge-list file, or - for stdin")->required();
    verify->add_option("orientation", orientation_path, "directed edge list, one 'u v' per line")
        ->required();

    GenOptions gen_options;
    auto* gen = app.add_subcommand("gen", "Generate a cyclically orientable corpus graph");
    gen->add_option("seed", gen_options.seed, "generator seed")->required();
    gen->add_option("target_n", gen_options.target_n, "grow until at least this many vertices")
        ->required();
    gen->add_option("--max-cycle-len", gen_options.max_cycle_len, "longest glued cycle (default 8)");
    gen->add_option("--parts", gen_options.parts, "two-connected blocks, chained by bridges");
    gen->add_option("--perturb", gen_options.perturb, "random extra non-edges (answer unknown)");
    gen->add_option("-o,--output", out_path, "write to this file instead of stdout");

    auto* components = app.add_subcommand("components", "Print the biconnected decomposition");
    components->add_option("path", graph_path, "edge-list file, or - for stdin");

    BenchOptions bench_options;
    auto* bench = app.add_subcommand("bench", "Time both procedures on glued-cycle graphs");
    bench->add_option("--sizes", bench_options.sizes, "vertex counts to time")->delimiter(',');
    bench->add_option("--reps", bench_options.reps, "repetitions per size (median reported)");
    bench->add_flag("--linear-only", bench_options.linear_only, "skip the quadratic procedure");
    bench->add_option("--seed", bench_options.seed, "generator seed");
    bench->add_option("--max-cycle-len", bench_options.max_cycle_len, "longest glued cycle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    std::ifstream graph_file;
    if (check->parsed()) {
        std::istream* in = open_input(graph_path, graph_file);
        if (!in) return kExitUsage;
        return cmd_check(*in, check_options, std::cout, std::cerr);
    }
    if (orient->parsed()) {
        std::istream* in = open_input(graph_path, graph_file);
        if (!in) return kExitUsage;
        return cmd_orient(*in, orient_options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        std::istream* in = open_input(graph_path, graph_file);
        if (!in) return kExitUsage;
        std::ifstream orientation_file;
        std::istream* orientation_in = open_input(orientation_path, orientation_file);
        if (!orientation_in) return kExitUsage;
        return cmd_verify(*in, *orientation_in, std::cout, std::cerr);
    }
    if (gen->parsed()) {
        if (out_path.empty()) return cmd_gen(gen_options, std::cout, std::cerr);
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitUsage;
        }
        return cmd_gen(gen_options, out, std::cerr);
    }
    if (components->parsed()) {
        std::istream* in = open_input(graph_path, graph_file);
        if (!in) return kExitUsage;
        return cmd_components(*in, std::cout, std::cerr);
    }
    if (bench->parsed()) return cmd_bench(bench_options, std::cout, std::cerr);
    return kExitUsage;
}
