#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cyclorient::cli {

/// Exit codes shared by every subcommand.
/// 0: cyclically orientable / verification ok
/// 1: not cyclically orientable / verification failed
/// 2: input or usage error
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

struct CheckOptions {
    bool naive = false;
    bool json = false;
};

/// "check": decides the graph on graph_in; prints YES/NO plus per-component
/// verdicts (a JSON report with --json).
int cmd_check(std::istream& graph_in, const CheckOptions& options, std::ostream& out,
              std::ostream& err);

struct OrientOptions {
    bool dot = false;
};

/// "orient": prints a witness orientation as a directed edge list (or DOT
/// digraph), or NO when none exists.
int cmd_orient(std::istream& graph_in, const OrientOptions& options, std::ostream& out,
               std::ostream& err);

/// "verify": checks the orientation file against the chordless-cycle
/// condition, printing every violated cycle.
int cmd_verify(std::istream& graph_in, std::istream& orientation_in, std::ostream& out,
               std::ostream& err);

struct GenOptions {
    std::uint64_t seed = 1;
    int target_n = 10;
    int max_cycle_len = 8;
    int parts = 1;   // two-connected blocks chained with bridge edges
    int perturb = 0; // random non-edges to add afterwards
};

/// "gen": writes a corpus file (edge list plus metadata comments and the
/// "# expected: yes" sidecar when the answer is known by construction).
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

/// "components": prints the biconnected decomposition, one component per
/// line, plus an "isolated:" line when isolated vertices exist.
int cmd_components(std::istream& graph_in, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<int> sizes{1000, 2000, 4000};
    int reps = 5;
    bool linear_only = false;
    std::uint64_t seed = 1;
    int max_cycle_len = 8;
};

/// "bench": generates glued-cycle graphs at the given sizes, times the
/// linear and quadratic procedures (median of reps), prints a table.
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

} // namespace cyclorient::cli
