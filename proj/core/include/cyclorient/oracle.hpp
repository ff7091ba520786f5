#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclorient/decide.hpp"
#include "cyclorient/graph.hpp"

namespace cyclorient {

/// Default vertex cap for the exhaustive chordless-cycle search.
inline constexpr int kChordlessCycleVertexCap = 16;
/// Edge cap for the 2^e orientation sweep.
inline constexpr int kBruteForceEdgeCap = 20;

/// All chordless cycles of g, each in canonical rotation, sorted, no
/// duplicates. Backtracking search over induced paths; exponential in
/// general, intended for graphs of at most ~14 vertices.
/// Throws SizeLimitError when g has more than max_vertices vertices.
std::vector<CycleSeq> enumerate_chordless_cycles(const Graph& g,
                                                 int max_vertices = kChordlessCycleVertexCap);

/// Tries every orientation of g against its chordless cycles. Returns the
/// first valid one in lexicographic order of the direction bit-vector over
/// the sorted edge list (bit 0 = low id -> high id), or (false, nullopt).
/// Throws SizeLimitError when g has more than kBruteForceEdgeCap edges.
std::pair<bool, std::optional<Orientation>> brute_force_co(const Graph& g);

/// Brute-force search for an edge {v,w} whose endpoint removal disconnects
/// the component. Requires a two-connected input that is neither a cycle
/// nor a single edge (PreconditionError otherwise); returns the
/// lexicographically first such edge, or nullopt.
std::optional<Edge> find_separating_edge(const Graph& component);

/// Shortest path between p's endpoints inside the subgraph induced by p's
/// vertices. The result is a chain (induced path) on a subset of p's
/// vertices with the same endpoints.
VertexPath shorten_to_chain(const Graph& g, const VertexPath& p);

/// Chordless cycle through v using only vertices of z (a cycle of g
/// through v). Shortest-cycle-through-v search in the induced subgraph,
/// asserted chordless. Canonical rotation.
CycleSeq shorten_to_chordless(const Graph& g, int v, const CycleSeq& z);

/// Edge with an explicit direction, for gluing.
struct OrientedEdge {
    int tail = 0;
    int head = 0;
};

/// Two graphs, each with one oriented edge to identify.
struct GluingSpec {
    Graph first;
    OrientedEdge first_edge;
    Graph second;
    OrientedEdge second_edge;
};

struct GluedGraph {
    Graph graph;
    /// second_to_result[v of second] = id in the result. The first graph's
    /// ids are unchanged.
    std::vector<int> second_to_result;
};

/// Disjoint union with second_edge identified onto first_edge tail-to-tail
/// and head-to-head; the shared edge appears once. The result has
/// n1 + n2 - 2 vertices and e1 + e2 - 1 edges.
/// Throws PreconditionError when either oriented edge is not an edge of
/// its graph.
GluedGraph glue_along_edge(const GluingSpec& spec);

struct GeneratedGraph {
    Graph graph;
    /// Ground-truth certificate: the gluing sequence in reverse, then the
    /// starting cycle.
    DecompositionLog log;
};

/// Grows a two-connected cyclically orientable graph: a random cycle
/// (length uniform in [3, max_cycle_len]), then fresh cycles glued along
/// uniformly random existing edges until vertex_count >= target_n.
/// Deterministic for a fixed seed (SplitMix64).
/// Throws BadParamsError when target_n < 3 or max_cycle_len < 3.
GeneratedGraph gen_co_graph(std::uint64_t seed, int target_n, int max_cycle_len = 8);

/// base plus one uniformly random non-edge; whether the result stays
/// cyclically orientable is intentionally left to downstream checks.
/// Throws CompleteGraphError when base has no non-adjacent vertex pair.
Graph gen_perturbed(std::uint64_t seed, const Graph& base);

/// Reads the "# expected: yes|no" sidecar convention of corpus files.
std::optional<bool> corpus_expected(std::string_view corpus_text);

} // namespace cyclorient
