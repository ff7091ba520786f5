#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclorient/decide.hpp"
#include "cyclorient/graph.hpp"

namespace cyclorient::testsupport {

// --- named small graphs -----------------------------------------------------

Graph single_edge();
Graph path3();    // 0-1-2
Graph triangle(); // C3
Graph c4();       // 0-1-2-3-0
Graph c5();
Graph c4_chord(); // C4 plus {0,2}: two triangles sharing an edge
Graph k4();
Graph k23();      // parts {0,1} and {2,3,4}
Graph bowtie();   // triangles 0-1-2 and 2-3-4 sharing vertex 2

// --- exhaustive and random corpora ------------------------------------------

/// The n*(n-1)/2 vertex pairs in lexicographic order.
std::vector<Edge> complete_edge_list(int n);

/// Labeled graph on n vertices selected by an edge-subset mask over
/// complete_edge_list(n).
Graph graph_from_mask(int n, std::uint32_t mask);

/// Seeded random graph: edge count uniform in [0, max_edges], edges drawn
/// without replacement uniformly over the vertex pairs.
Graph random_graph(std::uint64_t seed, int n, int max_edges);

// --- independent oracles ----------------------------------------------------

bool is_connected(const Graph& g);

/// Every simple cycle, as a vertex sequence, each exactly once.
std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g);

/// Edge partition by "some cycle contains both" (reflexive closure), built
/// from plain cycle enumeration. Each class is sorted; classes sorted by
/// first edge. Independent of the depth-first-search implementation.
std::vector<std::vector<Edge>> blocks_by_cycle_oracle(const Graph& g);

// --- decomposition log checks -------------------------------------------------

/// Replays the log: base plus ear paths must reproduce the component's edge
/// set exactly once, ear interiors must stay dead after removal, every ear
/// must have >= 3 vertices and a real closing edge. On failure, *why (when
/// given) explains the first problem found.
bool log_replay_ok(const Graph& component, const DecompositionLog& log,
                   std::string* why = nullptr);

} // namespace cyclorient::testsupport
