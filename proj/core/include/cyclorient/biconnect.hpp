#pragma once

#include <vector>

#include "cyclorient/graph.hpp"

namespace cyclorient {

/// One two-connected component: the edges of one equivalence class of
/// "lie on a common cycle", together with their endpoints.
struct BiconnectedComponent {
    std::vector<int> vertices;  // ascending; exactly the endpoints of edges
    std::vector<Edge> edges;    // lexicographic

    bool is_bridge() const noexcept { return edges.size() == 1; }
};

/// Partition of a graph's edges into two-connected components. Vertices on
/// no edge are listed separately.
struct BiconnectedDecomposition {
    std::vector<BiconnectedComponent> components;
    std::vector<int> isolated_vertices;  // ascending
};

/// Computes the two-connected components by depth-first search with an edge
/// stack, in time linear in vertices plus edges. Components are emitted in
/// the order the search (rooted at the lowest unvisited id, neighbors
/// ascending) completes them, which is deterministic.
BiconnectedDecomposition biconnected_components(const Graph& g);

} // namespace cyclorient
