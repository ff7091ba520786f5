#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cyclorient/errors.hpp"

namespace cyclorient {

/// Undirected edge, stored normalized with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an endpoint pair. Precondition: u != v.
inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Key usable in hash containers. Endpoints must be non-negative.
inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

/// Immutable simple undirected graph over dense 0-based vertex ids.
///
/// Invariants: no self-loops, no duplicate edges, adjacency lists sorted
/// ascending and symmetric with the edge set.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with the given number of vertices and edge set.
    /// Throws SelfLoopError, DuplicateEdgeError or UnknownVertexError when
    /// the input violates the invariants.
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbors of v, sorted ascending.
    std::span<const int> neighbors(int v) const {
        return {adjacency_[static_cast<std::size_t>(v)].data(),
                adjacency_[static_cast<std::size_t>(v)].size()};
    }

    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    bool contains_vertex(int v) const noexcept { return v >= 0 && v < vertex_count_; }

    /// True iff {u,v} is an edge. Out-of-range ids are simply not adjacent.
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Total assignment of a direction to every edge of an associated graph.
/// Directions are stored per normalized edge; use is_total_on to check
/// coverage against a concrete graph.
class Orientation {
public:
    /// Directs edge e from the given tail to the opposite endpoint.
    /// tail must be one of e's endpoints; re-setting an edge overwrites.
    void set(Edge e, int tail);

    bool contains(Edge e) const { return forward_.contains(edge_key(e.a, e.b)); }

    /// Tail (source) of the directed edge. Throws PartialOrientationError
    /// when the edge has no direction yet.
    int tail(Edge e) const;
    int head(Edge e) const;

    std::size_t size() const noexcept { return forward_.size(); }

    bool is_total_on(const Graph& g) const;

    /// Copy with every direction flipped.
    Orientation reversed() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    // value true: directed a -> b (low id to high id)
    std::unordered_map<std::uint64_t, bool> forward_;
};

/// Sequence of distinct vertices in which consecutive entries are adjacent.
struct VertexPath {
    std::vector<int> vertices;

    friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

/// Cycle written as a vertex sequence of length >= 3; consecutive entries
/// and the wraparound pair are edges.
struct CycleSeq {
    std::vector<int> vertices;

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
    friend auto operator<=>(const CycleSeq&, const CycleSeq&) = default;
};

/// Validity checks used by tests and by log replay.
bool is_path_in(const Graph& g, const VertexPath& p);
bool is_cycle_in(const Graph& g, const CycleSeq& c);

/// Rotates/reflects the cycle so the lowest vertex id comes first and its
/// lower-id neighbor second. Canonical form for comparing cycles.
CycleSeq canonical_rotation(const CycleSeq& c);

struct ParseOptions {
    /// When false (strict, the default) a repeated edge raises
    /// DuplicateEdgeError; when true repeats collapse silently.
    bool dedupe = false;
};

/// Parses edge-list text: one "u v" pair per line, '#' lines are comments,
/// blank lines ignored. vertex_count becomes 1 + the largest id seen, so
/// unmentioned ids below that are isolated vertices.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// Inverse of parse_edge_list: one "a b" line per edge, lexicographic order.
std::string emit_edge_list(const Graph& g);

/// DOT-compatible text: every vertex listed ascending, edges "--" when no
/// orientation is given and "tail -> head" otherwise. Output is bit-stable.
/// Throws PartialOrientationError when o misses an edge of g.
std::string emit_dot(const Graph& g, const Orientation* o = nullptr);

/// Parses a directed edge list ("u v" meaning u -> v) that must cover every
/// edge of g exactly once. Throws PartialOrientationError on missing,
/// repeated or unknown edges; ParseError on malformed lines.
Orientation parse_orientation(const Graph& g, std::istream& in);
Orientation parse_orientation(const Graph& g, std::string_view text);

/// Directed edge list for o over g's edges, lexicographic by edge.
std::string emit_orientation(const Graph& g, const Orientation& o);

struct InducedSubgraph {
    Graph graph;
    /// to_original[new id] = id in the source graph; ascending.
    std::vector<int> to_original;
};

/// Subgraph induced by the vertex set s (duplicates tolerated). New ids are
/// dense, assigned in ascending order of the original ids.
/// Throws UnknownVertexError when s contains an out-of-range id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

} // namespace cyclorient
