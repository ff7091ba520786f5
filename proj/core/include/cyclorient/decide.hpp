#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclorient/graph.hpp"

namespace cyclorient {

/// Necessary edge-count condition for cyclic orientability: e <= 2n - 3,
/// with the degenerate conventions n <= 1 -> e == 0 and n == 2 -> e <= 1
/// (the formula already yields the latter).
inline bool edge_bound_ok(std::int64_t vertex_count, std::int64_t edge_count) {
    if (vertex_count <= 1) return edge_count == 0;
    return edge_count <= 2 * vertex_count - 3;
}

/// One ear removal: a path whose interior had degree 2, plus the edge that
/// closed it into a cycle. All ids are original-graph ids.
struct EarEvent {
    VertexPath path;   // >= 3 vertices; endpoints are closing_edge's ends
    Edge closing_edge; // {path.front, path.back}
};

/// Replayable certificate of cyclic orientability for one component:
/// the ears in removal order, then the base the recursion bottomed out on.
struct DecompositionLog {
    int component_id = 0;
    std::vector<EarEvent> ears;
    std::optional<CycleSeq> base_cycle; // exactly one of base_cycle /
    std::optional<Edge> base_edge;      // base_edge is set
};

enum class RefusalKind {
    edge_bound_exceeded,  // e > 2n - 3 for the graph or a component
    no_degree_two_vertex, // worklist ran dry: no removable ear remains
};

/// Machine-readable reason for a negative verdict.
struct Refusal {
    RefusalKind kind = RefusalKind::edge_bound_exceeded;
    int component_id = -1; // -1: the graph as a whole
    std::int64_t vertex_count = 0;
    std::int64_t edge_count = 0;
};

/// Per-component decision outcome. The linear procedure yields a log on
/// YES; the naive procedure yields the bare answer.
struct Verdict {
    bool answer = false;
    std::optional<DecompositionLog> log;
    std::optional<Refusal> reason;
};

struct DecideStats {
    /// Worklist pops of the linear procedure, summed over all components.
    /// Stays 0 when the edge-bound pre-checks already refuse the input.
    std::uint64_t linear_loop_iterations = 0;
    /// True while every iteration strictly decreased the progress measure
    /// (live vertex count, then worklist length).
    bool monotone_progress = true;
};

enum class DecideAlgorithm { linear, naive };

/// Whole-graph decision: conjunction of the per-component answers.
struct DecideResult {
    bool answer = false;
    std::vector<Verdict> components;      // indexed by component id
    std::optional<Refusal> global_reason; // set when the whole-graph bound fails
    DecideStats stats;
};

/// Decides cyclic orientability. Pipeline: whole-graph edge bound, then the
/// biconnected decomposition, then per component the edge bound and the
/// selected procedure (bridges are YES outright). Runs in time linear in
/// the vertex count with the default (linear) procedure.
DecideResult is_cyclically_orientable(const Graph& g,
                                      DecideAlgorithm algorithm = DecideAlgorithm::linear);

/// Quadratic reference procedure on one two-connected component (or single
/// edge). Repeatedly scans for an unmarked degree-2 vertex, extracts the
/// maximal degree-2 path through it, and removes it when its endpoints are
/// joined by an edge; a closed path means the component is a cycle.
/// Throws NotTwoConnectedError when a multi-edge input has a vertex of
/// degree <= 1 (or the path walk contradicts two-connectivity).
bool check_component_naive(const Graph& component);

/// Linear-time procedure on one two-connected component. Same reduction as
/// the naive procedure, driven by a worklist of degree-2 vertices; chains
/// without a closing edge are contracted through a synthetic vertex instead
/// of rescanned. On YES the verdict carries the DecompositionLog in
/// original component ids.
Verdict check_component_linear(const Graph& component, int component_id = 0,
                               DecideStats* stats = nullptr);

/// Open-addressing set of edge keys, sized once for every insert the run
/// can perform, so lookups stay O(1) without rehashing mid-run.
class EdgeKeySet {
public:
    void reset(std::size_t expected);
    bool insert(std::uint64_t key);
    bool erase(std::uint64_t key);
    bool contains(std::uint64_t key) const;
    std::size_t size() const noexcept { return size_; }

private:
    // real keys have their top bit clear (vertex ids are non-negative ints)
    static constexpr std::uint64_t kEmpty = ~0ull;
    static constexpr std::uint64_t kTombstone = ~0ull - 1;
    static std::size_t slot_of(std::uint64_t key, std::size_t mask) {
        key ^= key >> 33;
        key *= 0xFF51AFD7ED558CCDull;
        key ^= key >> 33;
        return static_cast<std::size_t>(key) & mask;
    }
    void grow();

    std::vector<std::uint64_t> slots_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;  // live keys
    std::size_t used_ = 0;  // live keys plus tombstones
};

/// Mutable working state of the linear procedure. Vertices are the
/// component's ids plus synthetic ids from original_vertex_count() up;
/// every working edge abbreviates a path of original vertices (its
/// expansion). Deletion costs time proportional to the degree removed;
/// worklist and adjacency queries are constant time.
class WorkGraph {
public:
    explicit WorkGraph(const Graph& component);

    int original_vertex_count() const noexcept { return original_n_; }
    /// One past the largest id in use (synthetics included).
    int vertex_id_limit() const noexcept { return static_cast<int>(vertex_alive_.size()); }
    bool vertex_alive(int v) const { return vertex_alive_[static_cast<std::size_t>(v)]; }
    bool synthetic(int v) const noexcept { return v >= original_n_; }
    int live_vertex_count() const noexcept { return live_count_; }
    int live_edge_count() const noexcept { return static_cast<int>(present_.size()); }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return present_.contains(edge_key(u, v)); }
    /// Neighbors in internal list order (deterministic, unspecified).
    std::vector<int> neighbors(int v) const;

    bool worklist_empty() const noexcept { return worklist_head_ == -1; }
    int worklist_size() const noexcept { return worklist_size_; }
    int worklist_pop_front();
    void worklist_push_back(int v);
    bool worklist_contains(int v) const { return in_worklist_[static_cast<std::size_t>(v)]; }

    /// Maximal path of degree-2 interior vertices through v (which must be
    /// live with degree 2), extended first toward v's lower-id neighbor.
    /// closed means the walk returned to v: the whole graph is a cycle and
    /// vertices then holds it in walk order. Otherwise vertices runs from
    /// one endpoint of degree != 2 to the other.
    struct PathScan {
        std::vector<int> vertices;
        std::vector<int> edge_ids; // edge_ids[i] joins vertices[i], vertices[i+1];
                                   // when closed, one more wrapping back to front
        bool closed = false;
    };
    PathScan maximal_degree2_path(int v) const;

    /// Original-id path abbreviated by the working path (read-only).
    std::vector<int> expand_path(const PathScan& scan) const;
    /// Original-id cycle abbreviated by a closed scan (read-only).
    std::vector<int> expand_cycle(const PathScan& scan) const;

    /// Removes the interior vertices scan.vertices[1..n-2] from the graph
    /// and the worklist. Endpoint degrees drop by one each.
    void delete_interior(const PathScan& scan);

    /// Replaces the scanned chain by endpoint - w - endpoint with a fresh
    /// synthetic vertex w, splicing the expansions so nothing is lost.
    /// w is not added to the worklist. Returns w.
    int contract_chain(const PathScan& scan);

    /// Internal consistency check (adjacency symmetry, degree counts, hash
    /// set contents, worklist membership, expansion endpoints). Throws
    /// std::logic_error on violation. For tests.
    void validate() const;

private:
    struct EdgeRec {
        int ends[2];  // working vertex ids
        int prev[2];  // adjacency links per endpoint (-1 terminated)
        int next[2];
        int exp[2];   // expansion end node per endpoint
        bool alive = false;
    };
    struct ExpNode {
        int orig = -1;            // original vertex id
        int link[2] = {-1, -1};   // neighbor nodes, orientation-free
    };

    int slot_of(const EdgeRec& rec, int v) const;
    int add_exp_node(int orig);
    /// Joins two expansion end nodes that carry the same original id,
    /// dropping one of them. keep stays in place.
    void join_expansions(int keep, int drop);
    std::vector<int> read_expansion(const EdgeRec& rec, int from_vertex) const;
    int add_vertex();
    void add_edge(int u, int v, int exp_u, int exp_v);
    void remove_edge(int edge_id);
    void delete_vertex(int v);
    void worklist_remove(int v);

    int original_n_ = 0;
    int live_count_ = 0;
    std::vector<EdgeRec> edges_;
    std::vector<ExpNode> expansions_;
    std::vector<int> adj_head_;
    std::vector<int> degree_;
    std::vector<char> vertex_alive_;
    EdgeKeySet present_;
    // worklist: doubly linked by vertex id, O(1) removal anywhere
    std::vector<int> wl_prev_, wl_next_;
    std::vector<char> in_worklist_;
    int worklist_head_ = -1, worklist_tail_ = -1;
    int worklist_size_ = 0;
};

} // namespace cyclorient
