#include "cyclorient/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclorient/rng.hpp"

namespace cyclorient {

std::vector<CycleSeq> enumerate_chordless_cycles(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw SizeLimitError("chordless-cycle enumeration capped at " +
                             std::to_string(max_vertices) + " vertices, got " +
                             std::to_string(g.vertex_count()));
    std::vector<CycleSeq> out;
    const int n = g.vertex_count();
    std::vector<char> in_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;

    // Grow induced paths [s, ...] over vertices > s; a neighbor of the tip
    // that is adjacent to s (and nothing else on the path) closes a
    // chordless cycle. Requiring second vertex < closing vertex emits each
    // cycle once, already in canonical rotation.
    auto extend = [&](auto&& self, int s) -> void {
        const int tip = path.back();
        for (int x : g.neighbors(tip)) {
            if (x <= s || in_path[static_cast<std::size_t>(x)]) continue;
            if (path.size() >= 2) {
                bool chord = false;
                for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                    chord = g.has_edge(x, path[i]);
                if (chord) continue;
                if (g.has_edge(x, s)) {
                    if (path[1] < x) {
                        CycleSeq cycle{path};
                        cycle.vertices.push_back(x);
                        out.push_back(std::move(cycle));
                    }
                    // extending past x would leave the chord {x,s} behind
                    continue;
                }
            }
            path.push_back(x);
            in_path[static_cast<std::size_t>(x)] = 1;
            self(self, s);
            in_path[static_cast<std::size_t>(x)] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        in_path[static_cast<std::size_t>(s)] = 1;
        extend(extend, s);
        in_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<bool, std::optional<Orientation>> brute_force_co(const Graph& g) {
    const int e = g.edge_count();
    if (e > kBruteForceEdgeCap)
        throw SizeLimitError("orientation sweep capped at " + std::to_string(kBruteForceEdgeCap) +
                             " edges, got " + std::to_string(e));
    const std::vector<CycleSeq> cycles = enumerate_chordless_cycles(g, g.vertex_count());

    // Edge index lookup over the sorted edge list.
    const auto& edges = g.edges();
    const auto edge_index = [&](int u, int v) {
        const Edge key = make_edge(u, v);
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
    };
    // Per cycle: participating-edge mask and the bit pattern meaning
    // "traversed low id -> high id everywhere" is violated; a cycle is
    // cyclic iff the orientation restricted to its mask equals the forward
    // pattern or its complement.
    struct CycleMask {
        std::uint32_t edges = 0;
        std::uint32_t forward = 0;
    };
    std::vector<CycleMask> masks;
    masks.reserve(cycles.size());
    for (const CycleSeq& cycle : cycles) {
        CycleMask m;
        const auto& vs = cycle.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const int u = vs[i];
            const int v = vs[(i + 1) % vs.size()];
            const int idx = edge_index(u, v);
            m.edges |= 1u << idx;
            if (u > v) m.forward |= 1u << idx; // traversal runs high -> low here
        }
        masks.push_back(m);
    }

    // Lexicographic sweep over direction bit-vectors b_0..b_{e-1} (b_0 most
    // significant); bit value 0 directs the edge low id -> high id.
    const std::uint64_t total = 1ull << e;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        std::uint32_t bits = 0;
        for (int i = 0; i < e; ++i)
            if (counter >> (e - 1 - i) & 1ull) bits |= 1u << i;
        bool ok = true;
        for (const CycleMask& m : masks) {
            const std::uint32_t r = bits & m.edges;
            if (r != m.forward && r != (m.forward ^ m.edges)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Orientation o;
            for (int i = 0; i < e; ++i) o.set(edges[static_cast<std::size_t>(i)],
                                              (bits >> i & 1u) ? edges[static_cast<std::size_t>(i)].b
                                                               : edges[static_cast<std::size_t>(i)].a);
            return {true, std::move(o)};
        }
    }
    return {false, std::nullopt};
}

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    // connected with all degrees 2 and e == n: one cycle
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        ++reached;
        for (int u : g.neighbors(v))
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
    }
    return reached == g.vertex_count();
}

// Connectivity of g minus two vertices: false iff the remaining vertices
// split into two or more components.
bool connected_without(const Graph& g, int x, int y) {
    const int n = g.vertex_count();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[static_cast<std::size_t>(x)] = visited[static_cast<std::size_t>(y)] = 1;
    int start = -1;
    for (int v = 0; v < n && start == -1; ++v)
        if (!visited[static_cast<std::size_t>(v)]) start = v;
    if (start == -1) return true; // nothing left
    std::deque<int> queue{start};
    visited[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
                ++reached;
            }
    }
    return reached == n - 2;
}

} // namespace

std::optional<Edge> find_separating_edge(const Graph& component) {
    if (component.vertex_count() == 2 && component.edge_count() == 1)
        throw PreconditionError("component is a single edge");
    if (is_cycle_graph(component)) throw PreconditionError("component is a cycle");
    for (const Edge& e : component.edges())
        if (!connected_without(component, e.a, e.b)) return e;
    return std::nullopt;
}

namespace {

// BFS shortest path inside g from src to dst; neighbors visited ascending,
// so the parent tree (and the result) is deterministic. Returns the path
// src..dst; src == dst yields the single vertex.
std::vector<int> bfs_shortest_path(const Graph& g, int src, int dst) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    parent[static_cast<std::size_t>(src)] = -1;
    std::deque<int> queue{src};
    while (!queue.empty() && parent[static_cast<std::size_t>(dst)] == -2) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (parent[static_cast<std::size_t>(u)] == -2) {
                parent[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            }
    }
    if (parent[static_cast<std::size_t>(dst)] == -2)
        throw PreconditionError("endpoints not connected inside the induced subgraph");
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

VertexPath shorten_to_chain(const Graph& g, const VertexPath& p) {
    if (p.vertices.empty()) throw PreconditionError("empty path");
    if (!is_path_in(g, p)) throw PreconditionError("input is not a path of the graph");
    const InducedSubgraph sub = induced_subgraph(g, p.vertices);
    const auto local = [&](int original) {
        return static_cast<int>(std::lower_bound(sub.to_original.begin(), sub.to_original.end(),
                                                 original) -
                                sub.to_original.begin());
    };
    std::vector<int> path =
        bfs_shortest_path(sub.graph, local(p.vertices.front()), local(p.vertices.back()));
    VertexPath chain;
    chain.vertices.reserve(path.size());
    for (int v : path) chain.vertices.push_back(sub.to_original[static_cast<std::size_t>(v)]);
    return chain;
}

CycleSeq shorten_to_chordless(const Graph& g, int v, const CycleSeq& z) {
    if (!is_cycle_in(g, z)) throw PreconditionError("input is not a cycle of the graph");
    if (std::find(z.vertices.begin(), z.vertices.end(), v) == z.vertices.end())
        throw PreconditionError("vertex not on the cycle");
    const InducedSubgraph sub = induced_subgraph(g, z.vertices);
    const auto local = [&](int original) {
        return static_cast<int>(std::lower_bound(sub.to_original.begin(), sub.to_original.end(),
                                                 original) -
                                sub.to_original.begin());
    };
    const int lv = local(v);

    // Shortest cycle through lv: shortest path between two of its neighbors
    // avoiding lv, minimized over ascending neighbor pairs. A shortest
    // cycle through a vertex is chordless (any chord would shortcut it).
    std::vector<int> keep;
    for (int u = 0; u < sub.graph.vertex_count(); ++u)
        if (u != lv) keep.push_back(u);
    const InducedSubgraph without = induced_subgraph(sub.graph, keep);
    const auto without_id = [&](int id) {
        return static_cast<int>(std::lower_bound(without.to_original.begin(),
                                                 without.to_original.end(), id) -
                                without.to_original.begin());
    };

    std::optional<std::vector<int>> best; // local-ids of sub.graph, starting at lv
    const auto ns = sub.graph.neighbors(lv);
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            std::vector<int> arc;
            try {
                arc = bfs_shortest_path(without.graph, without_id(ns[i]), without_id(ns[j]));
            } catch (const PreconditionError&) {
                continue; // these neighbors are separated once lv is gone
            }
            std::vector<int> cycle{lv};
            for (int u : arc) cycle.push_back(without.to_original[static_cast<std::size_t>(u)]);
            if (!best || cycle.size() < best->size()) best = std::move(cycle);
        }
    if (!best) throw PreconditionError("no cycle through the vertex inside the induced subgraph");

    CycleSeq result;
    result.vertices.reserve(best->size());
    for (int u : *best) result.vertices.push_back(sub.to_original[static_cast<std::size_t>(u)]);
    result = canonical_rotation(result);

    // chordlessness assertion: direct chord scan
    const auto& vs = result.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == vs.size() - 1);
            if (!consecutive && g.has_edge(vs[i], vs[j]))
                throw std::logic_error("shortest cycle through vertex has a chord");
        }
    return result;
}

GluedGraph glue_along_edge(const GluingSpec& spec) {
    const auto check = [](const Graph& g, const OrientedEdge& e, const char* which) {
        if (!g.has_edge(e.tail, e.head))
            throw PreconditionError(std::string(which) + " oriented edge {" +
                                    std::to_string(e.tail) + "," + std::to_string(e.head) +
                                    "} is not an edge of its graph");
    };
    check(spec.first, spec.first_edge, "first");
    check(spec.second, spec.second_edge, "second");

    const int n1 = spec.first.vertex_count();
    std::vector<int> map(static_cast<std::size_t>(spec.second.vertex_count()), -1);
    map[static_cast<std::size_t>(spec.second_edge.tail)] = spec.first_edge.tail;
    map[static_cast<std::size_t>(spec.second_edge.head)] = spec.first_edge.head;
    int next_id = n1;
    for (int v = 0; v < spec.second.vertex_count(); ++v)
        if (map[static_cast<std::size_t>(v)] == -1) map[static_cast<std::size_t>(v)] = next_id++;

    std::vector<Edge> edges = spec.first.edges();
    for (const Edge& e : spec.second.edges()) {
        const Edge mapped = make_edge(map[static_cast<std::size_t>(e.a)],
                                      map[static_cast<std::size_t>(e.b)]);
        if (mapped == make_edge(spec.first_edge.tail, spec.first_edge.head)) continue; // shared
        edges.push_back(mapped);
    }
    return GluedGraph{Graph(next_id, edges), std::move(map)};
}

GeneratedGraph gen_co_graph(std::uint64_t seed, int target_n, int max_cycle_len) {
    if (target_n < 3) throw BadParamsError("target_n must be at least 3");
    if (max_cycle_len < 3) throw BadParamsError("max_cycle_len must be at least 3");
    SplitMix64 rng(seed);

    std::vector<Edge> edges; // in construction order, for uniform choice
    int n = rng.uniform_int(3, max_cycle_len);
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    CycleSeq base;
    for (int i = 0; i < n; ++i) base.vertices.push_back(i);

    std::vector<EarEvent> glued; // construction order
    while (n < target_n) {
        const int z = rng.uniform_int(3, max_cycle_len);
        const Edge at = edges[rng.uniform_below(edges.size())];
        // fresh path of z-2 vertices joining at.a and at.b
        EarEvent ear;
        ear.closing_edge = at;
        ear.path.vertices.push_back(at.a);
        int prev = at.a;
        for (int i = 0; i < z - 2; ++i) {
            const int fresh = n + i;
            edges.push_back(make_edge(prev, fresh));
            ear.path.vertices.push_back(fresh);
            prev = fresh;
        }
        edges.push_back(make_edge(prev, at.b));
        ear.path.vertices.push_back(at.b);
        n += z - 2;
        glued.push_back(std::move(ear));
    }

    GeneratedGraph out{Graph(n, edges), DecompositionLog{}};
    out.log.component_id = 0;
    out.log.ears.assign(glued.rbegin(), glued.rend()); // removal order
    out.log.base_cycle = std::move(base);
    return out;
}

Graph gen_perturbed(std::uint64_t seed, const Graph& base) {
    const int n = base.vertex_count();
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (pairs - base.edge_count() <= 0)
        throw CompleteGraphError("base graph has no non-adjacent vertex pair");
    SplitMix64 rng(seed);
    while (true) {
        const int u = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (u == v || base.has_edge(u, v)) continue;
        std::vector<Edge> edges = base.edges();
        edges.push_back(make_edge(u, v));
        return Graph(n, edges);
    }
}

std::optional<bool> corpus_expected(std::string_view corpus_text) {
    std::istringstream in{std::string(corpus_text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view prefix = "# expected:";
        if (line.rfind(prefix, 0) != 0) continue;
        std::string value = line.substr(prefix.size());
        value.erase(std::remove_if(value.begin(), value.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    value.end());
        if (value == "yes") return true;
        if (value == "no") return false;
    }
    return std::nullopt;
}

} // namespace cyclorient
