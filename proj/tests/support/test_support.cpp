#include "test_support.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cyclorient/rng.hpp"

namespace cyclorient::testsupport {

Graph single_edge() { return Graph(2, {Edge{0, 1}}); }

Graph path3() { return Graph(3, {Edge{0, 1}, Edge{1, 2}}); }

Graph triangle() { return Graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}}); }

Graph c4() { return Graph(4, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{0, 3}}); }

Graph c5() {
    return Graph(5, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{0, 4}});
}

Graph c4_chord() {
    return Graph(4, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{0, 3}, Edge{0, 2}});
}

Graph k4() {
    return Graph(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}});
}

Graph k23() {
    return Graph(5, {Edge{0, 2}, Edge{0, 3}, Edge{0, 4}, Edge{1, 2}, Edge{1, 3}, Edge{1, 4}});
}

Graph bowtie() {
    return Graph(5, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{2, 3}, Edge{3, 4}, Edge{2, 4}});
}

std::vector<Edge> complete_edge_list(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back(Edge{i, j});
    return pairs;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    const std::vector<Edge> pairs = complete_edge_list(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) edges.push_back(pairs[i]);
    return Graph(n, edges);
}

Graph random_graph(std::uint64_t seed, int n, int max_edges) {
    SplitMix64 rng(seed);
    std::vector<Edge> pairs = complete_edge_list(n);
    const int cap = std::min<int>(max_edges, static_cast<int>(pairs.size()));
    const int e = rng.uniform_int(0, cap);
    // Fisher-Yates prefix of length e
    for (int i = 0; i < e; ++i) {
        const auto j = i + static_cast<int>(rng.uniform_below(pairs.size() - static_cast<std::size_t>(i)));
        std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
    }
    pairs.resize(static_cast<std::size_t>(e));
    return Graph(n, pairs);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    visited[0] = 1;
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
    return reached == n;
}

std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    std::vector<char> in_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;

    // Paths [s, ...] over vertices > s; closing at s with length >= 3 and
    // path[1] < path.back() yields each cycle exactly once.
    auto extend = [&](auto&& self, int s) -> void {
        const int tip = path.back();
        for (int x : g.neighbors(tip)) {
            if (x == s && path.size() >= 3 && path[1] < tip) out.push_back(path);
            if (x <= s || in_path[static_cast<std::size_t>(x)]) continue;
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
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

std::vector<std::vector<Edge>> blocks_by_cycle_oracle(const Graph& g) {
    const auto& edges = g.edges();
    const auto edge_index = [&](int u, int v) {
        const Edge key = make_edge(u, v);
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
    };
    UnionFind uf(edges.size());
    for (const std::vector<int>& cycle : enumerate_simple_cycles(g)) {
        const int first = edge_index(cycle[0], cycle[1]);
        for (std::size_t i = 1; i < cycle.size(); ++i)
            uf.unite(first, edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    std::map<int, std::vector<Edge>> classes;
    for (std::size_t i = 0; i < edges.size(); ++i)
        classes[uf.find(static_cast<int>(i))].push_back(edges[i]);
    std::vector<std::vector<Edge>> out;
    for (auto& [root, block] : classes) {
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool log_replay_ok(const Graph& component, const DecompositionLog& log, std::string* why) {
    const auto fail = [&](const std::string& message) {
        if (why) *why = message;
        return false;
    };
    if (static_cast<bool>(log.base_cycle) == static_cast<bool>(log.base_edge))
        return fail("log must end in exactly one base event");

    std::set<Edge> produced;
    const auto add_edge_once = [&](int u, int v) {
        if (u == v) return fail("self-loop in replay");
        if (!component.has_edge(u, v)) return fail("replayed edge is not in the component");
        if (!produced.insert(make_edge(u, v)).second) return fail("edge replayed twice");
        return true;
    };

    std::set<int> dead;
    const auto all_alive = [&](const std::vector<int>& vs) {
        return std::none_of(vs.begin(), vs.end(), [&](int v) { return dead.contains(v); });
    };

    for (const EarEvent& ear : log.ears) {
        const auto& p = ear.path.vertices;
        if (p.size() < 3) return fail("ear with empty interior");
        if (!all_alive(p)) return fail("ear touches a vertex removed by an earlier ear");
        if (!is_path_in(component, ear.path)) return fail("ear path is not a path");
        if (make_edge(p.front(), p.back()) != ear.closing_edge)
            return fail("closing edge does not join the ear's endpoints");
        if (!component.has_edge(ear.closing_edge.a, ear.closing_edge.b))
            return fail("closing edge is not in the component");
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!add_edge_once(p[i], p[i + 1])) return false;
        dead.insert(p.begin() + 1, p.end() - 1);
    }
    if (log.base_cycle) {
        const auto& c = log.base_cycle->vertices;
        if (!all_alive(c)) return fail("base cycle touches a removed vertex");
        if (!is_cycle_in(component, *log.base_cycle)) return fail("base is not a cycle");
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!add_edge_once(c[i], c[(i + 1) % c.size()])) return false;
    } else {
        const Edge e = *log.base_edge;
        if (dead.contains(e.a) || dead.contains(e.b)) return fail("base edge touches a removed vertex");
        if (!add_edge_once(e.a, e.b)) return false;
    }
    if (produced.size() != static_cast<std::size_t>(component.edge_count()))
        return fail("replay missed " +
                    std::to_string(component.edge_count() - static_cast<int>(produced.size())) +
                    " edge(s)");
    return true;
}

} // namespace cyclorient::testsupport
