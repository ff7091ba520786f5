#include "cyclorient/biconnect.hpp"

#include <algorithm>

namespace cyclorient {

namespace {

struct Frame {
    int v;
    int parent;
    std::size_t next;
};

BiconnectedComponent assemble(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    std::vector<int> vertices;
    vertices.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        vertices.push_back(e.a);
        vertices.push_back(e.b);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return BiconnectedComponent{std::move(vertices), std::move(edges)};
}

} // namespace

BiconnectedDecomposition biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    BiconnectedDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<Frame> frames;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        if (g.degree(root) == 0) {
            out.isolated_vertices.push_back(root);
            disc[static_cast<std::size_t>(root)] = timer++;
            continue;
        }
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto adj = g.neighbors(f.v);
            if (f.next < adj.size()) {
                const int to = adj[f.next++];
                if (to == f.parent) continue;
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    edge_stack.push_back(make_edge(f.v, to));
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    frames.push_back({to, f.v, 0});
                } else if (disc[static_cast<std::size_t>(to)] < disc[static_cast<std::size_t>(f.v)]) {
                    // back edge toward an ancestor
                    edge_stack.push_back(make_edge(f.v, to));
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
                }
            } else {
                const int child = f.v;
                frames.pop_back();
                if (frames.empty()) continue;
                Frame& p = frames.back();
                low[static_cast<std::size_t>(p.v)] =
                    std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(child)]);
                if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(p.v)]) {
                    // p.v separates the subtree under child: pop one component
                    const Edge top = make_edge(p.v, child);
                    std::vector<Edge> component;
                    while (true) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        component.push_back(e);
                        if (e == top) break;
                    }
                    out.components.push_back(assemble(std::move(component)));
                }
            }
        }
    }
    return out;
}

} // namespace cyclorient
