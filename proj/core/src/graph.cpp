#include "cyclorient/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace cyclorient {

Graph::Graph(int vertex_count, std::span<const Edge> edges) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw UnknownVertexError("negative vertex count");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.a == e.b) throw SelfLoopError("self-loop at vertex " + std::to_string(e.a));
        Edge n = make_edge(e.a, e.b);
        if (n.a < 0 || n.b >= vertex_count)
            throw UnknownVertexError("edge {" + std::to_string(n.a) + "," + std::to_string(n.b) +
                                     "} outside vertex range");
        edges_.push_back(n);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DuplicateEdgeError("duplicate edge {" + std::to_string(dup->a) + "," +
                                 std::to_string(dup->b) + "}");
    adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
        adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
    if (!contains_vertex(u) || !contains_vertex(v)) return false;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

void Orientation::set(Edge e, int tail) {
    Edge n = make_edge(e.a, e.b);
    if (tail != n.a && tail != n.b)
        throw PartialOrientationError("tail " + std::to_string(tail) + " is not an endpoint of {" +
                                      std::to_string(n.a) + "," + std::to_string(n.b) + "}");
    forward_[edge_key(n.a, n.b)] = (tail == n.a);
}

int Orientation::tail(Edge e) const {
    Edge n = make_edge(e.a, e.b);
    auto it = forward_.find(edge_key(n.a, n.b));
    if (it == forward_.end())
        throw PartialOrientationError("edge {" + std::to_string(n.a) + "," + std::to_string(n.b) +
                                      "} has no direction");
    return it->second ? n.a : n.b;
}

int Orientation::head(Edge e) const {
    Edge n = make_edge(e.a, e.b);
    return tail(n) == n.a ? n.b : n.a;
}

bool Orientation::is_total_on(const Graph& g) const {
    if (size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (const Edge& e : g.edges())
        if (!contains(e)) return false;
    return true;
}

Orientation Orientation::reversed() const {
    Orientation r;
    r.forward_ = forward_;
    for (auto& [key, fwd] : r.forward_) fwd = !fwd;
    return r;
}

bool is_path_in(const Graph& g, const VertexPath& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    std::unordered_set<int> seen;
    for (int v : vs) {
        if (!g.contains_vertex(v) || !seen.insert(v).second) return false;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    return true;
}

bool is_cycle_in(const Graph& g, const CycleSeq& c) {
    if (c.vertices.size() < 3) return false;
    if (!is_path_in(g, VertexPath{c.vertices})) return false;
    return g.has_edge(c.vertices.back(), c.vertices.front());
}

CycleSeq canonical_rotation(const CycleSeq& c) {
    const auto& vs = c.vertices;
    const std::size_t m = vs.size();
    if (m == 0) return c;
    std::size_t lo = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (vs[i] < vs[lo]) lo = i;
    const int after = vs[(lo + 1) % m];
    const int before = vs[(lo + m - 1) % m];
    CycleSeq out;
    out.vertices.reserve(m);
    if (after <= before) {
        for (std::size_t i = 0; i < m; ++i) out.vertices.push_back(vs[(lo + i) % m]);
    } else {
        for (std::size_t i = 0; i < m; ++i) out.vertices.push_back(vs[(lo + m - i) % m]);
    }
    return out;
}

namespace {

bool parse_id(std::string_view token, int& out) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return false;
    if (value < 0 || value > std::numeric_limits<int>::max()) return false;
    out = static_cast<int>(value);
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

} // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    int max_id = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        auto first_nonspace = view.find_first_not_of(" \t");
        if (first_nonspace == std::string_view::npos) continue;
        if (view[first_nonspace] == '#') continue;
        auto tokens = split_ws(view);
        if (tokens.size() != 2)
            throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()) +
                                 " token(s)",
                             line_no);
        int u = 0, v = 0;
        if (!parse_id(tokens[0], u) || !parse_id(tokens[1], v))
            throw ParseError("malformed vertex id", line_no);
        if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u), line_no);
        max_id = std::max({max_id, u, v});
        if (!seen.insert(edge_key(u, v)).second) {
            if (options.dedupe) continue;
            throw DuplicateEdgeError("duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                                         std::to_string(std::max(u, v)) + "}",
                                     line_no);
        }
        edges.push_back(make_edge(u, v));
    }
    return Graph(max_id + 1, edges);
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, options);
}

std::string emit_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.a);
        out += ' ';
        out += std::to_string(e.b);
        out += '\n';
    }
    return out;
}

std::string emit_dot(const Graph& g, const Orientation* o) {
    std::string out;
    out += o ? "digraph G {\n" : "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  ";
        out += std::to_string(v);
        out += ";\n";
    }
    for (const Edge& e : g.edges()) {
        int tail = e.a, head = e.b;
        if (o) {
            tail = o->tail(e); // throws PartialOrientationError when missing
            head = o->head(e);
        }
        out += "  ";
        out += std::to_string(tail);
        out += o ? " -> " : " -- ";
        out += std::to_string(head);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

Orientation parse_orientation(const Graph& g, std::istream& in) {
    Orientation o;
    std::unordered_set<std::uint64_t> seen;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        auto first_nonspace = view.find_first_not_of(" \t");
        if (first_nonspace == std::string_view::npos) continue;
        if (view[first_nonspace] == '#') continue;
        auto tokens = split_ws(view);
        if (tokens.size() != 2) throw ParseError("expected \"tail head\"", line_no);
        int tail = 0, head = 0;
        if (!parse_id(tokens[0], tail) || !parse_id(tokens[1], head))
            throw ParseError("malformed vertex id", line_no);
        if (tail == head) throw SelfLoopError("self-loop at vertex " + std::to_string(tail), line_no);
        if (!g.has_edge(tail, head))
            throw PartialOrientationError("line " + std::to_string(line_no) + ": {" +
                                          std::to_string(tail) + "," + std::to_string(head) +
                                          "} is not an edge of the graph");
        if (!seen.insert(edge_key(tail, head)).second)
            throw PartialOrientationError("line " + std::to_string(line_no) + ": edge {" +
                                          std::to_string(tail) + "," + std::to_string(head) +
                                          "} directed twice");
        o.set(make_edge(tail, head), tail);
    }
    if (o.size() != static_cast<std::size_t>(g.edge_count()))
        throw PartialOrientationError("orientation covers " + std::to_string(o.size()) + " of " +
                                      std::to_string(g.edge_count()) + " edges");
    return o;
}

Orientation parse_orientation(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_orientation(g, in);
}

std::string emit_orientation(const Graph& g, const Orientation& o) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(o.tail(e));
        out += ' ';
        out += std::to_string(o.head(e));
        out += '\n';
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> ids(s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (!g.contains_vertex(v))
            throw UnknownVertexError("vertex " + std::to_string(v) + " outside graph");
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        to_new[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = to_new[static_cast<std::size_t>(e.a)];
        const int b = to_new[static_cast<std::size_t>(e.b)];
        if (a != -1 && b != -1) edges.push_back(make_edge(a, b));
    }
    return InducedSubgraph{Graph(static_cast<int>(ids.size()), edges), std::move(ids)};
}

} // namespace cyclorient
