#include "cyclorient/decide.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclorient/biconnect.hpp"

namespace cyclorient {

// ---------------------------------------------------------------------------
// EdgeKeySet
// ---------------------------------------------------------------------------

void EdgeKeySet::reset(std::size_t expected) {
    std::size_t capacity = 16;
    while (capacity < expected * 2) capacity <<= 1;
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    size_ = 0;
    used_ = 0;
}

void EdgeKeySet::grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    used_ = size_;
    for (const std::uint64_t key : old) {
        if (key == kEmpty || key == kTombstone) continue;
        std::size_t i = slot_of(key, mask_);
        while (slots_[i] != kEmpty) i = (i + 1) & mask_;
        slots_[i] = key;
    }
}

bool EdgeKeySet::insert(std::uint64_t key) {
    if (used_ * 4 >= slots_.size() * 3) grow(); // live + tombstones past 3/4
    std::size_t i = slot_of(key, mask_);
    std::size_t place = slots_.size();
    while (true) {
        const std::uint64_t slot = slots_[i];
        if (slot == key) return false;
        if (slot == kTombstone) {
            if (place == slots_.size()) place = i;
        } else if (slot == kEmpty) {
            if (place == slots_.size()) {
                place = i;
                ++used_;
            }
            slots_[place] = key;
            ++size_;
            return true;
        }
        i = (i + 1) & mask_;
    }
}

bool EdgeKeySet::erase(std::uint64_t key) {
    std::size_t i = slot_of(key, mask_);
    while (true) {
        const std::uint64_t slot = slots_[i];
        if (slot == key) {
            slots_[i] = kTombstone;
            --size_;
            return true;
        }
        if (slot == kEmpty) return false;
        i = (i + 1) & mask_;
    }
}

bool EdgeKeySet::contains(std::uint64_t key) const {
    std::size_t i = slot_of(key, mask_);
    while (true) {
        const std::uint64_t slot = slots_[i];
        if (slot == key) return true;
        if (slot == kEmpty) return false;
        i = (i + 1) & mask_;
    }
}

// ---------------------------------------------------------------------------
// WorkGraph
// ---------------------------------------------------------------------------

WorkGraph::WorkGraph(const Graph& component) : original_n_(component.vertex_count()) {
    const int n = original_n_;
    adj_head_.assign(static_cast<std::size_t>(n), -1);
    degree_.assign(static_cast<std::size_t>(n), 0);
    vertex_alive_.assign(static_cast<std::size_t>(n), 1);
    wl_prev_.assign(static_cast<std::size_t>(n), -1);
    wl_next_.assign(static_cast<std::size_t>(n), -1);
    in_worklist_.assign(static_cast<std::size_t>(n), 0);
    live_count_ = n;
    edges_.reserve(component.edges().size());
    expansions_.reserve(component.edges().size() * 2);
    present_.reset(component.edges().size() + 16);
    for (const Edge& e : component.edges()) {
        const int na = add_exp_node(e.a);
        const int nb = add_exp_node(e.b);
        expansions_[static_cast<std::size_t>(na)].link[0] = nb;
        expansions_[static_cast<std::size_t>(nb)].link[0] = na;
        add_edge(e.a, e.b, na, nb);
    }
    for (int v = 0; v < n; ++v)
        if (degree_[static_cast<std::size_t>(v)] == 2) worklist_push_back(v);
}

int WorkGraph::slot_of(const EdgeRec& rec, int v) const {
    if (rec.ends[0] == v) return 0;
    if (rec.ends[1] == v) return 1;
    throw std::logic_error("vertex " + std::to_string(v) + " not incident to edge");
}

int WorkGraph::add_exp_node(int orig) {
    expansions_.push_back(ExpNode{orig, {-1, -1}});
    return static_cast<int>(expansions_.size()) - 1;
}

void WorkGraph::join_expansions(int keep, int drop) {
    ExpNode& dn = expansions_[static_cast<std::size_t>(drop)];
    ExpNode& kn = expansions_[static_cast<std::size_t>(keep)];
    if (dn.orig != kn.orig) throw std::logic_error("expansion junction mismatch");
    const int inner = dn.link[0] != -1 ? dn.link[0] : dn.link[1];
    if (inner == -1 || (dn.link[0] != -1 && dn.link[1] != -1))
        throw std::logic_error("expansion junction is not an end node");
    ExpNode& in = expansions_[static_cast<std::size_t>(inner)];
    (in.link[0] == drop ? in.link[0] : in.link[1]) = keep;
    int& free_slot = kn.link[0] == -1 ? kn.link[0] : kn.link[1];
    if (free_slot != -1) throw std::logic_error("expansion end has no free slot");
    free_slot = inner;
    dn.link[0] = dn.link[1] = -1;
}

std::vector<int> WorkGraph::read_expansion(const EdgeRec& rec, int from_vertex) const {
    std::vector<int> out;
    int cur = rec.exp[slot_of(rec, from_vertex)];
    int prev = -1;
    while (cur != -1) {
        const ExpNode& node = expansions_[static_cast<std::size_t>(cur)];
        out.push_back(node.orig);
        const int next = node.link[0] != prev ? node.link[0] : node.link[1];
        prev = cur;
        cur = next;
    }
    return out;
}

int WorkGraph::add_vertex() {
    const int v = static_cast<int>(vertex_alive_.size());
    adj_head_.push_back(-1);
    degree_.push_back(0);
    vertex_alive_.push_back(1);
    wl_prev_.push_back(-1);
    wl_next_.push_back(-1);
    in_worklist_.push_back(0);
    ++live_count_;
    return v;
}

void WorkGraph::add_edge(int u, int v, int exp_u, int exp_v) {
    if (u == v) throw std::logic_error("work graph would gain a loop");
    if (has_edge(u, v)) throw std::logic_error("work graph would gain a duplicate edge");
    const int id = static_cast<int>(edges_.size());
    EdgeRec rec;
    rec.ends[0] = u;
    rec.ends[1] = v;
    rec.exp[0] = exp_u;
    rec.exp[1] = exp_v;
    rec.alive = true;
    for (int slot = 0; slot < 2; ++slot) {
        const int at = rec.ends[slot];
        const int head = adj_head_[static_cast<std::size_t>(at)];
        rec.prev[slot] = -1;
        rec.next[slot] = head;
        if (head != -1) {
            EdgeRec& h = edges_[static_cast<std::size_t>(head)];
            h.prev[slot_of(h, at)] = id;
        }
        adj_head_[static_cast<std::size_t>(at)] = id;
        ++degree_[static_cast<std::size_t>(at)];
    }
    edges_.push_back(rec);
    present_.insert(edge_key(u, v));
}

void WorkGraph::remove_edge(int edge_id) {
    EdgeRec& rec = edges_[static_cast<std::size_t>(edge_id)];
    if (!rec.alive) throw std::logic_error("edge removed twice");
    for (int slot = 0; slot < 2; ++slot) {
        const int at = rec.ends[slot];
        const int prev = rec.prev[slot];
        const int next = rec.next[slot];
        if (prev != -1) {
            EdgeRec& p = edges_[static_cast<std::size_t>(prev)];
            p.next[slot_of(p, at)] = next;
        } else {
            adj_head_[static_cast<std::size_t>(at)] = next;
        }
        if (next != -1) {
            EdgeRec& nx = edges_[static_cast<std::size_t>(next)];
            nx.prev[slot_of(nx, at)] = prev;
        }
        --degree_[static_cast<std::size_t>(at)];
    }
    present_.erase(edge_key(rec.ends[0], rec.ends[1]));
    rec.alive = false;
}

void WorkGraph::delete_vertex(int v) {
    int cur = adj_head_[static_cast<std::size_t>(v)];
    while (cur != -1) {
        const EdgeRec& rec = edges_[static_cast<std::size_t>(cur)];
        const int next = rec.next[slot_of(rec, v)];
        remove_edge(cur);
        cur = next;
    }
    vertex_alive_[static_cast<std::size_t>(v)] = 0;
    --live_count_;
    if (in_worklist_[static_cast<std::size_t>(v)]) worklist_remove(v);
}

std::vector<int> WorkGraph::neighbors(int v) const {
    std::vector<int> out;
    int cur = adj_head_[static_cast<std::size_t>(v)];
    while (cur != -1) {
        const EdgeRec& rec = edges_[static_cast<std::size_t>(cur)];
        const int slot = slot_of(rec, v);
        out.push_back(rec.ends[1 - slot]);
        cur = rec.next[slot];
    }
    return out;
}

int WorkGraph::worklist_pop_front() {
    if (worklist_head_ == -1) throw std::logic_error("worklist empty");
    const int v = worklist_head_;
    worklist_remove(v);
    return v;
}

void WorkGraph::worklist_push_back(int v) {
    if (in_worklist_[static_cast<std::size_t>(v)]) throw std::logic_error("vertex already listed");
    in_worklist_[static_cast<std::size_t>(v)] = 1;
    wl_prev_[static_cast<std::size_t>(v)] = worklist_tail_;
    wl_next_[static_cast<std::size_t>(v)] = -1;
    if (worklist_tail_ != -1)
        wl_next_[static_cast<std::size_t>(worklist_tail_)] = v;
    else
        worklist_head_ = v;
    worklist_tail_ = v;
    ++worklist_size_;
}

void WorkGraph::worklist_remove(int v) {
    if (!in_worklist_[static_cast<std::size_t>(v)]) throw std::logic_error("vertex not listed");
    const int prev = wl_prev_[static_cast<std::size_t>(v)];
    const int next = wl_next_[static_cast<std::size_t>(v)];
    if (prev != -1)
        wl_next_[static_cast<std::size_t>(prev)] = next;
    else
        worklist_head_ = next;
    if (next != -1)
        wl_prev_[static_cast<std::size_t>(next)] = prev;
    else
        worklist_tail_ = prev;
    wl_prev_[static_cast<std::size_t>(v)] = wl_next_[static_cast<std::size_t>(v)] = -1;
    in_worklist_[static_cast<std::size_t>(v)] = 0;
    --worklist_size_;
}

WorkGraph::PathScan WorkGraph::maximal_degree2_path(int v) const {
    if (!vertex_alive(v) || degree(v) != 2)
        throw std::logic_error("path scan must start at a live degree-2 vertex");
    // v's two incident edges, ordered so we extend toward the lower
    // neighbor id first.
    int first_edge = adj_head_[static_cast<std::size_t>(v)];
    const EdgeRec& fe = edges_[static_cast<std::size_t>(first_edge)];
    int second_edge = fe.next[slot_of(fe, v)];
    const EdgeRec& se = edges_[static_cast<std::size_t>(second_edge)];
    const int fn = fe.ends[1 - slot_of(fe, v)];
    const int sn = se.ends[1 - slot_of(se, v)];
    if (fn > sn) std::swap(first_edge, second_edge);

    // Walk one direction until a vertex of degree != 2 or v itself.
    const auto walk = [&](int start_edge, std::vector<int>& verts, std::vector<int>& eids) -> bool {
        int prev = v;
        int via = start_edge;
        while (true) {
            const EdgeRec& rec = edges_[static_cast<std::size_t>(via)];
            const int cur = rec.ends[1 - slot_of(rec, prev)];
            eids.push_back(via);
            if (cur == v) return true; // came all the way around
            verts.push_back(cur);
            if (degree(cur) != 2) return false;
            const int e0 = adj_head_[static_cast<std::size_t>(cur)];
            const EdgeRec& r0 = edges_[static_cast<std::size_t>(e0)];
            const int e1 = r0.next[slot_of(r0, cur)];
            via = (e0 == via) ? e1 : e0;
            if (degree(cur) < 2 || via == -1)
                throw NotTwoConnectedError("degree below 2 during path extension");
            prev = cur;
        }
    };

    std::vector<int> left_verts, left_eids;
    const bool closed = walk(first_edge, left_verts, left_eids);
    PathScan scan;
    scan.closed = closed;
    if (closed) {
        scan.vertices.reserve(left_verts.size() + 1);
        scan.vertices.push_back(v);
        scan.vertices.insert(scan.vertices.end(), left_verts.begin(), left_verts.end());
        scan.edge_ids = std::move(left_eids); // last id wraps back to v
        return scan;
    }
    std::vector<int> right_verts, right_eids;
    walk(second_edge, right_verts, right_eids);
    scan.vertices.reserve(left_verts.size() + right_verts.size() + 1);
    scan.vertices.insert(scan.vertices.end(), left_verts.rbegin(), left_verts.rend());
    scan.vertices.push_back(v);
    scan.vertices.insert(scan.vertices.end(), right_verts.begin(), right_verts.end());
    scan.edge_ids.reserve(left_eids.size() + right_eids.size());
    scan.edge_ids.insert(scan.edge_ids.end(), left_eids.rbegin(), left_eids.rend());
    scan.edge_ids.insert(scan.edge_ids.end(), right_eids.begin(), right_eids.end());
    return scan;
}

std::vector<int> WorkGraph::expand_path(const PathScan& scan) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < scan.edge_ids.size(); ++i) {
        const EdgeRec& rec = edges_[static_cast<std::size_t>(scan.edge_ids[i])];
        std::vector<int> seq = read_expansion(rec, scan.vertices[i]);
        out.insert(out.end(), seq.begin() + (i == 0 ? 0 : 1), seq.end());
    }
    return out;
}

std::vector<int> WorkGraph::expand_cycle(const PathScan& scan) const {
    if (!scan.closed) throw std::logic_error("expand_cycle needs a closed scan");
    std::vector<int> out;
    const std::size_t m = scan.edge_ids.size();
    for (std::size_t i = 0; i < m; ++i) {
        const EdgeRec& rec = edges_[static_cast<std::size_t>(scan.edge_ids[i])];
        std::vector<int> seq = read_expansion(rec, scan.vertices[i % scan.vertices.size()]);
        out.insert(out.end(), seq.begin() + (i == 0 ? 0 : 1), seq.end());
    }
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

void WorkGraph::delete_interior(const PathScan& scan) {
    for (std::size_t i = 1; i + 1 < scan.vertices.size(); ++i) delete_vertex(scan.vertices[i]);
}

int WorkGraph::contract_chain(const PathScan& scan) {
    const auto& verts = scan.vertices;
    const auto& eids = scan.edge_ids;
    if (scan.closed || verts.size() < 3) throw std::logic_error("chain contraction needs an open path");
    const int u1 = verts.front();
    const int ul = verts.back();
    if (u1 == ul) throw std::logic_error("chain contraction endpoints coincide");

    // First edge's expansion becomes {u1, w}'s; the rest merge into {w, ul}'s.
    const EdgeRec& first = edges_[static_cast<std::size_t>(eids[0])];
    const int exp_a0 = first.exp[slot_of(first, u1)];
    const int exp_a1 = first.exp[slot_of(first, verts[1])];
    const EdgeRec& second = edges_[static_cast<std::size_t>(eids[1])];
    int head = second.exp[slot_of(second, verts[1])];
    int tail = second.exp[slot_of(second, verts[2])];
    for (std::size_t i = 2; i < eids.size(); ++i) {
        const EdgeRec& rec = edges_[static_cast<std::size_t>(eids[i])];
        const int junction = rec.exp[slot_of(rec, verts[i])];
        const int far = rec.exp[slot_of(rec, verts[i + 1])];
        join_expansions(tail, junction);
        tail = far;
    }

    for (std::size_t i = 1; i + 1 < verts.size(); ++i) delete_vertex(verts[i]);
    const int w = add_vertex();
    add_edge(u1, w, exp_a0, exp_a1);
    add_edge(w, ul, head, tail);
    return w;
}

void WorkGraph::validate() const {
    const int limit = vertex_id_limit();
    std::vector<int> seen_degree(static_cast<std::size_t>(limit), 0);
    std::size_t live_edges = 0;
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const EdgeRec& rec = edges_[id];
        if (!rec.alive) continue;
        ++live_edges;
        if (rec.ends[0] == rec.ends[1]) throw std::logic_error("loop in work graph");
        if (!present_.contains(edge_key(rec.ends[0], rec.ends[1])))
            throw std::logic_error("live edge missing from hash set");
        for (int slot = 0; slot < 2; ++slot) {
            const int at = rec.ends[slot];
            if (!vertex_alive(at)) throw std::logic_error("edge touches dead vertex");
            ++seen_degree[static_cast<std::size_t>(at)];
            // expansion ends on this side must carry one consistent original id
            const ExpNode& node = expansions_[static_cast<std::size_t>(rec.exp[slot])];
            if (!synthetic(at) && node.orig != at)
                throw std::logic_error("expansion end disagrees with original vertex");
        }
    }
    if (live_edges != present_.size()) throw std::logic_error("hash set size mismatch");
    int live = 0;
    for (int v = 0; v < limit; ++v) {
        if (!vertex_alive(v)) continue;
        ++live;
        if (seen_degree[static_cast<std::size_t>(v)] != degree(v))
            throw std::logic_error("degree counter mismatch");
        std::vector<int> ns = neighbors(v);
        if (static_cast<int>(ns.size()) != degree(v)) throw std::logic_error("adjacency length mismatch");
        for (int u : ns)
            if (!has_edge(u, v)) throw std::logic_error("adjacency asymmetric with hash set");
    }
    if (live != live_count_) throw std::logic_error("live vertex counter mismatch");
    for (int v = worklist_head_; v != -1; v = wl_next_[static_cast<std::size_t>(v)]) {
        if (!in_worklist_[static_cast<std::size_t>(v)]) throw std::logic_error("worklist flag mismatch");
        if (!vertex_alive(v) || degree(v) != 2)
            throw std::logic_error("worklist member is not a live degree-2 vertex");
        if (synthetic(v)) throw std::logic_error("synthetic vertex in worklist");
    }
}

// ---------------------------------------------------------------------------
// Linear procedure
// ---------------------------------------------------------------------------

namespace {

Verdict yes_verdict(DecompositionLog log) {
    Verdict v;
    v.answer = true;
    v.log = std::move(log);
    return v;
}

Verdict no_verdict(Refusal reason) {
    Verdict v;
    v.answer = false;
    v.reason = reason;
    return v;
}

void require_min_degree_two(const Graph& component) {
    for (int v = 0; v < component.vertex_count(); ++v)
        if (component.degree(v) <= 1)
            throw NotTwoConnectedError("vertex " + std::to_string(v) +
                                       " has degree " + std::to_string(component.degree(v)) +
                                       " in a multi-edge component");
}

} // namespace

Verdict check_component_linear(const Graph& component, int component_id, DecideStats* stats) {
    const int n = component.vertex_count();
    const int e = component.edge_count();
    DecompositionLog log;
    log.component_id = component_id;
    if (e == 0) {
        // no cycles at all; only meaningful for direct calls on <= 1 vertex
        if (n > 1) throw NotTwoConnectedError("edgeless multi-vertex input");
        Verdict v;
        v.answer = true;
        return v;
    }
    if (e == 1 && n == 2) {
        log.base_edge = component.edges().front();
        return yes_verdict(std::move(log));
    }
    require_min_degree_two(component);

    WorkGraph wg(component);
    while (true) {
        if (wg.worklist_empty())
            return no_verdict(Refusal{RefusalKind::no_degree_two_vertex, component_id, n, e});
        const int live_before = wg.live_vertex_count();
        const int worklist_before = wg.worklist_size();
        const int v = wg.worklist_pop_front();
        if (stats) ++stats->linear_loop_iterations;
        const WorkGraph::PathScan scan = wg.maximal_degree2_path(v);
        if (scan.closed) {
            CycleSeq cycle{wg.expand_cycle(scan)};
            log.base_cycle = canonical_rotation(cycle);
            return yes_verdict(std::move(log));
        }
        const int u1 = scan.vertices.front();
        const int ul = scan.vertices.back();
        if (u1 == ul)
            throw NotTwoConnectedError("maximal degree-2 path returned to one endpoint");
        if (wg.has_edge(u1, ul)) {
            // ear removal: the path plus {u1,ul} is a chordless cycle
            std::vector<int> original = wg.expand_path(scan);
            wg.delete_interior(scan);
            log.ears.push_back(EarEvent{VertexPath{std::move(original)}, make_edge(u1, ul)});
            for (int endpoint : {u1, ul})
                if (wg.degree(endpoint) == 2 && !wg.worklist_contains(endpoint))
                    wg.worklist_push_back(endpoint);
        } else {
            wg.contract_chain(scan);
        }
        if (stats) {
            // progress measure (live vertices, worklist length) must drop
            const int live_after = wg.live_vertex_count();
            const int worklist_after = wg.worklist_size();
            if (live_after > live_before ||
                (live_after == live_before && worklist_after >= worklist_before))
                stats->monotone_progress = false;
        }
    }
}

// ---------------------------------------------------------------------------
// Naive procedure
// ---------------------------------------------------------------------------

namespace {

struct NaiveScan {
    std::vector<int> vertices;
    bool closed = false;
};

NaiveScan naive_maximal_path(const Graph& g, int v) {
    const auto walk = [&](int toward, std::vector<int>& out) -> bool {
        int prev = v;
        int cur = toward;
        while (true) {
            if (cur == v) return true;
            out.push_back(cur);
            if (g.degree(cur) != 2) return false;
            auto ns = g.neighbors(cur);
            if (ns.size() != 2) throw NotTwoConnectedError("degree bookkeeping broke");
            const int next = ns[0] == prev ? ns[1] : ns[0];
            prev = cur;
            cur = next;
        }
    };
    auto ns = g.neighbors(v);
    std::vector<int> left, right;
    NaiveScan scan;
    scan.closed = walk(ns[0], left); // lower neighbor first: lists are sorted
    if (scan.closed) {
        scan.vertices.push_back(v);
        scan.vertices.insert(scan.vertices.end(), left.begin(), left.end());
        return scan;
    }
    walk(ns[1], right);
    scan.vertices.insert(scan.vertices.end(), left.rbegin(), left.rend());
    scan.vertices.push_back(v);
    scan.vertices.insert(scan.vertices.end(), right.begin(), right.end());
    return scan;
}

} // namespace

bool check_component_naive(const Graph& component) {
    Graph g = component;
    while (true) {
        const int n = g.vertex_count();
        if (n <= 1) return true;
        if (n == 2) return g.edge_count() == 1; // single edge
        if (g.edge_count() == 0) throw NotTwoConnectedError("edgeless multi-vertex input");
        require_min_degree_two(g);

        std::vector<char> marked(static_cast<std::size_t>(n), 0);
        int cursor = 0;
        std::optional<Graph> next;
        while (true) {
            while (cursor < n &&
                   (g.degree(cursor) != 2 || marked[static_cast<std::size_t>(cursor)]))
                ++cursor;
            if (cursor == n) return false; // no unmarked degree-2 vertex left
            const NaiveScan scan = naive_maximal_path(g, cursor);
            if (scan.closed) return true; // the component is a cycle
            for (std::size_t i = 1; i + 1 < scan.vertices.size(); ++i)
                marked[static_cast<std::size_t>(scan.vertices[i])] = 1;
            const int u1 = scan.vertices.front();
            const int ul = scan.vertices.back();
            if (u1 == ul)
                throw NotTwoConnectedError("maximal degree-2 path returned to one endpoint");
            if (g.has_edge(u1, ul)) {
                // drop the interior and decide the smaller graph
                std::vector<char> keep(static_cast<std::size_t>(n), 1);
                for (std::size_t i = 1; i + 1 < scan.vertices.size(); ++i)
                    keep[static_cast<std::size_t>(scan.vertices[i])] = 0;
                std::vector<int> rest;
                rest.reserve(static_cast<std::size_t>(n));
                for (int u = 0; u < n; ++u)
                    if (keep[static_cast<std::size_t>(u)]) rest.push_back(u);
                next = induced_subgraph(g, rest).graph;
                break;
            }
            // no closing edge: keep scanning from where we stopped
        }
        g = std::move(*next);
    }
}

// ---------------------------------------------------------------------------
// Whole-graph pipeline
// ---------------------------------------------------------------------------

namespace {

DecompositionLog remap_log(DecompositionLog log, const std::vector<int>& to_original) {
    const auto remap = [&](int v) { return to_original[static_cast<std::size_t>(v)]; };
    for (EarEvent& ear : log.ears) {
        for (int& v : ear.path.vertices) v = remap(v);
        ear.closing_edge = make_edge(remap(ear.closing_edge.a), remap(ear.closing_edge.b));
    }
    if (log.base_cycle)
        for (int& v : log.base_cycle->vertices) v = remap(v);
    if (log.base_edge) *log.base_edge = make_edge(remap(log.base_edge->a), remap(log.base_edge->b));
    return log;
}

} // namespace

DecideResult is_cyclically_orientable(const Graph& g, DecideAlgorithm algorithm) {
    DecideResult result;
    if (!edge_bound_ok(g.vertex_count(), g.edge_count())) {
        result.answer = false;
        result.global_reason =
            Refusal{RefusalKind::edge_bound_exceeded, -1, g.vertex_count(), g.edge_count()};
        return result;
    }
    const BiconnectedDecomposition deco = biconnected_components(g);
    result.answer = true;
    result.components.reserve(deco.components.size());
    for (std::size_t id = 0; id < deco.components.size(); ++id) {
        const BiconnectedComponent& comp = deco.components[id];
        const int ni = static_cast<int>(comp.vertices.size());
        const int ei = static_cast<int>(comp.edges.size());
        Verdict verdict;
        if (comp.is_bridge()) {
            DecompositionLog log;
            log.component_id = static_cast<int>(id);
            log.base_edge = comp.edges.front();
            verdict = yes_verdict(std::move(log));
        } else if (!edge_bound_ok(ni, ei)) {
            verdict = no_verdict(
                Refusal{RefusalKind::edge_bound_exceeded, static_cast<int>(id), ni, ei});
        } else {
            // a component spanning the whole graph needs no re-indexing
            const bool whole =
                ni == g.vertex_count() && ei == g.edge_count();
            const Graph* component = &g;
            InducedSubgraph sub;
            if (!whole) {
                sub = induced_subgraph(g, comp.vertices);
                component = &sub.graph;
            }
            if (algorithm == DecideAlgorithm::linear) {
                verdict = check_component_linear(*component, static_cast<int>(id), &result.stats);
                if (!whole && verdict.log)
                    verdict.log = remap_log(std::move(*verdict.log), sub.to_original);
            } else {
                const bool ok = check_component_naive(*component);
                verdict.answer = ok;
                if (!ok)
                    verdict.reason =
                        Refusal{RefusalKind::no_degree_two_vertex, static_cast<int>(id), ni, ei};
            }
        }
        result.answer = result.answer && verdict.answer;
        result.components.push_back(std::move(verdict));
    }
    return result;
}

} // namespace cyclorient
