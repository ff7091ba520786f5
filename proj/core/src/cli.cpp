#include "cyclorient/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cyclorient/biconnect.hpp"
#include "cyclorient/decide.hpp"
#include "cyclorient/oracle.hpp"
#include "cyclorient/orient.hpp"

namespace cyclorient::cli {

namespace {

using json = nlohmann::ordered_json;

const char* refusal_text(RefusalKind kind) {
    switch (kind) {
        case RefusalKind::edge_bound_exceeded: return "edge bound exceeded";
        case RefusalKind::no_degree_two_vertex: return "no degree-2 vertex remains";
    }
    return "unknown";
}

json refusal_json(const Refusal& r) {
    json j;
    j["kind"] = r.kind == RefusalKind::edge_bound_exceeded ? "edge_bound_exceeded"
                                                           : "no_degree_two_vertex";
    j["component"] = r.component_id;
    j["n"] = r.vertex_count;
    j["e"] = r.edge_count;
    return j;
}

json log_json(const DecompositionLog& log) {
    json j;
    json ears = json::array();
    for (const EarEvent& ear : log.ears) {
        json e;
        e["path"] = ear.path.vertices;
        e["closing_edge"] = {ear.closing_edge.a, ear.closing_edge.b};
        ears.push_back(std::move(e));
    }
    j["ears"] = std::move(ears);
    if (log.base_cycle) {
        j["base"] = {{"kind", "cycle"}, {"vertices", log.base_cycle->vertices}};
    } else if (log.base_edge) {
        j["base"] = {{"kind", "edge"}, {"edge", {log.base_edge->a, log.base_edge->b}}};
    }
    return j;
}

int usage_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
}

} // namespace

int cmd_check(std::istream& graph_in, const CheckOptions& options, std::ostream& out,
              std::ostream& err) {
    Graph g;
    try {
        g = parse_edge_list(graph_in);
    } catch (const ParseError& e) {
        return usage_error(err, e);
    }
    const DecideResult result = is_cyclically_orientable(
        g, options.naive ? DecideAlgorithm::naive : DecideAlgorithm::linear);

    if (options.json) {
        json report;
        report["schema"] = "cyclorient/1";
        report["answer"] = result.answer;
        report["algorithm"] = options.naive ? "naive" : "linear";
        report["n"] = g.vertex_count();
        report["e"] = g.edge_count();
        if (result.global_reason) report["reason"] = refusal_json(*result.global_reason);
        json components = json::array();
        for (std::size_t id = 0; id < result.components.size(); ++id) {
            const Verdict& v = result.components[id];
            json c;
            c["id"] = id;
            c["answer"] = v.answer;
            if (v.log) c["log"] = log_json(*v.log);
            if (v.reason) c["reason"] = refusal_json(*v.reason);
            components.push_back(std::move(c));
        }
        report["components"] = std::move(components);
        report["stats"] = {{"linear_loop_iterations", result.stats.linear_loop_iterations}};
        out << report.dump(2) << "\n";
    } else {
        out << (result.answer ? "YES" : "NO") << "\n";
        if (result.global_reason) {
            const Refusal& r = *result.global_reason;
            out << refusal_text(r.kind) << ": e=" << r.edge_count
                << " > 2n-3=" << 2 * r.vertex_count - 3 << " (n=" << r.vertex_count << ")\n";
        }
        for (std::size_t id = 0; id < result.components.size(); ++id) {
            const Verdict& v = result.components[id];
            out << "component " << id << ": " << (v.answer ? "YES" : "NO");
            if (v.reason)
                out << " (" << refusal_text(v.reason->kind) << "; n=" << v.reason->vertex_count
                    << ", e=" << v.reason->edge_count << ")";
            out << "\n";
        }
    }
    return result.answer ? kExitYes : kExitNo;
}

int cmd_orient(std::istream& graph_in, const OrientOptions& options, std::ostream& out,
               std::ostream& err) {
    Graph g;
    try {
        g = parse_edge_list(graph_in);
    } catch (const ParseError& e) {
        return usage_error(err, e);
    }
    const std::optional<Orientation> o = find_cyclic_orientation(g);
    if (!o) {
        out << "NO\n";
        return kExitNo;
    }
    if (options.dot)
        out << emit_dot(g, &*o);
    else
        out << emit_orientation(g, *o);
    return kExitYes;
}

int cmd_verify(std::istream& graph_in, std::istream& orientation_in, std::ostream& out,
               std::ostream& err) {
    Graph g;
    Orientation o;
    try {
        g = parse_edge_list(graph_in);
        o = parse_orientation(g, orientation_in);
    } catch (const Error& e) {
        return usage_error(err, e);
    }

    ViolationReport report;
    if (g.vertex_count() <= kChordlessCycleVertexCap) {
        report = verify_orientation_exhaustive(g, o);
    } else {
        // Too large to enumerate chordless cycles directly: decide first and
        // check against the decomposition's cycles, which are exactly the
        // chordless cycles when the graph is cyclically orientable.
        const auto witness = find_cyclic_orientation_with_logs(g);
        if (!witness) {
            out << "not cyclically orientable: no orientation can satisfy every chordless cycle\n";
            return kExitNo;
        }
        report = verify_orientation_from_log(g, o, witness->logs);
    }
    if (report.ok) {
        out << "OK\n";
        return kExitYes;
    }
    for (const CycleSeq& cycle : report.violations) {
        out << "violated chordless cycle:";
        for (int v : cycle.vertices) out << " " << v;
        out << "\n";
    }
    return kExitNo;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
    if (options.parts < 1) {
        err << "error: parts must be at least 1\n";
        return kExitUsage;
    }
    if (options.perturb < 0) {
        err << "error: perturb must be non-negative\n";
        return kExitUsage;
    }
    Graph g;
    try {
        // Chain `parts` two-connected blocks with bridge edges so that
        // multi-component inputs are easy to produce; the result is still
        // cyclically orientable by construction.
        std::vector<Edge> edges;
        int offset = 0;
        int previous_anchor = -1;
        for (int part = 0; part < options.parts; ++part) {
            const GeneratedGraph block =
                gen_co_graph(options.seed + static_cast<std::uint64_t>(part) * 0x9E37ULL,
                             options.target_n, options.max_cycle_len);
            for (const Edge& e : block.graph.edges())
                edges.push_back(make_edge(e.a + offset, e.b + offset));
            if (previous_anchor >= 0) edges.push_back(make_edge(previous_anchor, offset));
            previous_anchor = offset;
            offset += block.graph.vertex_count();
        }
        g = Graph(offset, edges);
        for (int i = 0; i < options.perturb; ++i)
            g = gen_perturbed(options.seed ^ (0xABCDull + static_cast<std::uint64_t>(i)), g);
    } catch (const Error& e) {
        return usage_error(err, e);
    }

    out << "# cyclorient corpus seed=" << options.seed << " target_n=" << options.target_n
        << " max_cycle_len=" << options.max_cycle_len << " parts=" << options.parts
        << " perturb=" << options.perturb << "\n";
    if (options.perturb == 0) out << "# expected: yes\n";
    out << emit_edge_list(g);
    return kExitYes;
}

int cmd_components(std::istream& graph_in, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = parse_edge_list(graph_in);
    } catch (const ParseError& e) {
        return usage_error(err, e);
    }
    const BiconnectedDecomposition deco = biconnected_components(g);
    for (std::size_t id = 0; id < deco.components.size(); ++id) {
        const BiconnectedComponent& c = deco.components[id];
        out << "component " << id;
        if (c.is_bridge()) out << " (bridge)";
        out << ":";
        for (const Edge& e : c.edges) out << " " << e.a << "-" << e.b;
        out << "\n";
    }
    if (!deco.isolated_vertices.empty()) {
        out << "isolated:";
        for (int v : deco.isolated_vertices) out << " " << v;
        out << "\n";
    }
    return kExitYes;
}

namespace {

double median_ms(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t m = samples.size();
    return m % 2 ? samples[m / 2] : (samples[m / 2 - 1] + samples[m / 2]) / 2.0;
}

template <typename F>
double time_ms(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
    if (options.sizes.empty() || options.reps < 1) {
        err << "error: bench needs at least one size and one repetition\n";
        return kExitUsage;
    }
    for (int size : options.sizes)
        if (size < 3) {
            err << "error: sizes must be at least 3\n";
            return kExitUsage;
        }

    out << std::left << std::setw(10) << "n" << std::setw(14) << "linear_ms";
    if (!options.linear_only) out << std::setw(14) << "naive_ms";
    out << "\n";
    double previous_linear = 0.0, previous_naive = 0.0;
    for (std::size_t i = 0; i < options.sizes.size(); ++i) {
        const int size = options.sizes[i];
        const GeneratedGraph gen = gen_co_graph(options.seed, size, options.max_cycle_len);
        std::vector<double> linear_samples, naive_samples;
        for (int rep = 0; rep < options.reps; ++rep) {
            linear_samples.push_back(time_ms([&] {
                const auto r = is_cyclically_orientable(gen.graph, DecideAlgorithm::linear);
                if (!r.answer) err << "warning: linear procedure rejected a generated graph\n";
            }));
            if (!options.linear_only)
                naive_samples.push_back(time_ms([&] {
                    const auto r = is_cyclically_orientable(gen.graph, DecideAlgorithm::naive);
                    if (!r.answer) err << "warning: naive procedure rejected a generated graph\n";
                }));
        }
        const double linear = median_ms(linear_samples);
        out << std::setw(10) << size << std::setw(14) << std::fixed << std::setprecision(3)
            << linear;
        double naive = 0.0;
        if (!options.linear_only) {
            naive = median_ms(naive_samples);
            out << std::setw(14) << naive;
        }
        if (i > 0) {
            out << "  (x" << std::setprecision(2) << linear / previous_linear << " linear";
            if (!options.linear_only) out << ", x" << naive / previous_naive << " naive";
            out << ")";
        }
        out << "\n";
        previous_linear = linear;
        previous_naive = naive;
    }
    return kExitYes;
}

} // namespace cyclorient::cli
