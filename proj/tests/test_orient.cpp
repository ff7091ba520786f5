#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclorient/biconnect.hpp"
#include "cyclorient/oracle.hpp"
#include "cyclorient/orient.hpp"
#include "cyclorient/rng.hpp"
#include "support/test_support.hpp"

using namespace cyclorient;
namespace ts = cyclorient::testsupport;

namespace {

// Every valid cyclic orientation of g, by sweeping all 2^e assignments.
std::vector<Orientation> all_valid_orientations(const Graph& g) {
    const auto cycles = enumerate_chordless_cycles(g);
    std::vector<Orientation> valid;
    const auto& edges = g.edges();
    for (std::uint32_t bits = 0; bits < (1u << g.edge_count()); ++bits) {
        Orientation o;
        for (int i = 0; i < g.edge_count(); ++i)
            o.set(edges[static_cast<std::size_t>(i)], (bits >> i & 1u)
                                                          ? edges[static_cast<std::size_t>(i)].b
                                                          : edges[static_cast<std::size_t>(i)].a);
        if (std::all_of(cycles.begin(), cycles.end(),
                        [&](const CycleSeq& c) { return cyclically_oriented(c, o); }))
            valid.push_back(std::move(o));
    }
    return valid;
}

} // namespace

TEST_CASE("cyclically_oriented on a triangle") {
    Orientation good;
    good.set(Edge{0, 1}, 0);
    good.set(Edge{1, 2}, 1);
    good.set(Edge{0, 2}, 2);
    CHECK(cyclically_oriented(CycleSeq{{0, 1, 2}}, good));
    CHECK(cyclically_oriented(CycleSeq{{0, 1, 2}}, good.reversed()));

    Orientation bad; // vertex 1 is a sink
    bad.set(Edge{0, 1}, 0);
    bad.set(Edge{1, 2}, 2);
    bad.set(Edge{0, 2}, 2);
    CHECK_FALSE(cyclically_oriented(CycleSeq{{0, 1, 2}}, bad));
}

TEST_CASE("witness construction on worked examples") {
    SUBCASE("triangle gets the directed 3-cycle") {
        const auto o = find_cyclic_orientation(ts::triangle());
        REQUIRE(o.has_value());
        CHECK(o->tail(Edge{0, 1}) == 0);
        CHECK(o->tail(Edge{1, 2}) == 1);
        CHECK(o->tail(Edge{0, 2}) == 2);
    }
    SUBCASE("single edge points low to high") {
        const auto o = find_cyclic_orientation(ts::single_edge());
        REQUIRE(o.has_value());
        CHECK(o->tail(Edge{0, 1}) == 0);
    }
    SUBCASE("4-cycle with chord: output is one of the oracle's valid set") {
        const Graph g = ts::c4_chord();
        const auto o = find_cyclic_orientation(g);
        REQUIRE(o.has_value());
        const auto valid = all_valid_orientations(g);
        // the shared edge's direction forces everything else: 2 in total
        CHECK(valid.size() == 2);
        CHECK(std::find(valid.begin(), valid.end(), *o) != valid.end());
        CHECK(verify_orientation_exhaustive(g, *o).ok);
    }
    SUBCASE("negatives return nothing") {
        CHECK_FALSE(find_cyclic_orientation(ts::k4()).has_value());
        CHECK_FALSE(find_cyclic_orientation(ts::k23()).has_value());
    }
    SUBCASE("multi-component graphs get a total orientation") {
        const Graph g = ts::bowtie();
        const auto o = find_cyclic_orientation(g);
        REQUIRE(o.has_value());
        CHECK(o->is_total_on(g));
        CHECK(verify_orientation_exhaustive(g, *o).ok);
    }
}

TEST_CASE("verify_orientation examples") {
    const Graph g = ts::triangle();
    Orientation good;
    good.set(Edge{0, 1}, 0);
    good.set(Edge{1, 2}, 1);
    good.set(Edge{0, 2}, 2);
    CHECK(verify_orientation_exhaustive(g, good).ok);

    Orientation bad;
    bad.set(Edge{0, 1}, 0);
    bad.set(Edge{1, 2}, 2);
    bad.set(Edge{0, 2}, 2);
    const auto report = verify_orientation_exhaustive(g, bad);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].vertices == std::vector<int>{0, 1, 2});

    Orientation partial;
    partial.set(Edge{0, 1}, 0);
    CHECK_THROWS_AS(verify_orientation_exhaustive(g, partial), PartialOrientationError);
}

TEST_CASE("from_log mode checks the recorded cycles") {
    const Graph g = ts::c4_chord();
    const auto witness = find_cyclic_orientation_with_logs(g);
    REQUIRE(witness.has_value());
    CHECK(verify_orientation_from_log(g, witness->orientation, witness->logs).ok);

    // breaking one edge of the base cycle must surface as a violation
    Orientation broken = witness->orientation;
    const CycleSeq& base = *witness->logs[0].base_cycle;
    const Edge flip = make_edge(base.vertices[0], base.vertices[1]);
    broken.set(flip, broken.head(flip));
    const auto report = verify_orientation_from_log(g, broken, witness->logs);
    CHECK_FALSE(report.ok);
    const auto exhaustive = verify_orientation_exhaustive(g, broken);
    CHECK(report.violations == exhaustive.violations);
}

TEST_CASE("soundness, completeness and mode agreement on small corpora") {
    SplitMix64 seeds(90210);
    int sound = 0, complete = 0;
    const auto try_graph = [&](const Graph& g) {
        const auto witness = find_cyclic_orientation_with_logs(g);
        const bool oracle = brute_force_co(g).first;
        CHECK(witness.has_value() == oracle);
        if (oracle) ++complete;
        if (!witness) return;
        CHECK(verify_orientation_exhaustive(g, witness->orientation).ok);
        const auto from_log = verify_orientation_from_log(g, witness->orientation, witness->logs);
        CHECK(from_log.ok);
        // global reversal stays valid
        CHECK(verify_orientation_exhaustive(g, witness->orientation.reversed()).ok);
        ++sound;
    };
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) try_graph(ts::graph_from_mask(5, mask));
    for (int i = 0; i < 120; ++i) {
        const int n = 6 + static_cast<int>(seeds.uniform_below(3));
        try_graph(ts::random_graph(seeds.next(), n, 2 * n - 1));
    }
    CHECK(sound > 200);
    CHECK(complete == sound);
}

TEST_CASE("chordless-cycle census matches the logs") {
    // two-connected CO components with <= 10 vertices: the chordless cycles
    // are exactly {base} + {ears}, e - n + 1 of them
    SplitMix64 seeds(808);
    int censused = 0;
    const auto census = [&](const Graph& g) {
        const auto result = is_cyclically_orientable(g);
        if (!result.answer) return;
        const auto deco = biconnected_components(g);
        for (std::size_t c = 0; c < deco.components.size(); ++c) {
            const auto& comp = deco.components[c];
            if (comp.edges.size() < 2 || comp.vertices.size() > 10) continue;
            const auto sub = induced_subgraph(g, comp.vertices);
            const auto cycles = enumerate_chordless_cycles(sub.graph);
            const int ei = static_cast<int>(comp.edges.size());
            const int ni = static_cast<int>(comp.vertices.size());
            const auto& log = *result.components[c].log;
            REQUIRE(static_cast<int>(cycles.size()) == ei - ni + 1);
            REQUIRE(cycles.size() == log.ears.size() + 1);
            // same cycles, as canonical vertex sequences in original ids
            std::set<CycleSeq> from_log;
            from_log.insert(canonical_rotation(*log.base_cycle));
            for (const auto& ear : log.ears)
                from_log.insert(canonical_rotation(CycleSeq{ear.path.vertices}));
            std::set<CycleSeq> enumerated;
            for (const auto& cycle : cycles) {
                CycleSeq mapped;
                for (int v : cycle.vertices)
                    mapped.vertices.push_back(sub.to_original[static_cast<std::size_t>(v)]);
                enumerated.insert(canonical_rotation(mapped));
            }
            REQUIRE(from_log == enumerated);
            ++censused;
        }
    };
    for (int i = 0; i < 150; ++i) {
        const int n = 5 + static_cast<int>(seeds.uniform_below(4));
        census(ts::random_graph(seeds.next(), n, 2 * n - 1));
    }
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        census(gen_co_graph(seed, 3 + static_cast<int>(seed % 7), 5).graph);
    CHECK(censused > 60);
}
