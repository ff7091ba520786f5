#include <doctest.h>

#include <algorithm>

#include "cyclorient/biconnect.hpp"
#include "cyclorient/rng.hpp"
#include "support/test_support.hpp"

using namespace cyclorient;
namespace ts = cyclorient::testsupport;

namespace {

std::vector<std::vector<Edge>> partition_of(const BiconnectedDecomposition& deco) {
    std::vector<std::vector<Edge>> out;
    for (const auto& c : deco.components) out.push_back(c.edges);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("small decompositions") {
    const auto path = biconnected_components(ts::path3());
    REQUIRE(path.components.size() == 2);
    CHECK(path.components[0].is_bridge());
    CHECK(path.components[1].is_bridge());

    const auto tri = biconnected_components(ts::triangle());
    REQUIRE(tri.components.size() == 1);
    CHECK(tri.components[0].edges.size() == 3);
    CHECK_FALSE(tri.components[0].is_bridge());

    const auto bow = biconnected_components(ts::bowtie());
    REQUIRE(bow.components.size() == 2);
    CHECK(bow.components[0].edges.size() == 3);
    CHECK(bow.components[1].edges.size() == 3);
    CHECK(partition_of(bow) ==
          std::vector<std::vector<Edge>>{{{0, 1}, {0, 2}, {1, 2}}, {{2, 3}, {2, 4}, {3, 4}}});
}

TEST_CASE("component vertex sets are the endpoints of their edges") {
    const auto deco = biconnected_components(ts::bowtie());
    for (const auto& c : deco.components) {
        std::vector<int> endpoints;
        for (const Edge& e : c.edges) {
            endpoints.push_back(e.a);
            endpoints.push_back(e.b);
        }
        std::sort(endpoints.begin(), endpoints.end());
        endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
        CHECK(c.vertices == endpoints);
    }
}

TEST_CASE("isolated vertices reported separately") {
    const Graph g = parse_edge_list("1 2\n2 3\n1 3\n0 6\n"); // triangle + bridge + isolated 4,5
    const auto deco = biconnected_components(g);
    CHECK(deco.components.size() == 2);
    CHECK(deco.isolated_vertices == std::vector<int>{4, 5});
    int total_edges = 0;
    for (const auto& c : deco.components) total_edges += static_cast<int>(c.edges.size());
    CHECK(total_edges == g.edge_count());
}

TEST_CASE("deterministic emission") {
    const Graph g = ts::random_graph(99, 9, 14);
    const auto a = biconnected_components(g);
    const auto b = biconnected_components(g);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].edges == b.components[i].edges);
        CHECK(a.components[i].vertices == b.components[i].vertices);
    }
}

TEST_CASE("edge partition matches the cycle-containment oracle, exhaustively to 6 vertices") {
    long long checked = 0;
    for (int n = 0; n <= 6; ++n) {
        const std::uint32_t graphs = 1u << (n * (n - 1) / 2);
        for (std::uint32_t mask = 0; mask < graphs; ++mask) {
            const Graph g = ts::graph_from_mask(n, mask);
            const auto deco = biconnected_components(g);
            REQUIRE(partition_of(deco) == ts::blocks_by_cycle_oracle(g));
            // isolated vertices are exactly the degree-0 ones
            std::vector<int> isolated;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 0) isolated.push_back(v);
            REQUIRE(deco.isolated_vertices == isolated);
            ++checked;
        }
    }
    CHECK(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("sum of component edge counts equals total, on random graphs") {
    SplitMix64 seeds(5150);
    for (int i = 0; i < 60; ++i) {
        const Graph g = ts::random_graph(seeds.next(), 3 + static_cast<int>(seeds.uniform_below(9)), 18);
        const auto deco = biconnected_components(g);
        std::size_t total = 0;
        for (const auto& c : deco.components) total += c.edges.size();
        CHECK(total == static_cast<std::size_t>(g.edge_count()));
    }
}

TEST_CASE("multi-edge components survive any single vertex removal") {
    SplitMix64 seeds(4242);
    int spot_checked = 0;
    for (int i = 0; i < 80; ++i) {
        const Graph g = ts::random_graph(seeds.next(), 4 + static_cast<int>(seeds.uniform_below(9)), 20);
        for (const auto& c : biconnected_components(g).components) {
            if (c.edges.size() < 2 || c.vertices.size() > 12) continue;
            const Graph sub = induced_subgraph(g, c.vertices).graph;
            for (int drop = 0; drop < sub.vertex_count(); ++drop) {
                std::vector<int> keep;
                for (int v = 0; v < sub.vertex_count(); ++v)
                    if (v != drop) keep.push_back(v);
                CHECK(ts::is_connected(induced_subgraph(sub, keep).graph));
                ++spot_checked;
            }
        }
    }
    CHECK(spot_checked > 50); // the corpus really contained nontrivial components
}
