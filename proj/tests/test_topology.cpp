#include "generators.hpp"

#include "crnet/errors.hpp"
#include "crnet/json_io.hpp"
#include "crnet/topology.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

using namespace crnet;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edge_set(const Topology& t) {
    EdgeSet s;
    for (const Edge& e : t.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return s;
}

// Construction rule written out directly: walk left to right, placing a
// junction and then the interiors of the next rhombus.
EdgeSet enumerate_chain(const std::vector<int>& orders) {
    EdgeSet s;
    int junction = 0;
    for (int n : orders) {
        const int next = junction + n + 1;
        for (int k = 1; k <= n; ++k) {
            s.insert({junction, junction + k});
            s.insert({junction + k, next});
        }
        junction = next;
    }
    return s;
}

}  // namespace

TEST_CASE("chain node and edge counts") {
    const Topology t = build_chain(ChainSpec({3, 2, 4}));
    CHECK(t.node_count() == 13);
    CHECK(t.edges().size() == 18);

    const Topology p3 = build_chain(ChainSpec({1}));
    CHECK(p3.node_count() == 3);
    CHECK(edge_set(p3) == EdgeSet{{0, 1}, {1, 2}});

    const Topology t22 = build_chain(ChainSpec({2, 2}));
    CHECK(t22.node_count() == 7);
    CHECK(t22.edges().size() == 8);
    CHECK(edge_set(t22) == EdgeSet{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

TEST_CASE("junction numbering follows the cumulative orders") {
    const ChainSpec spec({3, 2, 4});
    CHECK(spec.junction_node(0) == 0);
    CHECK(spec.junction_node(1) == 4);
    CHECK(spec.junction_node(2) == 7);
    CHECK(spec.junction_node(3) == 12);
    CHECK(spec.interior_begin(1) == 5);
    CHECK(spec.cumulative(0) == 0);
    CHECK(spec.cumulative(3) == 9);

    const Topology t = build_chain(spec);
    for (int j = 0; j <= 3; ++j) {
        const NodeInfo info = t.roles()[static_cast<std::size_t>(spec.junction_node(j))];
        CHECK(info.role == NodeRole::Junction);
        CHECK(info.group == j);
    }
    CHECK(t.roles()[6].role == NodeRole::Interior);
    CHECK(t.roles()[6].group == 1);
}

TEST_CASE("orbit labels") {
    const Topology t = build_chain(ChainSpec({3, 2, 4}));
    CHECK(t.orbit_count() == 6);
    CHECK(t.orbit_sizes() == std::vector<int>{3, 3, 2, 2, 4, 4});
    // Orbit 2 (0-based) joins junction 1 to the interiors of rhombus 1.
    for (const Edge& e : t.edges()) {
        if (e.orbit != 2) continue;
        CHECK(std::min(e.u, e.v) == 4);
        CHECK(t.roles()[static_cast<std::size_t>(std::max(e.u, e.v))].group == 1);
    }
}

TEST_CASE("chain spec parsing and validation") {
    CHECK(ChainSpec::parse("3,2,4").orders() == std::vector<int>{3, 2, 4});
    CHECK(ChainSpec::parse(" 1 , 2 ").orders() == std::vector<int>{1, 2});
    CHECK(ChainSpec({3, 2, 4}).to_string() == "3,2,4");
    CHECK_THROWS_AS(ChainSpec(std::vector<int>{}), InvalidSpec);
    CHECK_THROWS_AS(ChainSpec({2, 0}), InvalidSpec);
    CHECK_THROWS_AS(ChainSpec({-1}), InvalidSpec);
    CHECK_THROWS_AS(ChainSpec::parse(""), InvalidSpec);
    CHECK_THROWS_AS(ChainSpec::parse("2,,3"), InvalidSpec);
    CHECK_THROWS_AS(ChainSpec::parse("2,x"), InvalidSpec);
}

TEST_CASE("chain spec json form") {
    const ChainSpec spec({3, 2, 4});
    CHECK(to_json(spec).dump() == R"({"orders":[3,2,4]})");
    CHECK(chain_spec_from_json(json::parse(R"({"orders":[3,2,4]})")) == spec);
    CHECK_THROWS_AS(chain_spec_from_json(json::parse(R"({"orders":[]})")), InvalidSpec);
    CHECK_THROWS_AS(chain_spec_from_json(json::parse(R"([1,2])")), InvalidSpec);
}

TEST_CASE("branch construction") {
    const BranchTopology b = build_branch(ChainSpec({3, 2, 4}), HostGraph::single_node(), 0);
    CHECK(b.combined.node_count() == 14);
    CHECK(b.combined.edges().size() == 19);

    // orders [1] on a single host node is the path P4.
    const BranchTopology p4 = build_branch(ChainSpec({1}), HostGraph::single_node(), 0);
    CHECK(edge_set(p4.combined) == EdgeSet{{0, 1}, {1, 2}, {2, 3}});

    const BranchTopology tri = build_branch(ChainSpec({2}), HostGraph::triangle(), 1);
    CHECK(tri.combined.node_count() == 4 + 3);
    CHECK(tri.combined.edges().size() == 4 + 3 + 1);
    CHECK(tri.combined.has_edge(3, 5));
    CHECK(tri.bridge_orbit() == 2);
    CHECK(tri.combined.orbit_count() == 2 + 1 + 3);
}

TEST_CASE("removing the bridge separates chain and host") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ChainSpec spec = testing::random_spec(rng, 1, 4, 4);
        const HostGraph host = HostGraph::random_connected(2 + trial % 5, 0.4, 100 + static_cast<std::uint64_t>(trial));
        REQUIRE(host.connected());
        const int attach = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(host.node_count)));
        const BranchTopology b = build_branch(spec, host, attach);
        CHECK(b.combined.connected());
        CHECK_FALSE(b.combined.without_edge(b.bridge.u, b.bridge.v).connected());
    }
}

TEST_CASE("invalid hosts are rejected") {
    HostGraph split;
    split.node_count = 4;
    split.edges = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(build_branch(ChainSpec({2}), split, 0), InvalidHost);
    CHECK_THROWS_AS(build_branch(ChainSpec({2}), HostGraph::triangle(), 3), InvalidHost);
    CHECK_THROWS_AS(HostGraph::parse("square"), InvalidHost);
}

TEST_CASE("host spec language") {
    CHECK(HostGraph::parse("node").node_count == 1);
    CHECK(HostGraph::parse("triangle").edges.size() == 3);
    const HostGraph a = HostGraph::parse("random:8:0.3:5");
    const HostGraph b = HostGraph::random_connected(8, 0.3, 5);
    CHECK(a.node_count == 8);
    CHECK(a.edges == b.edges);
    CHECK(a.connected());
    CHECK(HostGraph::random_connected(8, 0.3, 6).edges != b.edges);
}

TEST_CASE("automorphism check") {
    CHECK(automorphism_check(build_chain(ChainSpec({2, 2}))));
    CHECK(automorphism_check(build_chain(ChainSpec({3, 2, 4}))));
    const Topology cut = build_chain(ChainSpec({2, 2})).without_edge(0, 1);
    CHECK(cut.edges().size() == 7);
    CHECK_FALSE(automorphism_check(cut));
}

TEST_CASE("property: chain invariants for m <= 6, n_i <= 10") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const ChainSpec spec = testing::random_spec(rng, 1, 6, 10);
        const Topology t = build_chain(spec);
        int sum = 0;
        std::vector<int> sizes;
        for (int n : spec.orders()) {
            sum += n;
            sizes.push_back(n);
            sizes.push_back(n);
        }
        CAPTURE(spec.to_string());
        CHECK(t.node_count() == spec.rhombus_count() + 1 + sum);
        CHECK(static_cast<int>(t.edges().size()) == 2 * sum);
        CHECK(t.orbit_count() == 2 * spec.rhombus_count());
        CHECK(t.orbit_sizes() == sizes);
        CHECK(edge_set(t) == enumerate_chain(spec.orders()));
        CHECK(automorphism_check(t));
        CHECK(t.connected());
    }
}
