#pragma once

// Chain-of-rhombus networks and branches as explicit orbit-labelled graphs.
//
// Node numbering (0-based): junction j (j = 0..m) sits at j + N_j where
// N_j = n_1 + ... + n_j; the n_{j+1} interiors of rhombus j follow it.
// Orbit 2i holds the edges from junction i into rhombus i, orbit 2i+1 the
// edges from rhombus i to junction i+1 (i = 0..m-1).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnet {

class ChainSpec {
public:
    // Throws InvalidSpec on an empty list or a non-positive order.
    explicit ChainSpec(std::vector<int> orders);

    // "3,2,4" (whitespace around entries is tolerated).
    static ChainSpec parse(std::string_view text);

    const std::vector<int>& orders() const noexcept { return orders_; }
    int rhombus_count() const noexcept { return static_cast<int>(orders_.size()); }
    int order(int rhombus) const { return orders_.at(static_cast<std::size_t>(rhombus)); }

    // N_mu = n_1 + ... + n_mu (N_0 = 0).
    int cumulative(int mu) const;
    int node_count() const noexcept;
    int edge_count() const noexcept;
    int orbit_count() const noexcept { return 2 * rhombus_count(); }

    int junction_node(int junction) const;
    // First interior node of rhombus `rhombus` (0-based).
    int interior_begin(int rhombus) const;

    std::string to_string() const;

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

private:
    std::vector<int> orders_;
};

enum class NodeRole { Junction, Interior, Host };

struct NodeInfo {
    NodeRole role = NodeRole::Junction;
    // Junction index, rhombus index, or host-local index depending on role.
    int group = 0;

    friend bool operator==(const NodeInfo&, const NodeInfo&) = default;
};

struct Edge {
    int u = 0;
    int v = 0;
    int orbit = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class Topology {
public:
    Topology(int node_count, std::vector<Edge> edges, std::vector<NodeInfo> roles,
             std::optional<ChainSpec> chain = std::nullopt);

    int node_count() const noexcept { return node_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<NodeInfo>& roles() const noexcept { return roles_; }
    const std::optional<ChainSpec>& chain() const noexcept { return chain_; }

    // One more than the largest orbit label.
    int orbit_count() const noexcept { return orbit_count_; }
    std::vector<int> orbit_sizes() const;

    bool has_edge(int a, int b) const;
    const std::vector<int>& neighbors(int node) const { return adjacency_.at(static_cast<std::size_t>(node)); }
    int degree(int node) const { return static_cast<int>(neighbors(node).size()); }
    bool connected() const;

    // Copy with the edge {a,b} removed (orbit labels of the rest kept).
    Topology without_edge(int a, int b) const;

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<NodeInfo> roles_;
    std::optional<ChainSpec> chain_;
    std::vector<std::vector<int>> adjacency_;
    int orbit_count_ = 0;
};

// Plain undirected graph used as the far side of a branch.
struct HostGraph {
    int node_count = 1;
    std::vector<std::pair<int, int>> edges;

    bool connected() const;

    static HostGraph single_node();
    static HostGraph triangle();
    // Random spanning tree plus each remaining pair with probability p.
    static HostGraph random_connected(int nodes, double p, std::uint64_t seed);
    // "node" | "triangle" | "random:<n>:<p>:<seed>"
    static HostGraph parse(std::string_view text);
};

struct BranchTopology {
    Topology chain;
    HostGraph host;
    int attach = 0;
    // Chain nodes first (same numbering as `chain`), then host nodes.
    Topology combined;
    Edge bridge;

    int bridge_orbit() const noexcept { return bridge.orbit; }
};

Topology build_chain(const ChainSpec& spec);

// Attaches `host` to the chain's last junction through a single bridge edge.
// Throws InvalidHost when the host is disconnected or `attach` is out of range.
BranchTopology build_branch(const ChainSpec& spec, const HostGraph& host, int attach);

// True iff every transposition of two interiors of the same rhombus maps
// the edge set onto itself.
bool automorphism_check(const Topology& t);

}  // namespace crnet
