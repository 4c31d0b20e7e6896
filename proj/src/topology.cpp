#include "crnet/topology.hpp"

#include "crnet/errors.hpp"
#include "crnet/random.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace crnet {

double standard_normal(Rng& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool graph_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                q.push(y);
            }
        }
    }
    return count == n;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
    text = trim(text);
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidHost(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

// ---------------------------------------------------------------- ChainSpec

ChainSpec::ChainSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw InvalidSpec("chain needs at least one rhombus");
    for (int n : orders_) {
        if (n < 1) throw InvalidSpec("rhombus orders must be positive, got " + std::to_string(n));
    }
}

ChainSpec ChainSpec::parse(std::string_view text) {
    std::vector<int> orders;
    text = trim(text);
    if (text.empty()) throw InvalidSpec("empty orders list");
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw InvalidSpec("cannot parse order '" + std::string(item) + "' in '" + std::string(text) + "'");
        }
        orders.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ChainSpec(std::move(orders));
}

int ChainSpec::cumulative(int mu) const {
    if (mu < 0 || mu > rhombus_count()) throw std::out_of_range("cumulative order index");
    return std::accumulate(orders_.begin(), orders_.begin() + mu, 0);
}

int ChainSpec::node_count() const noexcept {
    return rhombus_count() + 1 + std::accumulate(orders_.begin(), orders_.end(), 0);
}

int ChainSpec::edge_count() const noexcept {
    return 2 * std::accumulate(orders_.begin(), orders_.end(), 0);
}

int ChainSpec::junction_node(int junction) const { return junction + cumulative(junction); }

int ChainSpec::interior_begin(int rhombus) const { return junction_node(rhombus) + 1; }

std::string ChainSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out << ',';
        out << orders_[i];
    }
    return out.str();
}

// ---------------------------------------------------------------- Topology

Topology::Topology(int node_count, std::vector<Edge> edges, std::vector<NodeInfo> roles,
                   std::optional<ChainSpec> chain)
    : node_count_(node_count),
      edges_(std::move(edges)),
      roles_(std::move(roles)),
      chain_(std::move(chain)),
      adjacency_(static_cast<std::size_t>(node_count)) {
    if (node_count_ < 1) throw DimensionError("topology needs at least one node");
    if (roles_.size() != static_cast<std::size_t>(node_count_)) {
        throw DimensionError("one role per node required");
    }
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_ || e.u == e.v) {
            throw DimensionError("edge endpoint out of range or self loop");
        }
        if (e.orbit < 0) throw DimensionError("negative orbit label");
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        orbit_count_ = std::max(orbit_count_, e.orbit + 1);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::vector<int> Topology::orbit_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(orbit_count_), 0);
    for (const Edge& e : edges_) ++sizes[static_cast<std::size_t>(e.orbit)];
    return sizes;
}

bool Topology::has_edge(int a, int b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

bool Topology::connected() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) pairs.emplace_back(e.u, e.v);
    return graph_connected(node_count_, pairs);
}

Topology Topology::without_edge(int a, int b) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) continue;
        kept.push_back(e);
    }
    return Topology(node_count_, std::move(kept), roles_, chain_);
}

// ---------------------------------------------------------------- HostGraph

bool HostGraph::connected() const { return graph_connected(node_count, edges); }

HostGraph HostGraph::single_node() { return HostGraph{1, {}}; }

HostGraph HostGraph::triangle() { return HostGraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

HostGraph HostGraph::random_connected(int nodes, double p, std::uint64_t seed) {
    if (nodes < 1) throw InvalidHost("random host needs at least one node");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidHost("edge probability must lie in [0,1]");
    Rng rng(seed);
    HostGraph g{nodes, {}};
    std::set<std::pair<int, int>> present;
    // Uniform random recursive tree keeps the graph connected.
    for (int v = 1; v < nodes; ++v) {
        const int u = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(v)));
        g.edges.emplace_back(u, v);
        present.emplace(u, v);
    }
    for (int a = 0; a < nodes; ++a) {
        for (int b = a + 1; b < nodes; ++b) {
            if (present.count({a, b})) continue;
            if (uniform01(rng) < p) g.edges.emplace_back(a, b);
        }
    }
    return g;
}

HostGraph HostGraph::parse(std::string_view text) {
    text = trim(text);
    if (text == "node") return single_node();
    if (text == "triangle") return triangle();
    constexpr std::string_view prefix = "random:";
    if (text.starts_with(prefix)) {
        std::string_view rest = text.substr(prefix.size());
        const auto c1 = rest.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw InvalidHost("random host spec must be random:<n>:<p>:<seed>");
        }
        const int n = parse_number<int>(rest.substr(0, c1), "node count");
        const double p = parse_number<double>(rest.substr(c1 + 1, c2 - c1 - 1), "edge probability");
        const auto seed = parse_number<std::uint64_t>(rest.substr(c2 + 1), "seed");
        return random_connected(n, p, seed);
    }
    throw InvalidHost("unknown host spec '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- builders

Topology build_chain(const ChainSpec& spec) {
    const int m = spec.rhombus_count();
    const int n_nodes = spec.node_count();
    std::vector<NodeInfo> roles(static_cast<std::size_t>(n_nodes));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(spec.edge_count()));

    for (int j = 0; j <= m; ++j) {
        roles[static_cast<std::size_t>(spec.junction_node(j))] = {NodeRole::Junction, j};
    }
    for (int i = 0; i < m; ++i) {
        const int left = spec.junction_node(i);
        const int right = spec.junction_node(i + 1);
        const int first = spec.interior_begin(i);
        for (int k = 0; k < spec.order(i); ++k) {
            const int node = first + k;
            roles[static_cast<std::size_t>(node)] = {NodeRole::Interior, i};
            edges.push_back({left, node, 2 * i});
            edges.push_back({node, right, 2 * i + 1});
        }
    }
    return Topology(n_nodes, std::move(edges), std::move(roles), spec);
}

BranchTopology build_branch(const ChainSpec& spec, const HostGraph& host, int attach) {
    if (host.node_count < 1) throw InvalidHost("host graph is empty");
    for (auto [a, b] : host.edges) {
        if (a < 0 || b < 0 || a >= host.node_count || b >= host.node_count || a == b) {
            throw InvalidHost("host edge out of range or self loop");
        }
    }
    if (!host.connected()) throw InvalidHost("host graph is disconnected");
    if (attach < 0 || attach >= host.node_count) throw InvalidHost("attach node out of range");

    Topology chain = build_chain(spec);
    const int offset = chain.node_count();
    const int total = offset + host.node_count;

    std::vector<NodeInfo> roles = chain.roles();
    for (int h = 0; h < host.node_count; ++h) roles.push_back({NodeRole::Host, h});

    std::vector<Edge> edges = chain.edges();
    const Edge bridge{spec.junction_node(spec.rhombus_count()), offset + attach, spec.orbit_count()};
    edges.push_back(bridge);
    int orbit = bridge.orbit + 1;
    for (auto [a, b] : host.edges) edges.push_back({offset + a, offset + b, orbit++});

    Topology combined(total, std::move(edges), std::move(roles));
    return BranchTopology{std::move(chain), host, attach, std::move(combined), bridge};
}

bool automorphism_check(const Topology& t) {
    std::set<std::pair<int, int>> edge_set;
    for (const Edge& e : t.edges()) edge_set.emplace(std::min(e.u, e.v), std::max(e.u, e.v));

    std::vector<std::vector<int>> groups;
    for (int v = 0; v < t.node_count(); ++v) {
        const NodeInfo& info = t.roles()[static_cast<std::size_t>(v)];
        if (info.role != NodeRole::Interior) continue;
        if (static_cast<std::size_t>(info.group) >= groups.size()) groups.resize(static_cast<std::size_t>(info.group) + 1);
        groups[static_cast<std::size_t>(info.group)].push_back(v);
    }

    for (const auto& members : groups) {
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const int a = members[x];
                const int b = members[y];
                auto swap_node = [a, b](int v) { return v == a ? b : (v == b ? a : v); };
                for (const auto& [u, v] : edge_set) {
                    const int su = swap_node(u);
                    const int sv = swap_node(v);
                    if (!edge_set.count({std::min(su, sv), std::max(su, sv)})) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace crnet
