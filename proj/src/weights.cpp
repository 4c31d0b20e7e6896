#include "crnet/weights.hpp"

#include "crnet/errors.hpp"

#include <algorithm>
#include <string>

namespace crnet {

BaselineScheme parse_baseline_scheme(std::string_view name) {
    if (name == "max-degree") return BaselineScheme::MaxDegree;
    if (name == "metropolis") return BaselineScheme::Metropolis;
    throw std::invalid_argument("unknown baseline scheme '" + std::string(name) + "'");
}

OrbitWeights optimal_weights(const ChainSpec& spec) {
    OrbitWeights w;
    w.values.reserve(static_cast<std::size_t>(spec.orbit_count()));
    for (int n : spec.orders()) {
        const double value = 1.0 / (n + 1);
        w.values.push_back(value);
        w.values.push_back(value);
    }
    return w;
}

WeightMatrix assemble(const ChainSpec& spec, const OrbitWeights& w) {
    const int m = spec.rhombus_count();
    if (w.size() != static_cast<std::size_t>(2 * m)) {
        throw DimensionError("expected " + std::to_string(2 * m) + " orbit weights, got " +
                             std::to_string(w.size()));
    }
    const int size = spec.node_count();
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(size, size);

    for (int mu = 0; mu < m; ++mu) {
        const int n = spec.order(mu);
        const double left = w[static_cast<std::size_t>(2 * mu)];
        const double right = w[static_cast<std::size_t>(2 * mu + 1)];
        const int j_left = spec.junction_node(mu);
        const int j_right = spec.junction_node(mu + 1);
        for (int k = 1; k <= n; ++k) {
            const int node = j_left + k;
            W(j_left, node) = W(node, j_left) = left;
            W(j_right, node) = W(node, j_right) = right;
            W(node, node) = 1.0 - left - right;
        }
    }

    const double first_w = w[0];
    const double last_w = w[static_cast<std::size_t>(2 * m - 1)];
    W(0, 0) = 1.0 - spec.order(0) * first_w;
    for (int mu = 1; mu < m; ++mu) {
        const int j = spec.junction_node(mu);
        W(j, j) = 1.0 - spec.order(mu - 1) * w[static_cast<std::size_t>(2 * mu - 1)] -
                  spec.order(mu) * w[static_cast<std::size_t>(2 * mu)];
    }
    const int last = spec.junction_node(m);
    W(last, last) = 1.0 - spec.order(m - 1) * last_w;
    return WeightMatrix(std::move(W));
}

WeightMatrix assemble(const Topology& t, std::span<const double> orbit_values) {
    if (orbit_values.size() != static_cast<std::size_t>(t.orbit_count())) {
        throw DimensionError("expected " + std::to_string(t.orbit_count()) + " orbit weights, got " +
                             std::to_string(orbit_values.size()));
    }
    const int n = t.node_count();
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : t.edges()) {
        const double value = orbit_values[static_cast<std::size_t>(e.orbit)];
        W(e.u, e.v) = value;
        W(e.v, e.u) = value;
    }
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j : t.neighbors(i)) off += W(i, j);
        W(i, i) = 1.0 - off;
    }
    return WeightMatrix(std::move(W));
}

WeightMatrix baseline_weights(const Topology& t, BaselineScheme scheme) {
    const int n = t.node_count();
    int max_degree = 0;
    for (int i = 0; i < n; ++i) max_degree = std::max(max_degree, t.degree(i));

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : t.edges()) {
        const double value = scheme == BaselineScheme::MaxDegree
                                 ? 1.0 / (max_degree + 1)
                                 : 1.0 / (1 + std::max(t.degree(e.u), t.degree(e.v)));
        W(e.u, e.v) = value;
        W(e.v, e.u) = value;
    }
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j : t.neighbors(i)) off += W(i, j);
        W(i, i) = 1.0 - off;
    }
    return WeightMatrix(std::move(W));
}

}  // namespace crnet
