#pragma once

#include "crnet/topology.hpp"

#include <Eigen/Dense>

#include <span>
#include <string_view>
#include <vector>

namespace crnet {

// One weight per edge orbit; values[k] multiplies every edge with orbit k.
// Negative weights are legal.
struct OrbitWeights {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }
    double& operator[](std::size_t k) { return values[k]; }

    static OrbitWeights uniform(std::size_t count, double value) {
        return OrbitWeights{std::vector<double>(count, value)};
    }
};

// Dense symmetric matrix with unit row sums, sparsity pattern of a graph.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}

    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    Eigen::Index size() const noexcept { return m_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
    Eigen::MatrixXd m_;
};

enum class BaselineScheme { MaxDegree, Metropolis };

BaselineScheme parse_baseline_scheme(std::string_view name);

// w_{2i-1} = w_{2i} = 1/(n_i + 1).
OrbitWeights optimal_weights(const ChainSpec& spec);

// Chain weight matrix written out entry by entry from the rhombus orders,
// independently of any Topology object.
WeightMatrix assemble(const ChainSpec& spec, const OrbitWeights& w);

// Generic route: W_uv = w[orbit(uv)] on edges, diagonal fills row sums to 1.
WeightMatrix assemble(const Topology& t, std::span<const double> orbit_values);

WeightMatrix baseline_weights(const Topology& t, BaselineScheme scheme);

}  // namespace crnet
