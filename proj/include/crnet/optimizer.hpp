#pragma once

#include "crnet/topology.hpp"
#include "crnet/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace crnet {

// Returns f(x) and writes a subgradient of f at x into g.
using SubgradientOracle = std::function<double(std::span<const double> x, std::vector<double>& g)>;

struct SearchOptions {
    std::size_t budget = 20000;  // oracle evaluations
    double tol = 1e-9;
    double lower = -1.0;
    double upper = 1.0;
};

struct SearchResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
    // Certified optimality gap at exit: value - (lower bound on the minimum).
    double gap = 0.0;
    bool converged = false;
    // Best value seen after each evaluation.
    std::vector<double> best_history;
};

// Ellipsoid method for a convex function on a box, kept in factored form
// P = B B^T. Stops once the certified gap drops below tol or the budget runs
// out. `converged` is set iff the budget leaves room for the check and no
// +-tol coordinate step from the result improves the value by more than tol.
SearchResult ellipsoid_search(const SubgradientOracle& f, std::vector<double> x0, const SearchOptions& options);

struct OptimizationResult {
    OrbitWeights weights;                // chain orbits (2m values for chains)
    std::optional<double> bridge_weight;  // branches only
    std::vector<double> host_weights;     // branches only, one per host edge
    double achieved_slem = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    std::vector<double> best_history;
    // Branches: largest |w_k - 1/(n_i+1)| over the chain orbits.
    double max_interior_error = 0.0;
    bool interior_matches_analytic = false;
};

// Minimises SLEM over the orbit weights of `t`, within [-1, 1] per orbit.
// achieved_slem is recomputed from the result with the spectral module
// (verified quotient route for chains).
OptimizationResult minimize_slem(const Topology& t, const OrbitWeights& init, std::size_t budget, double tol,
                                 std::uint64_t seed = 1);

// Seeded perturbations d with max|d_k| = eps; true iff none lowers SLEM by
// more than 1e-9.
bool verify_no_improvement(const ChainSpec& spec, const OrbitWeights& w, double eps, int trials,
                           std::uint64_t seed);

// Full optimisation of a branch: chain orbits, bridge, and every host edge.
OptimizationResult branch_bridge(const ChainSpec& spec, const HostGraph& host, int attach, std::size_t budget,
                                 std::uint64_t seed = 1);

}  // namespace crnet
