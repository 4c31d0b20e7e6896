#pragma once

#include "crnet/weights.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace crnet {

struct IterationTrace {
    std::vector<Eigen::VectorXd> states;  // x(0), ..., x(T)
    std::vector<double> deviations;       // ||x(t) - mean(x(0)) 1||_2
    double average = 0.0;

    int steps() const noexcept { return static_cast<int>(states.size()) - 1; }
};

// Synchronous rounds where node i reads only its own value and those of
// its neighbours (nonzero off-diagonal entries of row i).
IterationTrace iterate(const WeightMatrix& w, const Eigen::VectorXd& x0, int steps);

// Same recursion as a dense matrix-vector product; reference for iterate().
IterationTrace iterate_matrix(const WeightMatrix& w, const Eigen::VectorXd& x0, int steps);

// Deviations at or below floor * dev(0) are round-off, not signal.
inline constexpr double kDeviationFloor = 1e-13;

// Last step whose deviation is above the floor.
int usable_end(const IterationTrace& trace);

// min(T/2, usable_end/2).
int default_burn_in(const IterationTrace& trace);

// Geometric-mean per-step contraction over [burn_in, usable_end]. Throws
// InsufficientSignal if that window has fewer than 10 steps.
double convergence_factor(const IterationTrace& trace, int burn_in);
double convergence_factor(const IterationTrace& trace);

// Uniform on [-1, 1]^n.
Eigen::VectorXd random_state(int n, std::uint64_t seed);

// CSV with columns t,deviation_norm,ratio (ratio empty at t = 0).
std::string trace_csv(const IterationTrace& trace);

struct SchemeRate {
    std::string scheme;
    double analytic_slem = 0.0;
    double empirical_factor = 0.0;
};

// schemes drawn from {"optimal", "max-degree", "metropolis"}.
std::vector<SchemeRate> compare_schemes(const ChainSpec& spec, const std::vector<std::string>& schemes, int steps,
                                        std::uint64_t seed);

// Weight matrix for a named scheme on a chain.
WeightMatrix scheme_matrix(const ChainSpec& spec, const std::string& scheme);

}  // namespace crnet
