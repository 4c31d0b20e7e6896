#pragma once

// Stratified spectrum of chain weight matrices.
//
// In the basis {junction 0, symmetric rhombus 0 vector, junction 1, ...}
// the chain matrix reduces to a (2m+1)x(2m+1) tridiagonal block W0. The
// vectors inside rhombus i that sum to zero are eigenvectors with value
// 1 - w_{2i-1} - w_{2i} (multiplicity n_i - 1); those values form W0'.
// The spectrum of W is exactly eig(W0) together with W0' counted that way.

#include "crnet/tridiagonal.hpp"
#include "crnet/weights.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace crnet {

struct QuotientPair {
    SymTridiagonal w0;
    std::vector<double> w0prime;
};

struct Spectrum {
    std::vector<double> values;  // descending
    double tolerance = 0.0;
};

enum class SlemSource { QuotientTridiagonal, DiagonalBlock, FullMatrix };

std::string to_string(SlemSource source);

struct SlemReport {
    double slem = 0.0;
    double lambda2 = 0.0;
    double lambda_min = 0.0;
    SlemSource attaining_source = SlemSource::QuotientTridiagonal;
    // Largest modulus among the nontrivial eigenvalues of W0 alone.
    double quotient_slem = 0.0;
    // Largest |W0'| entry that actually occurs in W (rhombus order >= 2).
    double block_slem = 0.0;
    // Single-rhombus chains skip the quotient route.
    bool numerical_only = false;
};

inline constexpr double kDefaultEigTol = 1e-10;

QuotientPair quotient(const ChainSpec& spec, const OrbitWeights& w);

// v(2mu+1) = 1, v(2mu) = sqrt(n_mu) in 1-based indexing; W0 v = v.
Eigen::VectorXd stratification_vector(const ChainSpec& spec);

// The 2m direction vectors with W0 = I - sum_k w_k alpha_k alpha_k^T.
std::vector<Eigen::VectorXd> direction_vectors(const ChainSpec& spec);

// Gram matrix of the direction vectors (tridiagonal, size 2m).
SymTridiagonal gram(const ChainSpec& spec);

// Dense symmetric eigenvalues (Eigen). Throws ContractViolation if the
// input is not symmetric.
Spectrum eig_sym(const Eigen::MatrixXd& matrix, double tol = kDefaultEigTol);
// Tridiagonal path: Sturm-count bisection.
Spectrum eig_sym(const SymTridiagonal& matrix, double tol = kDefaultEigTol);

// Removes the single eigenvalue closest to 1 (the consensus direction).
std::vector<double> nontrivial(std::vector<double> descending);

// SLEM of an arbitrary weight matrix from its full spectrum.
SlemReport slem_of_matrix(const WeightMatrix& w, double tol = kDefaultEigTol);

struct SlemSubgradient {
    double value = 0.0;
    std::vector<double> gradient;  // one entry per orbit
};

// Spectral norm of W - 11^T/n for the orbit weights of t, with one
// subgradient: an edge (a, b) contributes -sign(lambda) (v_a - v_b)^2 for the
// extreme eigenpair (lambda, v). Equals the SLEM whenever the consensus
// eigenvalue is the largest; convex in the weights everywhere.
SlemSubgradient slem_subgradient(const Topology& t, std::span<const double> orbit_values);

// SLEM from the quotient pair; when verify is set the dense spectrum of the
// assembled matrix must agree within 1e-8 or InconsistencyError is thrown.
// m = 1 always uses the dense spectrum and sets numerical_only.
SlemReport slem(const ChainSpec& spec, const OrbitWeights& w, bool verify = true,
                double tol = kDefaultEigTol);

// eig(W) == eig(W0) + W0' (with multiplicities n_i - 1) as multisets.
bool spectrum_union_check(const ChainSpec& spec, const OrbitWeights& w, double tol = 1e-9);

struct InterlacingReport {
    bool entries_within_w0_range = false;
    bool at_optimum = false;
    // Only meaningful when at_optimum: |W0'_i| <= quotient SLEM for all i.
    bool optimum_bound_holds = true;
    double w0_min = 0.0;
    double w0_max = 0.0;
    double quotient_slem = 0.0;
};

// Requires m >= 2 (UnsupportedOrder otherwise).
InterlacingReport interlacing_report(const ChainSpec& spec, const OrbitWeights& w);
bool interlacing_check(const ChainSpec& spec, const OrbitWeights& w);

}  // namespace crnet
