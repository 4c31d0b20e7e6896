#pragma once

#include <Eigen/Dense>

#include <vector>

namespace crnet {

// Symmetric tridiagonal matrix: diag has n entries, off has n-1
// (off[i] couples rows i and i+1).
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const noexcept { return diag.size(); }
    Eigen::MatrixXd dense() const;
    double trace() const;
};

// Number of eigenvalues strictly below x (Sturm count of the LDL^T pivots).
int count_below(const SymTridiagonal& t, double x);

// All eigenvalues by bisection, sorted descending, each to within
// max(tol, a few ulps).
std::vector<double> bisection_eigenvalues(const SymTridiagonal& t, double tol);

}  // namespace crnet
