#include "crnet/tridiagonal.hpp"

#include "crnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace crnet {

Eigen::MatrixXd SymTridiagonal::dense() const {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = m(i + 1, i) = off[static_cast<std::size_t>(i)];
    }
    return m;
}

double SymTridiagonal::trace() const { return std::accumulate(diag.begin(), diag.end(), 0.0); }

int count_below(const SymTridiagonal& t, double x) {
    // A zero pivot is nudged off zero; this only moves the count at
    // points that are eigenvalues to working precision.
    constexpr double tiny = std::numeric_limits<double>::min() * 1e8;
    int count = 0;
    double q = t.diag[0] - x;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < t.diag.size(); ++i) {
        const double e = t.off[i - 1];
        q = t.diag[i] - x - e * e / q;
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> bisection_eigenvalues(const SymTridiagonal& t, double tol) {
    const std::size_t n = t.size();
    if (n == 0) return {};
    if (t.off.size() + 1 != n) throw DimensionError("tridiagonal off-diagonal length must be n-1");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < n) radius += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    lo -= 4.0 * std::numeric_limits<double>::epsilon() * scale;
    hi += 4.0 * std::numeric_limits<double>::epsilon() * scale;

    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k-th smallest: count_below(a) <= k < count_below(b).
        double a = lo;
        double b = hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double width_floor =
                4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
            if (b - a <= std::max(tol, width_floor)) break;
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (count_below(t, mid) > static_cast<int>(k)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        values[k] = 0.5 * (a + b);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace crnet
