#include "crnet/spectral.hpp"

#include "crnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace crnet {

std::string to_string(SlemSource source) {
    switch (source) {
        case SlemSource::QuotientTridiagonal: return "quotient-tridiagonal";
        case SlemSource::DiagonalBlock: return "diagonal-block";
        case SlemSource::FullMatrix: return "full-matrix";
    }
    return "unknown";
}

QuotientPair quotient(const ChainSpec& spec, const OrbitWeights& w) {
    const int m = spec.rhombus_count();
    if (w.size() != static_cast<std::size_t>(2 * m)) throw DimensionError("orbit weight count must be 2m");
    auto wk = [&w](int k) { return w[static_cast<std::size_t>(k)]; };

    QuotientPair q;
    q.w0.diag.assign(static_cast<std::size_t>(2 * m + 1), 0.0);
    q.w0.off.assign(static_cast<std::size_t>(2 * m), 0.0);
    q.w0prime.assign(static_cast<std::size_t>(m), 0.0);

    for (int i = 0; i < m; ++i) {
        const double root_n = std::sqrt(static_cast<double>(spec.order(i)));
        q.w0.diag[static_cast<std::size_t>(2 * i + 1)] = 1.0 - wk(2 * i) - wk(2 * i + 1);
        q.w0.off[static_cast<std::size_t>(2 * i)] = root_n * wk(2 * i);
        q.w0.off[static_cast<std::size_t>(2 * i + 1)] = root_n * wk(2 * i + 1);
        q.w0prime[static_cast<std::size_t>(i)] = 1.0 - wk(2 * i) - wk(2 * i + 1);
    }
    q.w0.diag[0] = 1.0 - spec.order(0) * wk(0);
    for (int j = 1; j < m; ++j) {
        q.w0.diag[static_cast<std::size_t>(2 * j)] =
            1.0 - spec.order(j - 1) * wk(2 * j - 1) - spec.order(j) * wk(2 * j);
    }
    q.w0.diag[static_cast<std::size_t>(2 * m)] = 1.0 - spec.order(m - 1) * wk(2 * m - 1);
    return q;
}

Eigen::VectorXd stratification_vector(const ChainSpec& spec) {
    const int m = spec.rhombus_count();
    Eigen::VectorXd v(2 * m + 1);
    for (int j = 0; j <= m; ++j) v(2 * j) = 1.0;
    for (int i = 0; i < m; ++i) v(2 * i + 1) = std::sqrt(static_cast<double>(spec.order(i)));
    return v;
}

std::vector<Eigen::VectorXd> direction_vectors(const ChainSpec& spec) {
    const int m = spec.rhombus_count();
    std::vector<Eigen::VectorXd> alphas;
    alphas.reserve(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        const double root_n = std::sqrt(static_cast<double>(spec.order(i)));
        Eigen::VectorXd left = Eigen::VectorXd::Zero(2 * m + 1);
        left(2 * i) = root_n;
        left(2 * i + 1) = -1.0;
        Eigen::VectorXd right = Eigen::VectorXd::Zero(2 * m + 1);
        right(2 * i + 1) = 1.0;
        right(2 * i + 2) = -root_n;
        alphas.push_back(std::move(left));
        alphas.push_back(std::move(right));
    }
    return alphas;
}

SymTridiagonal gram(const ChainSpec& spec) {
    const int m = spec.rhombus_count();
    SymTridiagonal g;
    g.diag.reserve(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        g.diag.push_back(spec.order(i) + 1.0);
        g.diag.push_back(spec.order(i) + 1.0);
    }
    for (int i = 0; i < m; ++i) {
        g.off.push_back(-1.0);
        if (i + 1 < m) {
            g.off.push_back(-std::sqrt(static_cast<double>(spec.order(i)) * spec.order(i + 1)));
        }
    }
    return g;
}

Spectrum eig_sym(const Eigen::MatrixXd& matrix, double tol) {
    if (matrix.rows() != matrix.cols()) throw ContractViolation("eig_sym needs a square matrix");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw ContractViolation("eig_sym needs a symmetric matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InconsistencyError("symmetric eigensolver did not converge");
    Spectrum s;
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    const double achievable =
        8.0 * static_cast<double>(matrix.rows()) * std::numeric_limits<double>::epsilon() * scale;
    s.tolerance = std::max(tol, achievable);
    return s;
}

Spectrum eig_sym(const SymTridiagonal& matrix, double tol) {
    Spectrum s;
    s.values = bisection_eigenvalues(matrix, tol);
    s.tolerance = tol;
    return s;
}

std::vector<double> nontrivial(std::vector<double> descending) {
    if (descending.empty()) return descending;
    auto closest = std::min_element(descending.begin(), descending.end(), [](double a, double b) {
        return std::abs(a - 1.0) < std::abs(b - 1.0);
    });
    descending.erase(closest);
    return descending;
}

namespace {

SlemReport report_from(const std::vector<double>& quotient_part, const std::vector<double>& block_part,
                       double tol, SlemSource forced) {
    SlemReport r;
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (double x : quotient_part) {
        hi = std::max(hi, x);
        lo = std::min(lo, x);
        r.quotient_slem = std::max(r.quotient_slem, std::abs(x));
    }
    for (double x : block_part) {
        hi = std::max(hi, x);
        lo = std::min(lo, x);
        r.block_slem = std::max(r.block_slem, std::abs(x));
    }
    if (quotient_part.empty() && block_part.empty()) {
        hi = lo = 0.0;  // single node: nothing but the consensus mode
    }
    r.lambda2 = hi;
    r.lambda_min = lo;
    r.slem = std::max(hi, -lo);
    if (forced == SlemSource::FullMatrix) {
        r.attaining_source = SlemSource::FullMatrix;
    } else {
        r.attaining_source = r.block_slem > r.quotient_slem + tol ? SlemSource::DiagonalBlock
                                                                  : SlemSource::QuotientTridiagonal;
    }
    return r;
}

std::vector<double> occurring_block_values(const ChainSpec& spec, const QuotientPair& q) {
    std::vector<double> values;
    for (int i = 0; i < spec.rhombus_count(); ++i) {
        if (spec.order(i) >= 2) values.push_back(q.w0prime[static_cast<std::size_t>(i)]);
    }
    return values;
}

}  // namespace

SlemReport slem_of_matrix(const WeightMatrix& w, double tol) {
    const auto values = nontrivial(eig_sym(w.matrix(), tol).values);
    SlemReport r = report_from(values, {}, tol, SlemSource::FullMatrix);
    r.numerical_only = true;
    return r;
}

SlemSubgradient slem_subgradient(const Topology& t, std::span<const double> orbit_values) {
    const WeightMatrix w = assemble(t, orbit_values);
    const auto n = static_cast<Eigen::Index>(w.size());
    const Eigen::MatrixXd centered = w.matrix() - Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(centered);
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::Index top = std::abs(values(0)) > std::abs(values(n - 1)) ? 0 : n - 1;
    const Eigen::VectorXd v = solver.eigenvectors().col(top);
    const double sign = values(top) < 0.0 ? -1.0 : 1.0;

    SlemSubgradient out;
    out.value = std::abs(values(top));
    out.gradient.assign(static_cast<std::size_t>(t.orbit_count()), 0.0);
    for (const Edge& e : t.edges()) {
        const double d = v(e.u) - v(e.v);
        out.gradient[static_cast<std::size_t>(e.orbit)] -= sign * d * d;
    }
    return out;
}

SlemReport slem(const ChainSpec& spec, const OrbitWeights& w, bool verify, double tol) {
    if (spec.rhombus_count() == 1) {
        SlemReport r = slem_of_matrix(assemble(spec, w), tol);
        r.numerical_only = true;
        return r;
    }
    const QuotientPair q = quotient(spec, w);
    const auto w0_values = nontrivial(bisection_eigenvalues(q.w0, std::min(tol, 1e-13)));
    SlemReport r = report_from(w0_values, occurring_block_values(spec, q), tol, SlemSource::QuotientTridiagonal);

    if (verify) {
        const SlemReport dense = slem_of_matrix(assemble(spec, w), tol);
        const double gap = std::max({std::abs(dense.slem - r.slem), std::abs(dense.lambda2 - r.lambda2),
                                     std::abs(dense.lambda_min - r.lambda_min)});
        if (gap > 1e-8) {
            std::ostringstream msg;
            msg << "quotient SLEM " << r.slem << " disagrees with dense SLEM " << dense.slem << " for orders "
                << spec.to_string();
            throw InconsistencyError(msg.str());
        }
    }
    return r;
}

bool spectrum_union_check(const ChainSpec& spec, const OrbitWeights& w, double tol) {
    const std::vector<double> full = eig_sym(assemble(spec, w).matrix(), 1e-13).values;

    const QuotientPair q = quotient(spec, w);
    std::vector<double> joined = bisection_eigenvalues(q.w0, 1e-13);
    for (int i = 0; i < spec.rhombus_count(); ++i) {
        for (int k = 1; k < spec.order(i); ++k) joined.push_back(q.w0prime[static_cast<std::size_t>(i)]);
    }
    if (joined.size() != full.size()) return false;
    std::sort(joined.begin(), joined.end(), std::greater<>());
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (std::abs(full[i] - joined[i]) > tol) return false;
    }
    return true;
}

InterlacingReport interlacing_report(const ChainSpec& spec, const OrbitWeights& w) {
    if (spec.rhombus_count() < 2) {
        throw UnsupportedOrder("interlacing of W0' against W0 needs at least two rhombuses");
    }
    constexpr double slack = 1e-12;
    const QuotientPair q = quotient(spec, w);
    const std::vector<double> values = bisection_eigenvalues(q.w0, 1e-14);

    InterlacingReport r;
    r.w0_max = values.front();
    r.w0_min = values.back();
    r.entries_within_w0_range = std::all_of(q.w0prime.begin(), q.w0prime.end(), [&](double x) {
        return x >= r.w0_min - slack && x <= r.w0_max + slack;
    });

    for (double x : nontrivial(values)) r.quotient_slem = std::max(r.quotient_slem, std::abs(x));

    const OrbitWeights best = optimal_weights(spec);
    r.at_optimum = true;
    for (std::size_t k = 0; k < best.size(); ++k) {
        if (std::abs(best[k] - w[k]) > 1e-12) r.at_optimum = false;
    }
    if (r.at_optimum) {
        r.optimum_bound_holds = std::all_of(q.w0prime.begin(), q.w0prime.end(),
                                            [&](double x) { return std::abs(x) <= r.quotient_slem + slack; });
    }
    return r;
}

bool interlacing_check(const ChainSpec& spec, const OrbitWeights& w) {
    const InterlacingReport r = interlacing_report(spec, w);
    return r.entries_within_w0_range && (!r.at_optimum || r.optimum_bound_holds);
}

}  // namespace crnet
