#include "crnet/optimizer.hpp"

#include "crnet/errors.hpp"
#include "crnet/random.hpp"
#include "crnet/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace crnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Evaluator {
public:
    Evaluator(const SubgradientOracle& f, std::size_t budget) : f_(f), budget_(budget) {}

    bool exhausted() const { return count_ >= budget_; }

    double operator()(const std::vector<double>& x, std::vector<double>& g) {
        ++count_;
        const double v = f_(x, g);
        if (v < best_) {
            best_ = v;
            best_x_ = x;
        }
        history_.push_back(best_);
        return v;
    }

    double operator()(const std::vector<double>& x) {
        std::vector<double> scratch;
        return (*this)(x, scratch);
    }

    std::size_t count() const { return count_; }
    double best() const { return best_; }
    const std::vector<double>& best_x() const { return best_x_; }
    std::vector<double> take_history() { return std::move(history_); }

private:
    const SubgradientOracle& f_;
    std::size_t budget_;
    std::size_t count_ = 0;
    double best_ = kInf;
    std::vector<double> best_x_;
    std::vector<double> history_;
};

// One-dimensional fallback: the ellipsoid update needs d >= 2.
void golden_section(Evaluator& eval, const SearchOptions& opts) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = opts.lower;
    double b = opts.upper;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval({c});
    double fd = eval({d});
    while (b - a > opts.tol && !eval.exhausted()) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval({c});
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval({d});
        }
    }
}

}  // namespace

SearchResult ellipsoid_search(const SubgradientOracle& f, std::vector<double> x0, const SearchOptions& options) {
    if (options.budget < 1) throw std::invalid_argument("search budget must be at least 1");
    if (x0.empty()) throw DimensionError("search needs at least one variable");
    const std::size_t dim = x0.size();
    const auto d = static_cast<Eigen::Index>(dim);
    Evaluator eval(f, options.budget);

    std::vector<double> x = std::move(x0);
    for (double& xi : x) xi = std::clamp(xi, options.lower, options.upper);
    double lower_bound = -kInf;

    if (dim == 1) {
        eval(x);
        golden_section(eval, options);
    } else {
        // Ball around the start that contains the whole box.
        const double radius = (options.upper - options.lower) * std::sqrt(static_cast<double>(dim));
        Eigen::MatrixXd b = radius * Eigen::MatrixXd::Identity(d, d);
        Eigen::VectorXd center = Eigen::Map<const Eigen::VectorXd>(x.data(), d);
        const double nd = static_cast<double>(dim);
        const double dilate = std::sqrt((nd - 1.0) / (nd + 1.0));
        const double scale = nd / std::sqrt(nd * nd - 1.0);

        std::vector<double> g;
        Eigen::VectorXd cut(d);
        const std::size_t max_cuts = 20 * options.budget;
        for (std::size_t cuts = 0; cuts < max_cuts && !eval.exhausted(); ++cuts) {
            std::vector<double> point(center.data(), center.data() + d);
            double value = 0.0;
            bool feasible = true;
            for (Eigen::Index k = 0; k < d; ++k) {
                if (center(k) > options.upper || center(k) < options.lower) {
                    cut.setZero();
                    cut(k) = center(k) > options.upper ? 1.0 : -1.0;
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                value = eval(point, g);
                cut = Eigen::Map<const Eigen::VectorXd>(g.data(), d);
            }
            const Eigen::VectorXd bg = b.transpose() * cut;
            const double width = bg.norm();
            if (feasible) {
                lower_bound = std::max(lower_bound, value - width);
                if (width == 0.0 || eval.best() - lower_bound <= options.tol) break;
            } else if (width == 0.0) {
                break;
            }
            const Eigen::VectorXd xi = bg / width;
            const Eigen::VectorXd bxi = b * xi;
            center -= bxi / (nd + 1.0);
            b = scale * (b + (dilate - 1.0) * bxi * xi.transpose());
        }
    }

    SearchResult result;
    result.x = eval.best_x();
    result.value = eval.best();
    result.gap = lower_bound == -kInf ? kInf : std::max(0.0, result.value - lower_bound);

    // The check itself costs 2d evaluations, so it only runs within budget.
    bool converged = eval.count() + 2 * dim <= options.budget;
    for (std::size_t k = 0; k < dim && converged; ++k) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> y(result.x);
            y[k] = std::clamp(y[k] + sign * options.tol, options.lower, options.upper);
            if (eval(y) < result.value - options.tol) converged = false;
        }
    }
    result.converged = converged;
    result.evaluations = eval.count();
    result.best_history = eval.take_history();
    return result;
}

OptimizationResult minimize_slem(const Topology& t, const OrbitWeights& init, std::size_t budget, double tol,
                                 std::uint64_t seed) {
    if (init.size() != static_cast<std::size_t>(t.orbit_count())) {
        throw DimensionError("initial weights must have one entry per orbit");
    }
    const SubgradientOracle oracle = [&t](std::span<const double> x, std::vector<double>& g) {
        SlemSubgradient s = slem_subgradient(t, x);
        g = std::move(s.gradient);
        return s.value;
    };

    SearchOptions opts;
    opts.budget = budget;
    opts.tol = tol;
    SearchResult r = ellipsoid_search(oracle, init.values, opts);

    OptimizationResult out;
    out.weights = OrbitWeights{r.x};
    out.evaluations = r.evaluations;
    out.converged = r.converged;
    out.seed = seed;
    out.best_history = std::move(r.best_history);
    const bool chain = t.chain().has_value() && t.chain()->orbit_count() == t.orbit_count();
    out.achieved_slem = chain ? slem(*t.chain(), out.weights, true).slem : slem_of_matrix(assemble(t, r.x)).slem;
    return out;
}

bool verify_no_improvement(const ChainSpec& spec, const OrbitWeights& w, double eps, int trials,
                           std::uint64_t seed) {
    if (w.size() != static_cast<std::size_t>(spec.orbit_count())) throw DimensionError("orbit weight count must be 2m");
    if (eps == 0.0) return true;
    const double base = slem(spec, w, false, 1e-14).slem;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        OrbitWeights p = w;
        for (double& v : p.values) v += uniform(rng, -eps, eps);
        const std::size_t pinned = uniform_index(rng, p.size());
        p[pinned] = w[pinned] + (uniform01(rng) < 0.5 ? -eps : eps);
        if (slem(spec, p, false, 1e-14).slem < base - 1e-9) return false;
    }
    return true;
}

OptimizationResult branch_bridge(const ChainSpec& spec, const HostGraph& host, int attach, std::size_t budget,
                                 std::uint64_t seed) {
    const BranchTopology branch = build_branch(spec, host, attach);
    const Topology& t = branch.combined;

    Rng rng(seed);
    OrbitWeights init;
    for (int k = 0; k < t.orbit_count(); ++k) init.values.push_back(uniform(rng, 0.15, 0.35));

    OptimizationResult r = minimize_slem(t, init, budget, 1e-10, seed);
    const auto chain_orbits = static_cast<std::size_t>(spec.orbit_count());
    std::vector<double> all = std::move(r.weights.values);
    r.weights.values.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(chain_orbits));
    r.bridge_weight = all[chain_orbits];
    r.host_weights.assign(all.begin() + static_cast<std::ptrdiff_t>(chain_orbits) + 1, all.end());

    const OrbitWeights analytic = optimal_weights(spec);
    r.max_interior_error = 0.0;
    for (std::size_t k = 0; k < chain_orbits; ++k) {
        r.max_interior_error = std::max(r.max_interior_error, std::abs(r.weights[k] - analytic[k]));
    }
    r.interior_matches_analytic = r.max_interior_error <= 1e-3;
    return r;
}

}  // namespace crnet
