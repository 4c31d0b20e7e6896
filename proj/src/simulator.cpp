#include "crnet/simulator.hpp"

#include "crnet/errors.hpp"
#include "crnet/random.hpp"
#include "crnet/spectral.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace crnet {

namespace {

void check_inputs(const WeightMatrix& w, const Eigen::VectorXd& x0, int steps) {
    if (w.size() != x0.size()) {
        throw DimensionError("state has " + std::to_string(x0.size()) + " entries, matrix is " +
                             std::to_string(w.size()) + "x" + std::to_string(w.size()));
    }
    if (steps < 1) throw std::invalid_argument("need at least one step");
}

void record(IterationTrace& trace, Eigen::VectorXd x) {
    trace.deviations.push_back((x.array() - trace.average).matrix().norm());
    trace.states.push_back(std::move(x));
}

}  // namespace

IterationTrace iterate(const WeightMatrix& w, const Eigen::VectorXd& x0, int steps) {
    check_inputs(w, x0, steps);
    const Eigen::Index n = w.size();
    const Eigen::MatrixXd& W = w.matrix();

    struct Link {
        Eigen::Index node;
        double weight;
    };
    std::vector<std::vector<Link>> links(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && W(i, j) != 0.0) links[static_cast<std::size_t>(i)].push_back({j, W(i, j)});
        }
    }

    IterationTrace trace;
    trace.average = x0.mean();
    trace.states.reserve(static_cast<std::size_t>(steps) + 1);
    record(trace, x0);
    for (int t = 0; t < steps; ++t) {
        const Eigen::VectorXd& prev = trace.states.back();
        Eigen::VectorXd next(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            double value = W(i, i) * prev(i);
            for (const Link& l : links[static_cast<std::size_t>(i)]) value += l.weight * prev(l.node);
            next(i) = value;
        }
        record(trace, std::move(next));
    }
    return trace;
}

IterationTrace iterate_matrix(const WeightMatrix& w, const Eigen::VectorXd& x0, int steps) {
    check_inputs(w, x0, steps);
    IterationTrace trace;
    trace.average = x0.mean();
    record(trace, x0);
    for (int t = 0; t < steps; ++t) {
        Eigen::VectorXd next = w.matrix() * trace.states.back();
        record(trace, std::move(next));
    }
    return trace;
}

int usable_end(const IterationTrace& trace) {
    const double floor = kDeviationFloor * trace.deviations.front();
    int last = 0;
    for (int t = 0; t < static_cast<int>(trace.deviations.size()); ++t) {
        if (trace.deviations[static_cast<std::size_t>(t)] > floor) last = t;
        else break;
    }
    return last;
}

int default_burn_in(const IterationTrace& trace) { return std::min(trace.steps() / 2, usable_end(trace) / 2); }

double convergence_factor(const IterationTrace& trace, int burn_in) {
    if (burn_in < 0) throw std::invalid_argument("burn-in must be non-negative");
    if (trace.steps() <= burn_in + 10) {
        throw InsufficientSignal("trace has " + std::to_string(trace.steps()) + " steps, need more than burn-in + 10");
    }
    const int end = usable_end(trace);
    if (end < burn_in + 10) {
        throw InsufficientSignal("deviation reaches the round-off floor at t = " + std::to_string(end) +
                                 ", before burn-in + 10 = " + std::to_string(burn_in + 10));
    }
    const double ratio = trace.deviations[static_cast<std::size_t>(end)] /
                         trace.deviations[static_cast<std::size_t>(burn_in)];
    return std::pow(ratio, 1.0 / (end - burn_in));
}

double convergence_factor(const IterationTrace& trace) { return convergence_factor(trace, default_burn_in(trace)); }

Eigen::VectorXd random_state(int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = uniform(rng, -1.0, 1.0);
    return x;
}

std::string trace_csv(const IterationTrace& trace) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "t,deviation_norm,ratio\n";
    for (std::size_t t = 0; t < trace.deviations.size(); ++t) {
        out << t << ',' << trace.deviations[t] << ',';
        if (t > 0 && trace.deviations[t - 1] > 0.0) out << trace.deviations[t] / trace.deviations[t - 1];
        out << '\n';
    }
    return out.str();
}

WeightMatrix scheme_matrix(const ChainSpec& spec, const std::string& scheme) {
    if (scheme == "optimal") return assemble(spec, optimal_weights(spec));
    return baseline_weights(build_chain(spec), parse_baseline_scheme(scheme));
}

std::vector<SchemeRate> compare_schemes(const ChainSpec& spec, const std::vector<std::string>& schemes, int steps,
                                        std::uint64_t seed) {
    std::vector<SchemeRate> rows;
    const Eigen::VectorXd x0 = random_state(spec.node_count(), seed);
    for (const std::string& name : schemes) {
        const WeightMatrix w = scheme_matrix(spec, name);
        SchemeRate row;
        row.scheme = name;
        row.analytic_slem = name == "optimal" ? slem(spec, optimal_weights(spec)).slem : slem_of_matrix(w).slem;
        row.empirical_factor = convergence_factor(iterate(w, x0, steps));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace crnet
