#include "generators.hpp"

#include "crnet/errors.hpp"
#include "crnet/simulator.hpp"
#include "crnet/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace crnet;

TEST_CASE("path P3 averages to the mean") {
    const WeightMatrix w = assemble(ChainSpec({1}), OrbitWeights::uniform(2, 0.5));
    Eigen::VectorXd x0(3);
    x0 << 1, 0, 0;
    const IterationTrace trace = iterate(w, x0, 100);
    CHECK(trace.steps() == 100);
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(std::abs(trace.states.back()(i) - 1.0 / 3.0) <= 1e-12);
    CHECK(trace.average == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("consensus state is a fixed point") {
    const ChainSpec spec({2, 3});
    const WeightMatrix w = assemble(spec, optimal_weights(spec));
    const IterationTrace trace = iterate(w, Eigen::VectorXd::Ones(spec.node_count()), 50);
    for (const Eigen::VectorXd& x : trace.states) CHECK((x.array() - 1.0).abs().maxCoeff() <= 1e-15);
}

TEST_CASE("convergence factor examples") {
    const WeightMatrix p3 = assemble(ChainSpec({1}), OrbitWeights::uniform(2, 0.5));
    CHECK(std::abs(convergence_factor(iterate(p3, random_state(3, 4), 40)) - 0.5) <= 1e-3);

    const ChainSpec s22({2, 2});
    const IterationTrace t22 = iterate(assemble(s22, optimal_weights(s22)), random_state(7, 1), 200);
    CHECK(std::abs(convergence_factor(t22) - 0.8047) <= 1e-3);

    const ChainSpec s111({1, 1, 1});
    const IterationTrace t111 = iterate(assemble(s111, optimal_weights(s111)), random_state(7, 1), 500);
    CHECK(std::abs(convergence_factor(t111) - 0.9010) <= 1e-3);
}

TEST_CASE("a start orthogonal to the extreme mode sees the next modulus") {
    const ChainSpec spec({2, 2});
    const WeightMatrix w = scheme_matrix(spec, "max-degree");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w.matrix());
    const Eigen::VectorXd values = solver.eigenvalues();
    const Eigen::MatrixXd vectors = solver.eigenvectors();

    // Ascending order: the last is the consensus eigenvalue 1.
    const Eigen::Index n = values.size();
    REQUIRE(std::abs(values(n - 1) - 1.0) <= 1e-12);
    std::vector<std::pair<double, Eigen::Index>> moduli;
    for (Eigen::Index i = 0; i + 1 < n; ++i) moduli.push_back({std::abs(values(i)), i});
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    REQUIRE(moduli[0].first - moduli[1].first > 1e-2);

    Eigen::VectorXd x0 = random_state(static_cast<int>(n), 9);
    const Eigen::VectorXd top = vectors.col(moduli[0].second);
    x0 -= x0.dot(top) * top;
    const IterationTrace trace = iterate(w, x0, 60);
    const double factor = convergence_factor(trace, 20);
    CHECK(std::abs(factor - moduli[1].first) <= 1e-3);
    CHECK(std::abs(factor - slem_of_matrix(w).slem) > 1e-2);
}

TEST_CASE("property: local updates equal the matrix iteration") {
    Rng rng(55);
    for (int run = 0; run < 20; ++run) {
        const ChainSpec spec = testing::random_spec(rng, 1, 4, 4);
        const OrbitWeights weights = run % 2 == 0 ? optimal_weights(spec)
                                                  : testing::random_weights(rng, static_cast<std::size_t>(spec.orbit_count()), 0.05, 0.5);
        const WeightMatrix w = assemble(spec, weights);
        const Eigen::VectorXd x0 = random_state(spec.node_count(), 1000 + static_cast<std::uint64_t>(run));
        const IterationTrace local = iterate(w, x0, 200);
        const IterationTrace dense = iterate_matrix(w, x0, 200);
        const double sum0 = x0.sum();
        CAPTURE(spec.to_string());
        // Random weights can make W expansive, so the bound scales with the state.
        for (std::size_t t = 0; t < local.states.size(); ++t) {
            const double scale = std::max(1.0, dense.states[t].cwiseAbs().maxCoeff());
            CHECK((local.states[t] - dense.states[t]).cwiseAbs().maxCoeff() <= 1e-12 * scale);
            CHECK(std::abs(local.states[t].sum() - sum0) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("input checks") {
    const WeightMatrix w = assemble(ChainSpec({1}), OrbitWeights::uniform(2, 0.5));
    CHECK_THROWS_AS(iterate(w, Eigen::VectorXd::Zero(4), 10), DimensionError);
    CHECK_THROWS(iterate(w, Eigen::VectorXd::Zero(3), 0));

    const IterationTrace short_trace = iterate(w, random_state(3, 1), 15);
    CHECK_THROWS_AS(convergence_factor(short_trace, 10), InsufficientSignal);

    // P3 reaches the round-off floor within ~50 steps, long before t = 250.
    const IterationTrace long_trace = iterate(w, random_state(3, 1), 500);
    CHECK(usable_end(long_trace) < 60);
    CHECK_THROWS_AS(convergence_factor(long_trace, 250), InsufficientSignal);
    CHECK(default_burn_in(long_trace) == usable_end(long_trace) / 2);
    CHECK_NOTHROW(convergence_factor(long_trace));
}

TEST_CASE("seeded initial states") {
    const Eigen::VectorXd a = random_state(50, 3);
    CHECK(a == random_state(50, 3));
    CHECK(a != random_state(50, 4));
    CHECK(a.maxCoeff() <= 1.0);
    CHECK(a.minCoeff() >= -1.0);
}

TEST_CASE("trace export") {
    const WeightMatrix w = assemble(ChainSpec({1}), OrbitWeights::uniform(2, 0.5));
    const std::string csv = trace_csv(iterate(w, random_state(3, 1), 5));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,deviation_norm,ratio");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);
    CHECK(csv.find("\n0,") != std::string::npos);
}

TEST_CASE("scheme comparison") {
    const auto rates121 = compare_schemes(ChainSpec({1, 2, 1}), {"optimal"}, 300, 7);
    const auto rates111 = compare_schemes(ChainSpec({1, 1, 1}), {"optimal"}, 300, 7);
    const auto rates131 = compare_schemes(ChainSpec({1, 3, 1}), {"optimal"}, 300, 7);
    CHECK(std::abs(rates121[0].analytic_slem - 0.8857) <= 5e-5);
    CHECK(rates121[0].analytic_slem < rates111[0].analytic_slem);
    CHECK(std::abs(rates131[0].analytic_slem - 0.8797) <= 5e-5);
    CHECK(rates131[0].analytic_slem < rates121[0].analytic_slem);
    CHECK(std::abs(rates121[0].empirical_factor - rates121[0].analytic_slem) <= 1e-3);

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const ChainSpec spec = testing::random_spec(rng, 2, 4, 4);
        const auto rates = compare_schemes(spec, {"optimal", "metropolis", "max-degree"}, 500, 3);
        CAPTURE(spec.to_string());
        REQUIRE(rates.size() == 3);
        CHECK(rates[0].empirical_factor <= rates[1].empirical_factor);
        CHECK(rates[0].analytic_slem <= rates[1].analytic_slem);
        CHECK(rates[0].analytic_slem <= rates[2].analytic_slem);
    }
}
