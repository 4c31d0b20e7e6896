#include "generators.hpp"

#include "crnet/errors.hpp"
#include "crnet/weights.hpp"

#include <doctest.h>

#include <cmath>

using namespace crnet;
using doctest::Approx;

TEST_CASE("optimal weights") {
    const OrbitWeights w22 = optimal_weights(ChainSpec({2, 2}));
    REQUIRE(w22.size() == 4);
    for (double v : w22.values) CHECK(v == Approx(1.0 / 3.0).epsilon(1e-15));

    for (double v : optimal_weights(ChainSpec({1, 1, 1})).values) CHECK(v == 0.5);

    const OrbitWeights w = optimal_weights(ChainSpec({3, 2, 4}));
    const std::vector<double> expected{0.25, 0.25, 1.0 / 3.0, 1.0 / 3.0, 0.2, 0.2};
    REQUIRE(w.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(w[k] == Approx(expected[k]).epsilon(1e-15));
}

TEST_CASE("assembled chain matrix entries") {
    const ChainSpec spec({2, 2});
    const WeightMatrix w = assemble(spec, optimal_weights(spec));
    REQUIRE(w.size() == 7);
    CHECK(w(0, 0) == Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(w(3, 3) == Approx(1.0 - 2.0 / 3.0 - 2.0 / 3.0).epsilon(1e-14));
    CHECK(w(6, 6) == Approx(1.0 / 3.0).epsilon(1e-14));
    // Interior rows: 1 - w_{2i-1} - w_{2i}.
    CHECK(w(1, 1) == Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(w(0, 3) == 0.0);
    CHECK(w(1, 2) == 0.0);
    CHECK(w(0, 6) == 0.0);
    CHECK(w(0, 1) == Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("assemble rejects a wrong weight count") {
    CHECK_THROWS_AS(assemble(ChainSpec({2, 2}), OrbitWeights::uniform(3, 0.1)), DimensionError);
    const Topology t = build_chain(ChainSpec({2, 2}));
    const std::vector<double> three(3, 0.1);
    CHECK_THROWS_AS(assemble(t, three), DimensionError);
}

TEST_CASE("baseline schemes on the path P3") {
    const Topology p3 = build_chain(ChainSpec({1}));
    const WeightMatrix md = baseline_weights(p3, BaselineScheme::MaxDegree);
    CHECK(md(0, 1) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(md(1, 2) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(md(1, 1) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(md(0, 0) == Approx(2.0 / 3.0).epsilon(1e-15));

    const WeightMatrix mh = baseline_weights(p3, BaselineScheme::Metropolis);
    // degrees (1, 2, 1): 1 / (1 + max(d_i, d_j)) = 1/3 on both edges.
    CHECK(mh(0, 1) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mh(2, 1) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mh(0, 2) == 0.0);
}

TEST_CASE("baseline schemes on a single edge") {
    const Topology edge(2, {Edge{0, 1, 0}}, {NodeInfo{NodeRole::Host, 0}, NodeInfo{NodeRole::Host, 1}});
    for (BaselineScheme s : {BaselineScheme::MaxDegree, BaselineScheme::Metropolis}) {
        const WeightMatrix w = baseline_weights(edge, s);
        CHECK(w(0, 1) == 0.5);
        CHECK(w(1, 0) == 0.5);
        CHECK(w(0, 0) == 0.5);
        CHECK(w(1, 1) == 0.5);
    }
    CHECK(parse_baseline_scheme("max-degree") == BaselineScheme::MaxDegree);
    CHECK(parse_baseline_scheme("metropolis") == BaselineScheme::Metropolis);
    CHECK_THROWS(parse_baseline_scheme("uniform"));
}

TEST_CASE("metropolis weights on a star-shaped junction") {
    // Junction 1 of [3,1] has degree 4; its interior neighbours have degree 2.
    const Topology t = build_chain(ChainSpec({3, 1}));
    const WeightMatrix w = baseline_weights(t, BaselineScheme::Metropolis);
    CHECK(w(1, 4) == Approx(0.2).epsilon(1e-15));
    CHECK(w(5, 4) == Approx(0.2).epsilon(1e-15));
    CHECK(w(5, 6) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(w.matrix().row(4).sum() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("property: assembled matrices for m <= 5, n_i <= 6") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const ChainSpec spec = testing::random_spec(rng, 1, 5, 6);
        const Topology t = build_chain(spec);
        const OrbitWeights w = testing::random_weights(rng, static_cast<std::size_t>(spec.orbit_count()));
        const WeightMatrix m = assemble(spec, w);
        const Eigen::MatrixXd& a = m.matrix();
        CAPTURE(spec.to_string());
        REQUIRE(m.size() == t.node_count());
        CHECK(a == a.transpose());
        for (Eigen::Index i = 0; i < a.rows(); ++i) CHECK(std::abs(a.row(i).sum() - 1.0) <= 1e-12);
        for (int i = 0; i < t.node_count(); ++i) {
            for (int j = 0; j < t.node_count(); ++j) {
                if (i != j && !t.has_edge(i, j)) CHECK(a(i, j) == 0.0);
            }
        }
        for (const Edge& e : t.edges()) CHECK(a(e.u, e.v) == w[static_cast<std::size_t>(e.orbit)]);
        // The topology-driven route builds the same matrix; diagonals may sum in a different order.
        const Eigen::MatrixXd generic = assemble(t, w.values).matrix();
        CHECK((generic - a).cwiseAbs().maxCoeff() <= 1e-14);
    }
}
