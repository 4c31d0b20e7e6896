// Claims about the tabulated reference chains that are checked exactly as
// stated. Some of them do not hold; see README.md ("Known discrepancies").

#include "crnet/reference_table.hpp"
#include "crnet/regression.hpp"
#include "crnet/simulator.hpp"
#include "crnet/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace crnet;

TEST_CASE("middle-junction diagonal equals -(1 - w_{2i-1} - w_{2i}) at the optimum") {
    for (const ReferenceRow& row : reference_slem_table()) {
        const ChainSpec spec(row.orders);
        const OrbitWeights w = optimal_weights(spec);
        const WeightMatrix m = assemble(spec, w);
        for (int j = 1; j < spec.rhombus_count(); ++j) {
            const int node = spec.junction_node(j);
            const double expected = -(1.0 - w[static_cast<std::size_t>(2 * (j - 1))] -
                                      w[static_cast<std::size_t>(2 * (j - 1) + 1)]);
            CAPTURE(spec.to_string());
            CAPTURE(j);
            CHECK(std::abs(m(node, node) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("deviation after 500 steps is below 1e-6 of the initial deviation") {
    for (const ReferenceRow& row : reference_slem_table()) {
        const ChainSpec spec(row.orders);
        const IterationTrace trace =
            iterate(assemble(spec, optimal_weights(spec)), random_state(spec.node_count(), 1), 500);
        CAPTURE(spec.to_string());
        CHECK(trace.deviations.back() <= 1e-6 * trace.deviations.front());
    }
}

TEST_CASE("charpoly root and dense SLEM agree within 1e-8 on every reference row") {
    for (const TableCheck& row : check_reference_table()) {
        CAPTURE(row.spec.to_string());
        CHECK(std::abs(row.slem_charpoly - row.slem_eig) <= 1e-8);
    }
}

TEST_CASE("SLEM decreases along (1,k,1) and ends near 0.8669 at k = 50") {
    SweepRange range;
    range.m = 3;
    range.inner_first = 1;
    range.inner_last = 50;
    const auto rows = sweep(range);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CAPTURE(rows[i].inner);
        CHECK(rows[i].report.slem < rows[i - 1].report.slem);
    }
    CHECK(std::abs(rows.back().report.slem - 0.8669) <= 5e-5);
}
