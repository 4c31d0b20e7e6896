#pragma once

#include "crnet/spectral.hpp"
#include "crnet/topology.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crnet {

inline constexpr double kTableTolerance = 5e-5;

struct TableCheck {
    ChainSpec spec;
    double slem_charpoly = 0.0;  // largest root of the recursion polynomial
    double slem_eig = 0.0;       // dense spectrum of the full matrix
    double table_value = 0.0;
    double abs_err = 0.0;        // worse of the two routes
    SlemSource source = SlemSource::QuotientTridiagonal;

    bool passes() const { return abs_err <= kTableTolerance; }
};

TableCheck check_row(const ChainSpec& spec, double table_value);
std::vector<TableCheck> check_reference_table();

// "m=<m>;inner=<a>..<b>[;outer=<n>]": chains of m rhombuses whose m-2 inner
// rhombuses all have order k (k = a..b) and whose two end rhombuses have
// order `outer` (default 1).
struct SweepRange {
    int m = 3;
    int inner_first = 1;
    int inner_last = 1;
    int outer = 1;

    static SweepRange parse(std::string_view text);
};

struct SweepRow {
    int inner = 0;
    ChainSpec spec;
    SlemReport report;           // full spectrum at the 1/(n_i+1) weights
    double slem_charpoly = 0.0;  // W0 block only
};

std::vector<SweepRow> sweep(const SweepRange& range);

}  // namespace crnet
