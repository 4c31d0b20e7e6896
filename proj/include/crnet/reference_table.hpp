#pragma once

#include <span>
#include <vector>

namespace crnet {

// Tabulated SLEM of chain networks at the 1/(n_i+1) weights, four decimals.
struct ReferenceRow {
    std::vector<int> orders;
    double slem;
};

std::span<const ReferenceRow> reference_slem_table();

}  // namespace crnet
