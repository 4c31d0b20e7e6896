#include "crnet/reference_table.hpp"

namespace crnet {

std::span<const ReferenceRow> reference_slem_table() {
    static const std::vector<ReferenceRow> rows = {
        {{2, 2}, 0.8047},
        {{2, 3}, 0.8143},
        {{2, 4}, 0.8233},
        {{2, 5}, 0.8306},
        {{2, 10}, 0.8510},
        {{2, 20}, 0.8648},
        {{3, 3}, 0.8257},
        {{3, 4}, 0.8360},
        {{3, 5}, 0.8443},
        {{3, 10}, 0.8671},
        {{5, 5}, 0.8654},
        {{10, 10}, 0.9181},
        {{20, 20}, 0.9548},
        {{50, 50}, 0.9808},
        {{100, 100}, 0.9902},
        {{1, 1, 1}, 0.9010},
        {{1, 2, 1}, 0.8857},
        {{1, 1, 2}, 0.9091},
        {{1, 3, 1}, 0.8797},
        {{1, 1, 3}, 0.9162},
        {{1, 50, 1}, 0.8669},
        {{2, 2, 2}, 0.9031},
        {{2, 3, 2}, 0.8969},
        {{2, 2, 3}, 0.9116},
        {{2, 4, 2}, 0.8935},
        {{2, 50, 2}, 0.8829},
        {{2, 4, 3}, 0.9027},
        {{3, 3, 3}, 0.9146},
        {{3, 4, 3}, 0.9117},
        {{3, 3, 4}, 0.9214},
        {{1, 1, 1, 1}, 0.9397},
        {{2, 1, 1, 1}, 0.9460},
        {{1, 2, 1, 1}, 0.9353},
        {{1, 2, 2, 1}, 0.9289},
        {{1, 2, 1, 2}, 0.9428},
        {{2, 1, 1, 2}, 0.9521},
        {{3, 1, 1, 1}, 0.9507},
        {{1, 3, 1, 1}, 0.9349},
        {{1, 3, 3, 1}, 0.9262},
        {{1, 3, 1, 3}, 0.9491},
        {{3, 1, 1, 3}, 0.9609},
        {{2, 2, 2, 2}, 0.9423},
        {{3, 2, 2, 2}, 0.9476},
        {{2, 3, 2, 2}, 0.9409},
        {{2, 3, 3, 2}, 0.9393},
    };
    return rows;
}

}  // namespace crnet
