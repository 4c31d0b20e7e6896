#include "crnet/regression.hpp"

#include "crnet/charpoly.hpp"
#include "crnet/errors.hpp"
#include "crnet/reference_table.hpp"

#include <charconv>
#include <cmath>

namespace crnet {

TableCheck check_row(const ChainSpec& spec, double table_value) {
    const OrbitWeights w = optimal_weights(spec);
    TableCheck row{spec};
    row.slem_charpoly = charpoly_roots(charpoly(spec)).front();
    const SlemReport dense = slem_of_matrix(assemble(spec, w), 1e-13);
    row.slem_eig = dense.slem;
    row.source = slem(spec, w, false, 1e-13).attaining_source;
    row.table_value = table_value;
    row.abs_err = std::max(std::abs(row.slem_charpoly - table_value), std::abs(row.slem_eig - table_value));
    return row;
}

std::vector<TableCheck> check_reference_table() {
    std::vector<TableCheck> rows;
    for (const ReferenceRow& r : reference_slem_table()) rows.push_back(check_row(ChainSpec(r.orders), r.slem));
    return rows;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidSpec("cannot parse '" + std::string(s) + "' in sweep range '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

SweepRange SweepRange::parse(std::string_view text) {
    SweepRange r;
    bool have_inner = false;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(start, end - start);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw InvalidSpec("sweep item '" + std::string(item) + "' lacks '='");
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "m") {
            r.m = parse_int(value, text);
        } else if (key == "outer") {
            r.outer = parse_int(value, text);
        } else if (key == "inner") {
            const std::size_t dots = value.find("..");
            if (dots == std::string_view::npos) {
                r.inner_first = r.inner_last = parse_int(value, text);
            } else {
                r.inner_first = parse_int(value.substr(0, dots), text);
                r.inner_last = parse_int(value.substr(dots + 2), text);
            }
            have_inner = true;
        } else {
            throw InvalidSpec("unknown sweep key '" + std::string(key) + "'");
        }
        start = end + 1;
    }
    if (!have_inner) throw InvalidSpec("sweep range needs inner=<a>..<b>");
    if (r.m < 3) throw InvalidSpec("sweeping inner rhombuses needs m >= 3");
    if (r.inner_first < 1 || r.inner_last < r.inner_first || r.outer < 1) {
        throw InvalidSpec("sweep orders must be positive and inner range non-empty");
    }
    return r;
}

std::vector<SweepRow> sweep(const SweepRange& range) {
    std::vector<SweepRow> rows;
    for (int k = range.inner_first; k <= range.inner_last; ++k) {
        std::vector<int> orders(static_cast<std::size_t>(range.m), k);
        orders.front() = range.outer;
        orders.back() = range.outer;
        ChainSpec spec(std::move(orders));
        SweepRow row{k, spec, slem(spec, optimal_weights(spec)), 0.0};
        row.slem_charpoly = charpoly_roots(charpoly(spec)).front();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace crnet
