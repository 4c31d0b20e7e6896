#include "crnet/json_io.hpp"

#include "crnet/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace crnet {

namespace {

std::string full_precision(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* role_name(NodeRole r) {
    switch (r) {
        case NodeRole::Junction: return "junction";
        case NodeRole::Interior: return "interior";
        case NodeRole::Host: return "host";
    }
    return "unknown";
}

}  // namespace

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

json to_json(const ChainSpec& spec) { return json{{"orders", spec.orders()}}; }

ChainSpec chain_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("orders") || !j["orders"].is_array()) {
        throw InvalidSpec("chain spec JSON must look like {\"orders\":[3,2,4]}");
    }
    std::vector<int> orders;
    for (const auto& item : j["orders"]) {
        if (!item.is_number_integer()) throw InvalidSpec("orders must be integers");
        orders.push_back(item.get<int>());
    }
    return ChainSpec(std::move(orders));
}

json to_json(const Topology& t) {
    json nodes = json::array();
    for (int v = 0; v < t.node_count(); ++v) {
        const NodeInfo& info = t.roles()[static_cast<std::size_t>(v)];
        nodes.push_back({{"id", v}, {"role", role_name(info.role)}, {"group", info.group}});
    }
    json edges = json::array();
    for (const Edge& e : t.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"orbit", e.orbit + 1}});
    json out{{"node_count", t.node_count()}, {"nodes", nodes}, {"edges", edges}, {"orbit_sizes", t.orbit_sizes()}};
    if (t.chain()) out["orders"] = t.chain()->orders();
    return out;
}

json to_json(const WeightMatrix& w) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < w.size(); ++j) row.push_back(w(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"size", w.size()}, {"rows", rows}};
}

std::string to_csv(const WeightMatrix& w) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        for (Eigen::Index j = 0; j < w.size(); ++j) {
            if (j) out << ',';
            out << full_precision(w(i, j));
        }
        out << '\n';
    }
    return out.str();
}

json to_json(const Spectrum& s) { return json(s.values); }

json to_json(const SlemReport& r) {
    return json{{"slem", round_significant(r.slem)},
                {"lambda2", round_significant(r.lambda2)},
                {"lambda_min", round_significant(r.lambda_min)},
                {"attaining_source", to_string(r.attaining_source)},
                {"quotient_slem", round_significant(r.quotient_slem)},
                {"block_slem", round_significant(r.block_slem)},
                {"numerical_only", r.numerical_only}};
}

json to_json(const EvenPolynomial& p) {
    return json{{"variable", "u=s^2"}, {"u_coefficients", p.u_coefficients()}, {"degree_s", p.degree_s()}};
}

std::string to_csv(const EvenPolynomial& p) {
    std::ostringstream out;
    const auto& c = p.u_coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (it != c.rbegin()) out << ',';
        out << *it;
    }
    return out.str();
}

json to_json(const OptimizationResult& r) {
    auto rounded = [](const std::vector<double>& v) {
        json a = json::array();
        for (double x : v) a.push_back(round_significant(x));
        return a;
    };
    json out{{"weights", rounded(r.weights.values)},
             {"slem", round_significant(r.achieved_slem)},
             {"evaluations", r.evaluations},
             {"converged", r.converged},
             {"seed", r.seed}};
    if (r.bridge_weight) {
        out["bridge_weight"] = round_significant(*r.bridge_weight);
        out["host_weights"] = rounded(r.host_weights);
        out["max_interior_error"] = round_significant(r.max_interior_error);
        out["interior_matches_analytic"] = r.interior_matches_analytic;
    }
    return out;
}

}  // namespace crnet
