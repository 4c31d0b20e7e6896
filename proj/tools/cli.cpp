#include "cli.hpp"

#include "crnet/charpoly.hpp"
#include "crnet/errors.hpp"
#include "crnet/json_io.hpp"
#include "crnet/optimizer.hpp"
#include "crnet/regression.hpp"
#include "crnet/simulator.hpp"
#include "crnet/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace crnet::cli {

namespace {

// Everything a run depends on; echoed into JSON outputs.
struct RunConfig {
    std::string command;
    std::string orders;
    std::string scheme = "optimal";
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int steps = 500;
    std::size_t budget = 20000;
    std::string host = "node";
    int attach = 0;
    std::string range = "m=3;inner=1..50";
    double init = 0.2;
    std::string out;
    std::string format;

    json to_json() const {
        return json{{"command", command}, {"orders", orders}, {"scheme", scheme}, {"tol", tol},
                    {"seed", seed},       {"steps", steps},   {"budget", budget}, {"host", host},
                    {"attach", attach},   {"range", range},   {"init", init},     {"format", format},
                    {"out", out}};
    }
};

std::string sig10(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fixed4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string quoted(const ChainSpec& spec) { return "\"" + spec.to_string() + "\""; }

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void text(const std::string& body) {
        if (cfg_.out.empty()) {
            out_ << body;
            return;
        }
        std::ofstream file(cfg_.out);
        if (!file) throw std::runtime_error("cannot open output file '" + cfg_.out + "'");
        file << body;
    }

    void json_doc(json doc) {
        doc["config"] = cfg_.to_json();
        text(doc.dump(2) + "\n");
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    const Topology t = build_chain(ChainSpec::parse(cfg.orders));
    Emitter(cfg, out).json_doc(json{{"topology", to_json(t)}, {"automorphism_check", automorphism_check(t)}});
    return kOk;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    const WeightMatrix w = scheme_matrix(spec, cfg.scheme);
    Emitter e(cfg, out);
    if (format_or(cfg, "json") == "csv") {
        e.text(to_csv(w));
    } else {
        e.json_doc(json{{"matrix", to_json(w)}});
    }
    return kOk;
}

int cmd_slem(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    SlemReport report;
    json weights_used;
    if (cfg.scheme == "optimal") {
        const OrbitWeights w = optimal_weights(spec);
        report = slem(spec, w, true, std::min(cfg.tol, 1e-10));
        weights_used = w.values;
    } else {
        const WeightMatrix w = scheme_matrix(spec, cfg.scheme);
        report = slem_of_matrix(w);
        weights_used = cfg.scheme;
    }
    Emitter e(cfg, out);
    if (format_or(cfg, "json") == "csv") {
        std::ostringstream s;
        s << "orders,scheme,slem,lambda2,lambda_min,attaining_source,numerical_only\n"
          << quoted(spec) << ',' << cfg.scheme << ',' << sig10(report.slem) << ',' << sig10(report.lambda2) << ','
          << sig10(report.lambda_min) << ',' << to_string(report.attaining_source) << ','
          << (report.numerical_only ? "true" : "false") << '\n';
        e.text(s.str());
    } else {
        json doc = to_json(report);
        doc["orders"] = spec.orders();
        doc["scheme"] = cfg.scheme;
        doc["weights"] = weights_used;
        e.json_doc(std::move(doc));
    }
    return kOk;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
    const auto rows = check_reference_table();
    const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const TableCheck& r) { return r.passes(); });
    const std::string format = format_or(cfg, "csv");
    std::ostringstream s;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"orders", r.spec.orders()},
                           {"slem_charpoly", round_significant(r.slem_charpoly)},
                           {"slem_eig", round_significant(r.slem_eig)},
                           {"table_value", r.table_value},
                           {"abs_err", round_significant(r.abs_err)},
                           {"source", to_string(r.source)},
                           {"pass", r.passes()}});
        }
        Emitter(cfg, out).json_doc(json{{"rows", arr}, {"all_pass", all_pass}});
    } else if (format == "table") {
        s << std::left << std::setw(14) << "orders" << std::setw(10) << "charpoly" << std::setw(10) << "dense"
          << std::setw(10) << "table" << std::setw(10) << "abs_err" << "status\n";
        for (const auto& r : rows) {
            s << std::left << std::setw(14) << r.spec.to_string() << std::setw(10) << fixed4(r.slem_charpoly)
              << std::setw(10) << fixed4(r.slem_eig) << std::setw(10) << fixed4(r.table_value) << std::setw(10)
              << fixed4(r.abs_err) << (r.passes() ? "ok" : "FAIL") << '\n';
        }
        Emitter(cfg, out).text(s.str());
    } else {
        s << "orders,slem_charpoly,slem_eig,table_value,abs_err,source,pass\n";
        for (const auto& r : rows) {
            s << quoted(r.spec) << ',' << sig10(r.slem_charpoly) << ',' << sig10(r.slem_eig) << ','
              << fixed4(r.table_value) << ',' << sig10(r.abs_err) << ',' << to_string(r.source) << ','
              << (r.passes() ? "true" : "false") << '\n';
        }
        Emitter(cfg, out).text(s.str());
    }
    return all_pass ? kOk : kRegression;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    const EvenPolynomial p = charpoly(spec);
    Emitter e(cfg, out);
    if (format_or(cfg, "csv") == "json") {
        json doc = to_json(p);
        doc["orders"] = spec.orders();
        doc["roots"] = charpoly_roots(p);
        e.json_doc(std::move(doc));
    } else {
        e.text(to_csv(p) + "\n");
    }
    return kOk;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    const Topology t = build_chain(spec);
    const OptimizationResult r =
        minimize_slem(t, OrbitWeights::uniform(static_cast<std::size_t>(spec.orbit_count()), cfg.init), cfg.budget,
                      cfg.tol, cfg.seed);
    json doc = to_json(r);
    doc["orders"] = spec.orders();
    json analytic = json::array();
    for (double x : optimal_weights(spec).values) analytic.push_back(round_significant(x));
    doc["analytic_weights"] = analytic;
    doc["analytic_slem"] = round_significant(slem(spec, optimal_weights(spec)).slem);
    Emitter(cfg, out).json_doc(std::move(doc));
    return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    const WeightMatrix w = scheme_matrix(spec, cfg.scheme);
    const IterationTrace trace = iterate(w, random_state(spec.node_count(), cfg.seed), cfg.steps);
    Emitter e(cfg, out);
    if (format_or(cfg, "json") == "csv") {
        e.text(trace_csv(trace));
        return kOk;
    }
    const int burn_in = default_burn_in(trace);
    const double analytic = cfg.scheme == "optimal" ? slem(spec, optimal_weights(spec)).slem : slem_of_matrix(w).slem;
    e.json_doc(json{{"orders", spec.orders()},
                    {"scheme", cfg.scheme},
                    {"steps", cfg.steps},
                    {"burn_in", burn_in},
                    {"usable_end", usable_end(trace)},
                    {"empirical_factor", round_significant(convergence_factor(trace, burn_in))},
                    {"analytic_slem", round_significant(analytic)},
                    {"initial_deviation", round_significant(trace.deviations.front())},
                    {"final_deviation", round_significant(trace.deviations.back())}});
    return kOk;
}

int cmd_branch(const RunConfig& cfg, std::ostream& out) {
    const ChainSpec spec = ChainSpec::parse(cfg.orders);
    const HostGraph host = HostGraph::parse(cfg.host);
    const OptimizationResult r = branch_bridge(spec, host, cfg.attach, cfg.budget, cfg.seed);
    json doc = to_json(r);
    doc["orders"] = spec.orders();
    doc["host_nodes"] = host.node_count;
    doc["host_edges"] = host.edges.size();
    Emitter(cfg, out).json_doc(std::move(doc));
    return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto rows = sweep(SweepRange::parse(cfg.range));
    const std::string format = format_or(cfg, "csv");
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"inner", r.inner},
                           {"orders", r.spec.orders()},
                           {"slem", round_significant(r.report.slem)},
                           {"slem_charpoly", round_significant(r.slem_charpoly)},
                           {"source", to_string(r.report.attaining_source)}});
        }
        Emitter(cfg, out).json_doc(json{{"rows", arr}});
        return kOk;
    }
    std::ostringstream s;
    s << "inner,orders,slem,slem_charpoly,source\n";
    for (const auto& r : rows) {
        const bool human = format == "table";
        s << r.inner << ',' << quoted(r.spec) << ',' << (human ? fixed4(r.report.slem) : sig10(r.report.slem)) << ','
          << (human ? fixed4(r.slem_charpoly) : sig10(r.slem_charpoly)) << ','
          << to_string(r.report.attaining_source) << '\n';
    }
    Emitter(cfg, out).text(s.str());
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chain-of-rhombus consensus networks: optimal weights, SLEM and simulation", "crnet"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::vector<std::string> schemes{"optimal", "max-degree", "metropolis"};
    const std::vector<std::string> formats{"json", "csv", "table"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    };
    auto add_orders = [&](CLI::App* sub) {
        sub->add_option("--orders", cfg.orders, "Rhombus orders, e.g. 3,2,4")->required();
    };

    auto* build = app.add_subcommand("build", "Export the chain topology as JSON");
    add_orders(build);
    add_common(build);

    auto* matrix = app.add_subcommand("matrix", "Export the weight matrix");
    add_orders(matrix);
    matrix->add_option("--scheme", cfg.scheme)->check(CLI::IsMember(schemes));
    add_common(matrix);

    auto* slem_cmd = app.add_subcommand("slem", "SLEM report for a chain");
    add_orders(slem_cmd);
    slem_cmd->add_option("--scheme", cfg.scheme)->check(CLI::IsMember(schemes));
    slem_cmd->add_option("--tol", cfg.tol);
    add_common(slem_cmd);

    auto* table1 = app.add_subcommand("table1", "Regression against the tabulated SLEM values");
    add_common(table1);

    auto* charpoly_cmd = app.add_subcommand("charpoly", "Recursion polynomial in u = s^2");
    add_orders(charpoly_cmd);
    add_common(charpoly_cmd);

    auto* optimize = app.add_subcommand("optimize", "Numerically minimise SLEM over orbit weights");
    add_orders(optimize);
    optimize->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
    optimize->add_option("--seed", cfg.seed);
    optimize->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber);
    optimize->add_option("--init", cfg.init, "Initial value for every orbit weight");
    add_common(optimize);

    auto* simulate = app.add_subcommand("simulate", "Run the consensus iteration");
    add_orders(simulate);
    simulate->add_option("--steps", cfg.steps)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", cfg.seed);
    simulate->add_option("--scheme", cfg.scheme)->check(CLI::IsMember(schemes));
    add_common(simulate);

    auto* branch = app.add_subcommand("branch", "Optimise a chain attached to a host network by a bridge");
    add_orders(branch);
    branch->add_option("--host", cfg.host, "node | triangle | random:<n>:<p>:<seed>");
    branch->add_option("--attach", cfg.attach, "Host node receiving the bridge");
    branch->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
    branch->add_option("--seed", cfg.seed);
    add_common(branch);

    auto* sweep_cmd = app.add_subcommand("sweep", "SLEM while growing the inner rhombuses");
    sweep_cmd->add_option("--orders-range", cfg.range, "m=<m>;inner=<a>..<b>[;outer=<n>]");
    add_common(sweep_cmd);

    if (std::find(args.begin(), args.end(), "--budget") == args.end()) {
        // branch optimisation has more variables; give it a larger default.
        for (const auto& a : args) {
            if (a == "branch") cfg.budget = 100000;
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    try {
        if (chosen == build) return cmd_build(cfg, out);
        if (chosen == matrix) return cmd_matrix(cfg, out);
        if (chosen == slem_cmd) return cmd_slem(cfg, out);
        if (chosen == table1) return cmd_table1(cfg, out);
        if (chosen == charpoly_cmd) return cmd_charpoly(cfg, out);
        if (chosen == optimize) return cmd_optimize(cfg, out);
        if (chosen == simulate) return cmd_simulate(cfg, out);
        if (chosen == branch) return cmd_branch(cfg, out);
        if (chosen == sweep_cmd) return cmd_sweep(cfg, out);
    } catch (const InvalidSpec& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidHost& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace crnet::cli
