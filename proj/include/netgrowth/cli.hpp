#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netgrowth/datasets.hpp"
#include "netgrowth/entropy.hpp"
#include "netgrowth/errors.hpp"
#include "netgrowth/graph.hpp"
#include "netgrowth/rates.hpp"
#include "netgrowth/reproduce.hpp"
#include "netgrowth/tablefmt.hpp"
#include "netgrowth/theorems.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace netgrowth::cli {

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "rate",      "error-table", "eta",       "eta-table", "innate",
        "swadesh",   "date-origin", "econ",      "longevity", "graph-metrics",
        "small-world", "ways",      "reproduce",
    };
    return names;
}

namespace detail {

struct CommonOpts {
    std::string format = "table";
    int digits = 4;
    std::string unit = "decade";
};

inline void add_common(CLI::App* cmd, CommonOpts& opts, bool with_unit = true) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--digits", opts.digits, "Significant digits for numbers")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    if (with_unit) {
        cmd->add_option("--unit", opts.unit, "Rate display unit")
            ->check(CLI::IsMember({"decade", "year", "millennium"}))
            ->capture_default_str();
    }
}

inline double rate_in_unit(RatePerDecade r, const std::string& unit) {
    if (unit == "year") return r.per_year();
    if (unit == "millennium") return r.per_millennium();
    return r.per_decade;
}

inline std::string rate_cell(RatePerDecade r, const CommonOpts& opts) {
    return format_number(rate_in_unit(r, opts.unit) * 100.0, opts.digits) + "% per " +
           opts.unit;
}

inline std::string num(double v, const CommonOpts& opts) {
    return format_number(v, opts.digits);
}

inline void emit(std::ostream& out, const TextTable& table, const CommonOpts& opts) {
    out << render(table, parse_output_format(opts.format));
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return in;
}

inline bool color_allowed(const std::ostream& out) {
#if defined(__unix__) || defined(__APPLE__)
    if (&out != &std::cout || std::getenv("NO_COLOR") != nullptr) {
        return false;
    }
    return isatty(fileno(stdout)) == 1;
#else
    (void)out;
    return false;
#endif
}

inline std::string status_cell(CheckStatus status, bool color) {
    const std::string text = to_string(status);
    if (!color) {
        return text;
    }
    switch (status) {
    case CheckStatus::pass:
        return "\033[32m" + text + "\033[0m";
    case CheckStatus::fail:
        return "\033[31m" + text + "\033[0m";
    case CheckStatus::paper_discrepancy:
        return "\033[33m" + text + "\033[0m";
    }
    return text;
}

// ---- command handlers -----------------------------------------------------

struct RateArgs {
    CommonOpts common;
    std::optional<double> t1, n1, t2, n2;
    std::optional<double> ratio, span_years;
    std::string input;
    std::optional<double> n0, rate, decades;
    std::string model = "continuous";
};

inline void run_rate(const RateArgs& a, std::ostream& out) {
    if (a.n0) {
        // Projection mode: accumulate a starting count forward.
        if (!a.rate || !a.decades) {
            throw UsageError("rate projection needs --n0, --rate and --decades");
        }
        const RatePerDecade r(*a.rate);
        double result = 0.0;
        if (a.model == "linear") {
            result = accumulate_linear(*a.n0, r, *a.decades);
        } else {
            const auto compounding =
                a.model == "discrete" ? Compounding::discrete : Compounding::continuous;
            result = accumulate_exponential(*a.n0, r, *a.decades, compounding);
        }
        TextTable t({"model", "n0", "rate", "decades", "projected"});
        t.add_row({a.model, num(*a.n0, a.common), rate_cell(r, a.common),
                   num(*a.decades, a.common), num(result, a.common)});
        emit(out, t, a.common);
        return;
    }
    if (!a.input.empty()) {
        auto file = open_input(a.input);
        const auto observations = load_series(file);
        const auto pairs = consecutive_pairs(observations);
        TextTable t({"t1", "n1", "t2", "n2", "rate"});
        for (const auto& p : pairs) {
            t.add_row({num(p.t1.value, a.common), num(p.n1, a.common),
                       num(p.t2.value, a.common), num(p.n2, a.common),
                       rate_cell(estimate_rate(p), a.common)});
        }
        emit(out, t, a.common);
        return;
    }
    if (a.ratio) {
        if (!a.span_years) {
            throw UsageError("rate from ratio needs --span-years");
        }
        TextTable t({"ratio", "span_years", "rate"});
        t.add_row({num(*a.ratio, a.common), num(*a.span_years, a.common),
                   rate_cell(rate_from_ratio(*a.ratio, *a.span_years), a.common)});
        emit(out, t, a.common);
        return;
    }
    if (a.t1 && a.n1 && a.t2 && a.n2) {
        const GrowthPair pair(YearCE(*a.t1), *a.n1, YearCE(*a.t2), *a.n2);
        TextTable t({"t1", "n1", "t2", "n2", "rate"});
        t.add_row({num(*a.t1, a.common), num(*a.n1, a.common), num(*a.t2, a.common),
                   num(*a.n2, a.common), rate_cell(estimate_rate(pair), a.common)});
        emit(out, t, a.common);
        return;
    }
    throw UsageError("rate: give --t1/--n1/--t2/--n2, --ratio/--span-years, --input,"
                     " or a projection (--n0 --rate --decades)");
}

struct ErrorTableArgs {
    CommonOpts common;
    double ratio_error = 0.10;
    std::vector<double> spans = {100, 332, 839, 3742};
    double rate = kCollectiveRateBaseline;
};

inline void run_error_table(const ErrorTableArgs& a, std::ostream& out) {
    const RatePerDecade r_act(a.rate);
    TextTable t({"span_years", "rate_error", "relative_error_pct"});
    for (const auto& row : error_table(a.ratio_error, a.spans, r_act)) {
        const auto detail = rate_error(a.ratio_error, row.span_years, r_act);
        t.add_row({num(row.span_years, a.common), rate_cell(detail.absolute, a.common),
                   num(row.relative_error * 100.0, a.common)});
    }
    emit(out, t, a.common);
}

struct EtaArgs {
    CommonOpts common;
    std::optional<double> n, s, c;
    bool isotropic = false;
    std::optional<double> bi_nodal_rate;
    bool full = false;
};

inline void run_eta(const EtaArgs& a, std::ostream& out) {
    if (!a.n) {
        throw UsageError("eta: --n is required");
    }
    TextTable t({"quantity", "value"});
    double s = 0.0;
    double eta = 0.0;
    if (a.isotropic) {
        eta = isotropic_entropy(*a.n).eta;
        s = std::exp(1.0);
        t.add_row({"eta (isotropic)", num(eta, a.common)});
    } else {
        if (!a.s || !a.c) {
            throw UsageError("eta: give --s and --c, or --isotropic");
        }
        s = *a.s;
        const NetworkMetrics m(*a.n, s, *a.c);
        eta = entropy(m).eta;
        t.add_row({"eta", num(eta, a.common)});
    }
    if (a.bi_nodal_rate) {
        t.add_row({"network rate", num(*a.bi_nodal_rate * eta, a.common)});
    }
    if (a.full) {
        t.add_row({"cluster generations", num(cluster_generations(*a.n, s), a.common)});
        t.add_row({"receive capacity d(eta)/dn",
                   num(receive_capacity_derivative(s, cluster_generations(*a.n, s)),
                       a.common)});
        t.add_row({"isotropy gap |S - e|", num(isotropy_gap(s), a.common)});
    }
    emit(out, t, a.common);
}

struct EtaTableArgs {
    CommonOpts common;
    std::string input;
    bool averages = false;
    std::string compare; // "key,key,...:key,key,..."
};

inline void run_eta_table(const EtaTableArgs& a, std::ostream& out) {
    const auto& reg = builtin_registry();
    if (!a.compare.empty()) {
        const auto colon = a.compare.find(':');
        if (colon == std::string::npos) {
            throw UsageError("eta-table --compare expects 'keys:keys'");
        }
        auto parse_group = [&](const std::string& csv) {
            std::vector<NetworkMetrics> group;
            std::istringstream stream(csv);
            std::string key;
            while (std::getline(stream, key, ',')) {
                group.push_back(reg.metrics(key));
            }
            return group;
        };
        const auto lhs = parse_group(a.compare.substr(0, colon));
        const auto rhs = parse_group(a.compare.substr(colon + 1));
        TextTable t({"group", "eta_product"});
        std::vector<double> lhs_etas, rhs_etas;
        for (const auto& m : lhs) lhs_etas.push_back(entropy(m).eta);
        for (const auto& m : rhs) rhs_etas.push_back(entropy(m).eta);
        t.add_row({"a", num(eta_product(lhs_etas), a.common)});
        t.add_row({"b", num(eta_product(rhs_etas), a.common)});
        t.add_row({"a / b", num(compare_eta_products(lhs, rhs), a.common)});
        emit(out, t, a.common);
        return;
    }
    if (a.averages) {
        TextTable t({"t1", "t2", "avg_eta_pop", "avg_eta_lex", "product"});
        for (const std::string start : {"1150", "1657"}) {
            const auto pop = average_eta(reg.metrics("network.pop" + start),
                                         reg.metrics("network.pop1989"));
            const auto lex = average_eta(reg.metrics("network.lex" + start),
                                         reg.metrics("network.lex1989"));
            t.add_row({start, "1989", num(pop.eta_avg, a.common),
                       num(lex.eta_avg, a.common),
                       num(pop.eta_avg * lex.eta_avg, a.common)});
        }
        emit(out, t, a.common);
        return;
    }
    std::vector<NetworkMetrics> rows;
    if (!a.input.empty()) {
        auto file = open_input(a.input);
        rows = load_metrics(file);
    } else {
        for (const char* name : {"actors", "celegans", "brain", "lex1989", "lex1150",
                                 "lex1657", "pop1989", "pop1150", "pop1657"}) {
            rows.push_back(reg.metrics(std::string("network.") + name));
        }
    }
    TextTable t({"label", "n", "S", "C", "eta"});
    for (const auto& m : rows) {
        t.add_row({m.label, num(m.n, a.common), num(m.path_length, a.common),
                   num(m.clustering, a.common), num(entropy(m).eta, a.common)});
    }
    emit(out, t, a.common);
}

struct InnateArgs {
    CommonOpts common;
    double rate = kCollectiveRateBaseline;
    std::optional<double> eta_pop, eta_ps;
    std::string period;
};

inline void run_innate(const InnateArgs& a, std::ostream& out) {
    double eta_pop = 0.0;
    double eta_ps = 0.0;
    if (!a.period.empty()) {
        const auto& reg = builtin_registry();
        eta_pop = average_eta(reg.metrics("network.pop" + a.period),
                              reg.metrics("network.pop1989"))
                      .eta_avg;
        eta_ps = average_eta(reg.metrics("network.lex" + a.period),
                             reg.metrics("network.lex1989"))
                     .eta_avg;
    } else if (a.eta_pop && a.eta_ps) {
        eta_pop = *a.eta_pop;
        eta_ps = *a.eta_ps;
    } else {
        throw UsageError("innate: give --eta-pop and --eta-ps, or --period 1150|1657");
    }
    const InnateRate m = innate_rate(RatePerDecade(a.rate), eta_pop, eta_ps);
    TextTable t({"collective_rate", "eta_pop_avg", "eta_ps_avg", "innate_rate"});
    t.add_row({rate_cell(RatePerDecade(a.rate), a.common), num(eta_pop, a.common),
               num(eta_ps, a.common),
               num(m.per_millennium * 100.0, a.common) + "% per millennium"});
    emit(out, t, a.common);
}

struct SwadeshArgs {
    CommonOpts common;
    double raw = 0.14;
    double original_age = 7037;
    double revised_age = 8700;
    std::optional<double> from_branch;
};

inline void run_swadesh(const SwadeshArgs& a, std::ostream& out) {
    if (a.from_branch) {
        TextTable t({"per_branch", "divergence"});
        t.add_row({num(*a.from_branch * 100.0, a.common) + "% per millennium",
                   num(divergence_from_branches(*a.from_branch) * 100.0, a.common) +
                       "% per millennium"});
        emit(out, t, a.common);
        return;
    }
    const auto rates = adjusted_swadesh(a.raw, a.original_age, a.revised_age);
    TextTable t({"raw", "adjusted", "per_branch"});
    auto pm = [&](double v) {
        return num(v * 100.0, a.common) + "% per millennium";
    };
    t.add_row({pm(rates.raw_per_millennium), pm(rates.adjusted_per_millennium),
               pm(rates.per_branch_per_millennium)});
    emit(out, t, a.common);
}

struct DateOriginArgs {
    CommonOpts common;
    double n_now = 0.0;
    double n_origin = 1.0;
    double t2 = 1989;
    double rate_per_millennium = 0.0566;
};

inline void run_date_origin(const DateOriginArgs& a, std::ostream& out) {
    const auto dated = date_origin(a.n_now, a.n_origin, YearCE(a.t2),
                                   InnateRate(a.rate_per_millennium));
    TextTable t({"n_now", "n_origin", "rate", "years_before_t2", "origin_year"});
    t.add_row({num(a.n_now, a.common), num(a.n_origin, a.common),
               num(a.rate_per_millennium * 100.0, a.common) + "% per millennium",
               num(dated.years_before_t2, a.common),
               num(dated.origin.value, a.common)});
    emit(out, t, a.common);
}

struct EconArgs {
    CommonOpts common;
    double rate = kCollectiveRateBaseline;
    double eta_pop_avg = 11.485141;
    double lp = 0.66;
    bool proportionality = false;
    std::optional<double> eta_pop, eta_ps;
};

inline void run_econ(const EconArgs& a, std::ostream& out) {
    if (a.proportionality) {
        if (!a.eta_pop || !a.eta_ps) {
            throw UsageError("econ --proportionality needs --eta-pop and --eta-ps");
        }
        TextTable t({"eta_pop", "eta_ps", "proportionality_index"});
        t.add_row({num(*a.eta_pop, a.common), num(*a.eta_ps, a.common),
                   num(productivity_proportionality(*a.eta_pop, *a.eta_ps), a.common)});
        emit(out, t, a.common);
        return;
    }
    const EconInputs inputs(RatePerDecade(a.rate), a.eta_pop_avg, a.lp);
    const auto growth = economic_growth(inputs);
    TextTable t({"individual_rate", "eta_pop_avg", "labor_participation",
                 "growth_per_decade", "growth_per_year"});
    t.add_row({rate_cell(RatePerDecade(a.rate), a.common), num(a.eta_pop_avg, a.common),
               num(a.lp, a.common), num(growth.per_decade * 100.0, a.common) + "%",
               num(growth.per_year * 100.0, a.common) + "%"});
    emit(out, t, a.common);
}

struct LongevityArgs {
    CommonOpts common;
    std::string input;
    double baseline = kCollectiveRateBaseline;
};

inline std::vector<LongevityRecord> load_longevity(std::istream& in) {
    std::vector<LongevityRecord> records;
    netgrowth::detail::for_each_data_line(
        in, ',', [&](int line_no, const std::vector<std::string>& fields, bool saw_data) {
            if (fields.size() != 5) {
                throw ParseError("longevity line " + std::to_string(line_no) +
                                 ": expected 5 columns label,t1,le1,t2,le2");
            }
            double t1 = 0.0, le1 = 0.0, t2 = 0.0, le2 = 0.0;
            if (!netgrowth::detail::parse_double(fields[1], t1) ||
                !netgrowth::detail::parse_double(fields[2], le1) ||
                !netgrowth::detail::parse_double(fields[3], t2) ||
                !netgrowth::detail::parse_double(fields[4], le2)) {
                if (!saw_data) {
                    return; // header row
                }
                throw ParseError("longevity line " + std::to_string(line_no) +
                                 ": expected numeric t1,le1,t2,le2");
            }
            try {
                records.emplace_back(fields[0], YearCE(t1), le1, YearCE(t2), le2);
            } catch (const Error& invariant) {
                throw ValidationError("longevity line " + std::to_string(line_no) + ": " +
                                      invariant.what());
            }
        });
    if (records.empty()) {
        throw ParseError("longevity: no numeric rows");
    }
    return records;
}

inline void run_longevity(const LongevityArgs& a, std::ostream& out) {
    std::vector<LongevityRecord> records;
    if (!a.input.empty()) {
        auto file = open_input(a.input);
        records = load_longevity(file);
    } else {
        const auto& reg = builtin_registry();
        for (const char* name : {"norway_f", "norway_m", "new_zealand_m", "denmark_m"}) {
            records.push_back(reg.longevity(std::string("longevity.") + name));
        }
    }
    TextTable t({"label", "rate", "excess_vs_baseline_pct"});
    for (const auto& row : longevity_rates(records, RatePerDecade(a.baseline))) {
        t.add_row({row.label, rate_cell(row.rate, a.common),
                   num(row.excess_vs_baseline * 100.0, a.common)});
    }
    emit(out, t, a.common);
}

struct GraphMetricsArgs {
    CommonOpts common;
    std::string input;
    bool largest_component = false;
    bool matrix = false;
    bool eta = false;
};

inline void run_graph_metrics(const GraphMetricsArgs& a, std::ostream& out) {
    auto file = open_input(a.input);
    const Graph g = read_edge_list(file);
    const auto mode = a.largest_component ? PathLengthMode::largest_component
                                          : PathLengthMode::strict;
    if (a.matrix) {
        const auto matrix = shortest_path_matrix(g);
        std::vector<std::string> header = {"node"};
        for (int v = 0; v < g.node_count(); ++v) {
            header.push_back(std::to_string(v));
        }
        TextTable t(header);
        for (int u = 0; u < g.node_count(); ++u) {
            std::vector<std::string> row = {std::to_string(u)};
            for (int v = 0; v < g.node_count(); ++v) {
                const int d = matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                row.push_back(d == kUnreachable ? "-" : std::to_string(d));
            }
            t.add_row(std::move(row));
        }
        emit(out, t, a.common);
        return;
    }
    const auto metrics = measure(g, mode);
    TextTable t = a.eta ? TextTable({"n", "edges", "path_length", "clustering", "eta"})
                        : TextTable({"n", "edges", "path_length", "clustering"});
    std::vector<std::string> row = {std::to_string(metrics.n),
                                    std::to_string(g.edges().size()),
                                    num(metrics.path_length, a.common),
                                    num(metrics.clustering, a.common)};
    if (a.eta) {
        const NetworkMetrics nm(static_cast<double>(metrics.n), metrics.path_length,
                                metrics.clustering);
        row.push_back(num(entropy(nm).eta, a.common));
    }
    t.add_row(std::move(row));
    emit(out, t, a.common);
}

struct SmallWorldArgs {
    CommonOpts common;
    int nodes = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
    bool metrics = false;
    bool print_edges = false;
};

inline void run_small_world(const SmallWorldArgs& a, std::ostream& out) {
    const Graph g = generate_small_world({a.nodes, a.k, a.p, a.seed});
    if (!a.out_path.empty()) {
        std::ofstream file(a.out_path);
        if (!file) {
            throw ParseError("cannot write '" + a.out_path + "'");
        }
        write_edge_list(file, g);
    }
    if (a.print_edges) {
        write_edge_list(out, g);
        return;
    }
    TextTable t = a.metrics
                      ? TextTable({"n", "k", "p", "seed", "edges", "path_length",
                                   "clustering"})
                      : TextTable({"n", "k", "p", "seed", "edges"});
    std::vector<std::string> row = {std::to_string(a.nodes), std::to_string(a.k),
                                    num(a.p, a.common), std::to_string(a.seed),
                                    std::to_string(g.edges().size())};
    if (a.metrics) {
        const auto m = measure(g, PathLengthMode::largest_component);
        row.push_back(num(m.path_length, a.common));
        row.push_back(num(m.clustering, a.common));
    }
    t.add_row(std::move(row));
    emit(out, t, a.common);
}

struct WaysArgs {
    CommonOpts common;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
};

inline void run_ways(const WaysArgs& a, std::ostream& out) {
    const auto count = distribution_count(a.n, a.r);
    TextTable t({"n", "r", "exact", "log_exact", "stirling_log", "relative_log_error"});
    t.add_row({std::to_string(a.n), std::to_string(a.r), count.exact.to_string(),
               num(count.log_exact, a.common), num(count.stirling_log, a.common),
               num(count.relative_log_error, a.common)});
    emit(out, t, a.common);
}

struct ReproduceArgs {
    CommonOpts common;
    bool all = false;
    std::string scope;
};

inline int run_reproduce(const ReproduceArgs& a, std::ostream& out) {
    ReproScope scope = ReproScope::all;
    if (!a.all) {
        if (a.scope.empty()) {
            throw UsageError("reproduce: give --all or --scope NAME");
        }
        try {
            scope = parse_repro_scope(a.scope);
        } catch (const ParseError& bad) {
            throw UsageError(bad.what());
        }
    }
    const ReproReport report = reproduce(scope);
    const bool color =
        color_allowed(out) && parse_output_format(a.common.format) == OutputFormat::table;
    TextTable t({"check", "computed", "expected", "tolerance", "status", "note"});
    for (const auto& c : report.checks) {
        t.add_row({c.id, num(c.computed, a.common), num(c.expected, a.common),
                   num(c.tolerance, a.common), status_cell(c.status, color), c.note});
    }
    emit(out, t, a.common);
    int pass = 0, fail = 0, discrepancy = 0;
    for (const auto& c : report.checks) {
        switch (c.status) {
        case CheckStatus::pass: ++pass; break;
        case CheckStatus::fail: ++fail; break;
        case CheckStatus::paper_discrepancy: ++discrepancy; break;
        }
    }
    if (parse_output_format(a.common.format) == OutputFormat::table) {
        out << pass << " pass, " << fail << " fail, " << discrepancy
            << " paper-discrepancy\n";
    }
    return report.any_fail() ? 3 : 0;
}

} // namespace detail

// Parses and runs one command line. argv[0] is the program name. Returns the
// process exit code: 0 success, 1 usage error, 2 data/validation error,
// 3 reproduction mismatch.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    using namespace detail;

    CLI::App app{"Growth-rate estimation and network-entropy toolkit"};
    app.require_subcommand(1);

    RateArgs rate_args;
    auto* rate_cmd = app.add_subcommand("rate", "Estimate or project growth rates");
    rate_cmd->add_option("--t1", rate_args.t1, "Earlier year");
    rate_cmd->add_option("--n1", rate_args.n1, "Count at t1");
    rate_cmd->add_option("--t2", rate_args.t2, "Later year");
    rate_cmd->add_option("--n2", rate_args.n2, "Count at t2");
    rate_cmd->add_option("--ratio", rate_args.ratio, "Growth ratio n2/n1");
    rate_cmd->add_option("--span-years", rate_args.span_years, "Span in years");
    rate_cmd->add_option("--input", rate_args.input, "Series file (year,count)");
    rate_cmd->add_option("--n0", rate_args.n0, "Projection: starting count");
    rate_cmd->add_option("--rate", rate_args.rate, "Projection: fraction per decade");
    rate_cmd->add_option("--decades", rate_args.decades, "Projection: decades forward");
    rate_cmd->add_option("--model", rate_args.model, "Projection model")
        ->check(CLI::IsMember({"linear", "discrete", "continuous"}))
        ->capture_default_str();
    add_common(rate_cmd, rate_args.common);

    ErrorTableArgs error_args;
    auto* error_cmd =
        app.add_subcommand("error-table", "Sensitivity of a rate estimate to count error");
    error_cmd->add_option("--ratio-error", error_args.ratio_error,
                          "Fractional error in the later count")
        ->capture_default_str();
    error_cmd->add_option("--spans", error_args.spans, "Spans in years")
        ->delimiter(',')
        ->capture_default_str();
    error_cmd->add_option("--rate", error_args.rate, "Actual rate, fraction per decade")
        ->capture_default_str();
    add_common(error_cmd, error_args.common);

    EtaArgs eta_args;
    auto* eta_cmd = app.add_subcommand("eta", "Network entropy C*log_S(n)");
    eta_cmd->add_option("--n", eta_args.n, "Node count");
    eta_cmd->add_option("--s", eta_args.s, "Path length S");
    eta_cmd->add_option("--c", eta_args.c, "Clustering coefficient C");
    eta_cmd->add_flag("--isotropic", eta_args.isotropic, "Use C=1, S=e");
    eta_cmd->add_option("--bi-nodal-rate", eta_args.bi_nodal_rate,
                        "Two-node rate to multiply by eta");
    eta_cmd->add_flag("--full", eta_args.full,
                      "Also print cluster generations, receive capacity and isotropy gap");
    add_common(eta_cmd, eta_args.common);

    EtaTableArgs eta_table_args;
    auto* eta_table_cmd =
        app.add_subcommand("eta-table", "Entropy table for stored or loaded networks");
    eta_table_cmd->add_option("--input", eta_table_args.input,
                              "Metrics file (label,n,S,C)");
    eta_table_cmd->add_flag("--averages", eta_table_args.averages,
                            "Period-averaged etas and their product");
    eta_table_cmd->add_option("--compare", eta_table_args.compare,
                              "Compare eta products: registry keys 'a,b:c,d'");
    add_common(eta_table_cmd, eta_table_args.common);

    InnateArgs innate_args;
    auto* innate_cmd =
        app.add_subcommand("innate", "Innate rate from collective rate and etas");
    innate_cmd->add_option("--rate", innate_args.rate, "Collective rate per decade")
        ->capture_default_str();
    innate_cmd->add_option("--eta-pop", innate_args.eta_pop, "Averaged population eta");
    innate_cmd->add_option("--eta-ps", innate_args.eta_ps, "Averaged solved-problem eta");
    innate_cmd->add_option("--period", innate_args.period,
                           "Use stored averages for a period")
        ->check(CLI::IsMember({"1150", "1657"}));
    add_common(innate_cmd, innate_args.common);

    SwadeshArgs swadesh_args;
    auto* swadesh_cmd =
        app.add_subcommand("swadesh", "Re-anchored lexical divergence rates");
    swadesh_cmd->add_option("--raw", swadesh_args.raw, "Raw divergence per millennium")
        ->capture_default_str();
    swadesh_cmd->add_option("--original-age", swadesh_args.original_age,
                            "Age the raw rate was anchored to, years")
        ->capture_default_str();
    swadesh_cmd->add_option("--revised-age", swadesh_args.revised_age,
                            "Revised age, years")
        ->capture_default_str();
    swadesh_cmd->add_option("--from-branch", swadesh_args.from_branch,
                            "Double a per-branch rate instead");
    add_common(swadesh_cmd, swadesh_args.common);

    DateOriginArgs date_args;
    auto* date_cmd =
        app.add_subcommand("date-origin", "Date a network's origin from its basal rate");
    date_cmd->add_option("--n-now", date_args.n_now, "Current node count")->required();
    date_cmd->add_option("--n-origin", date_args.n_origin, "Origin node count")
        ->capture_default_str();
    date_cmd->add_option("--t2", date_args.t2, "Reference year")->capture_default_str();
    date_cmd->add_option("--rate-per-millennium", date_args.rate_per_millennium,
                         "Basal rate, fraction per millennium")
        ->capture_default_str();
    add_common(date_cmd, date_args.common);

    EconArgs econ_args;
    auto* econ_cmd = app.add_subcommand("econ", "Economic productivity growth");
    econ_cmd->add_option("--rate", econ_args.rate, "Individual rate per decade")
        ->capture_default_str();
    econ_cmd->add_option("--eta-pop-avg", econ_args.eta_pop_avg,
                         "Averaged population eta")
        ->capture_default_str();
    econ_cmd->add_option("--lp", econ_args.lp, "Labor participation in (0,1]")
        ->capture_default_str();
    econ_cmd->add_flag("--proportionality", econ_args.proportionality,
                       "Compute eta_pop^2 * eta_ps instead");
    econ_cmd->add_option("--eta-pop", econ_args.eta_pop, "Population eta");
    econ_cmd->add_option("--eta-ps", econ_args.eta_ps, "Solved-problem eta");
    add_common(econ_cmd, econ_args.common);

    LongevityArgs longevity_args;
    auto* longevity_cmd =
        app.add_subcommand("longevity", "Life-expectancy growth rates vs baseline");
    longevity_cmd->add_option("--input", longevity_args.input,
                              "File with label,t1,le1,t2,le2 rows");
    longevity_cmd->add_option("--baseline", longevity_args.baseline,
                              "Baseline rate per decade")
        ->capture_default_str();
    add_common(longevity_cmd, longevity_args.common);

    GraphMetricsArgs graph_args;
    auto* graph_cmd =
        app.add_subcommand("graph-metrics", "Path length and clustering of a graph");
    graph_cmd->add_option("--input", graph_args.input, "Edge-list file")->required();
    graph_cmd->add_flag("--largest-component", graph_args.largest_component,
                        "Average within the largest component");
    graph_cmd->add_flag("--matrix", graph_args.matrix, "Print the hop-distance matrix");
    graph_cmd->add_flag("--eta", graph_args.eta, "Also compute the network entropy");
    add_common(graph_cmd, graph_args.common);

    SmallWorldArgs sw_args;
    auto* sw_cmd = app.add_subcommand("small-world", "Generate a small-world graph");
    sw_cmd->add_option("--nodes", sw_args.nodes, "Node count")->required();
    sw_cmd->add_option("--k", sw_args.k, "Ring-lattice neighbors (even)")->required();
    sw_cmd->add_option("--p", sw_args.p, "Rewiring probability")->capture_default_str();
    sw_cmd->add_option("--seed", sw_args.seed, "Generator seed")->capture_default_str();
    sw_cmd->add_option("--out", sw_args.out_path, "Write the edge list to a file");
    sw_cmd->add_flag("--metrics", sw_args.metrics, "Measure the generated graph");
    sw_cmd->add_flag("--print-edges", sw_args.print_edges,
                     "Print the edge list instead of a summary");
    add_common(sw_cmd, sw_args.common);

    WaysArgs ways_args;
    auto* ways_cmd =
        app.add_subcommand("ways", "Ways to distribute r units among n receivers");
    ways_cmd->add_option("--n", ways_args.n, "Receivers")->required();
    ways_cmd->add_option("--r", ways_args.r, "Units")->required();
    add_common(ways_cmd, ways_args.common);

    ReproduceArgs repro_args;
    auto* repro_cmd =
        app.add_subcommand("reproduce", "Recompute stored tables and diff them");
    repro_cmd->add_flag("--all", repro_args.all, "Run every scope");
    repro_cmd->add_option("--scope", repro_args.scope,
                          "One scope: table-1-1, table-116, table-2, table-3, table-4,"
                          " table-5, table-6, econ, swadesh");
    add_common(repro_cmd, repro_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rate_cmd->parsed()) {
            run_rate(rate_args, out);
        } else if (error_cmd->parsed()) {
            run_error_table(error_args, out);
        } else if (eta_cmd->parsed()) {
            run_eta(eta_args, out);
        } else if (eta_table_cmd->parsed()) {
            run_eta_table(eta_table_args, out);
        } else if (innate_cmd->parsed()) {
            run_innate(innate_args, out);
        } else if (swadesh_cmd->parsed()) {
            run_swadesh(swadesh_args, out);
        } else if (date_cmd->parsed()) {
            run_date_origin(date_args, out);
        } else if (econ_cmd->parsed()) {
            run_econ(econ_args, out);
        } else if (longevity_cmd->parsed()) {
            run_longevity(longevity_args, out);
        } else if (graph_cmd->parsed()) {
            run_graph_metrics(graph_args, out);
        } else if (sw_cmd->parsed()) {
            run_small_world(sw_args, out);
        } else if (ways_cmd->parsed()) {
            run_ways(ways_args, out);
        } else if (repro_cmd->parsed()) {
            return run_reproduce(repro_args, out);
        }
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    std::vector<std::string> full = {"netgrowth"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& arg : full) {
        argv.push_back(arg.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace netgrowth::cli
