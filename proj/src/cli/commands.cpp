#include "fuzzquant/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzquant/errors.hpp"
#include "fuzzquant/json_io.hpp"
#include "fuzzquant/summarizer.hpp"

namespace fq::cli {

namespace {

using nlohmann::json;

// Display rounding: degrees print with 12 significant digits.
std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double sig12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string fmt_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct CommonOpts {
    std::string config_path;
    std::string data_path;
    std::string method = "md";
    std::string out = "-";
    std::string format = "json";
    std::string time_column;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file")->required();
    cmd->add_option("--data", opts.data_path, "input CSV file")->required();
    cmd->add_option("--method", opts.method,
                    "fuzzification method: inline JSON, a config name, or one of "
                    "md|i|a-exact|a-dp");
    cmd->add_option("--out", opts.out, "output path, '-' for stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--time", opts.time_column, "time column name (default: first column)");
}

FuzzificationMethod resolve_method(const std::string& text, const Config& cfg) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
    if (!t.empty() && t.front() == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw ArgumentError(std::string("--method: invalid JSON: ") + e.what());
        }
        return method_from_json(j);
    }
    if (t == "md") return FuzzificationMethod::md();
    if (t == "i") return FuzzificationMethod::i();
    if (t == "a-exact" || t == "a/exact") return FuzzificationMethod::a_exact();
    if (t == "a-dp" || t == "a/dp") return FuzzificationMethod::a_dp();
    const auto it = cfg.methods.find(t);
    if (it != cfg.methods.end()) return it->second;
    throw ArgumentError("--method: unknown method '" + t + "'");
}

std::string resolve_expression_text(const std::string& text, const Config& cfg) {
    const auto it = cfg.expressions.find(text);
    return it != cfg.expressions.end() ? it->second : text;
}

FuzzySignal signal_from_term(const ExprTerm& term, const Config& cfg,
                             const CsvTable& table) {
    const RawSeries& raw = table.at(term.series);
    if (term.label) return fuzzify_series(raw, cfg.resolve_label(*term.label));

    // Without a label the column must already hold memberships.
    std::vector<double> mu(raw.length(), 0.0);
    for (std::size_t i = 0; i < raw.length(); ++i) {
        if (raw.missing(i)) continue;
        const double v = raw.value(i);
        if (!(v >= 0.0 && v <= 1.0))
            throw DataError("series '" + term.series +
                            "' used without a label must hold memberships in [0,1]; got " +
                            fmt_full(v) + " at t=" +
                            std::to_string(raw.axis().start + static_cast<std::int64_t>(i)));
        mu[i] = v;
    }
    return FuzzySignal(raw.axis(), std::move(mu), raw.missing_flags());
}

struct EvalOutcome {
    double degree;
    bool boundary;
};

// Whole-set mode: the quantifier's temporal restriction is the entire axis.
EvalOutcome evaluate_whole_axis(const BoundExpression& be) {
    const TimeAxis& axis = be.signals[0].signal.axis();
    const auto base = BaseSet::indexed(axis.length);
    bool boundary = false;

    std::vector<FuzzySet> args;
    args.reserve(1 + be.signals.size());
    args.emplace_back(base, std::vector<double>(axis.length, 1.0));
    for (const auto& term : be.signals) {
        const FuzzySignal sig = term.displacement == 0
                                    ? term.signal
                                    : displace_signal(term.signal, term.displacement);
        std::vector<double> mu(axis.length, 0.0);
        for (std::size_t i = 0; i < axis.length; ++i) {
            if (sig.missing(i))
                boundary = true;
            else
                mu[i] = sig.mu(i);
        }
        args.emplace_back(base, std::move(mu));
    }
    return {be.fq(args), boundary};
}

void write_payload(const CommonOpts& opts, const std::string& payload, std::ostream& out) {
    if (opts.out == "-") {
        out << payload;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw DataError("cannot open output file '" + opts.out + "'");
    f << payload;
    if (!f) throw DataError("failed writing output file '" + opts.out + "'");
}

struct LoadedRun {
    Config config;
    CsvTable table;
    FuzzificationMethod method;
};

LoadedRun load_run(const CommonOpts& opts) {
    LoadedRun run{load_config(opts.config_path), {}, {}};
    run.table = load_csv(opts.data_path, opts.time_column);
    apply_derived_series(run.table, run.config);
    run.method = resolve_method(opts.method, run.config);
    return run;
}

// ---- eval ----

struct EvalOpts {
    CommonOpts common;
    std::string expr;
    std::optional<std::int64_t> at;
};

std::string do_eval(const EvalOpts& opts) {
    LoadedRun run = load_run(opts.common);
    const ExpressionAst ast = parse_expression(resolve_expression_text(opts.expr, run.config));
    const BoundExpression bound = bind_expression(ast, run.config, run.table, run.method);

    EvalOutcome outcome{};
    if (bound.window) {
        if (!opts.at)
            throw ArgumentError("eval needs --at <instant> unless the expression window is '" +
                                std::string(kWholeAxisWindow) + "'");
        const std::int64_t at = *opts.at;
        const auto points =
            sliding_evaluate(bound.fq, *bound.window, bound.signals, std::span(&at, 1));
        outcome = {points[0].degree, points[0].boundary};
    } else {
        outcome = evaluate_whole_axis(bound);
    }

    if (opts.common.format == "csv") {
        std::string s = "degree,boundary\n";
        s += fmt_full(outcome.degree);
        s += outcome.boundary ? ",1\n" : ",0\n";
        return s;
    }
    json j = {{"command", "eval"},
              {"expr", to_text(ast)},
              {"method", to_json(run.method)},
              {"degree", outcome.degree},
              {"boundary", outcome.boundary}};
    return j.dump(2) + "\n";
}

// ---- slide ----

struct SlideOpts {
    CommonOpts common;
    std::string expr;
    std::optional<double> theta;
    std::optional<std::int64_t> from;
    std::optional<std::int64_t> to;
};

std::string do_slide(const SlideOpts& opts) {
    LoadedRun run = load_run(opts.common);
    const ExpressionAst ast = parse_expression(resolve_expression_text(opts.expr, run.config));
    const BoundExpression bound = bind_expression(ast, run.config, run.table, run.method);
    if (!bound.window)
        throw ArgumentError("slide needs a bounded window; '" +
                            std::string(kWholeAxisWindow) + "' applies only to eval");

    const TimeAxis& axis = run.table.axis;
    const std::int64_t from = opts.from.value_or(axis.start);
    const std::int64_t to = opts.to.value_or(axis.end());
    std::vector<std::int64_t> instants;
    for (std::int64_t t = from; t <= to; ++t) instants.push_back(t);

    const auto points = sliding_evaluate(bound.fq, *bound.window, bound.signals, instants);
    std::optional<BinaryObservableSeries> obs;
    if (opts.theta) obs = threshold_observable(points, *opts.theta);

    if (opts.common.format == "csv") {
        std::string s = opts.theta ? "t,degree,boundary,above\n" : "t,degree,boundary\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            s += std::to_string(points[i].t);
            s += ',';
            s += fmt12(points[i].degree);
            s += points[i].boundary ? ",1" : ",0";
            if (obs) s += obs->flags[i] ? ",1" : ",0";
            s += '\n';
        }
        return s;
    }
    json pts = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        json p = {{"t", points[i].t},
                  {"degree", sig12(points[i].degree)},
                  {"boundary", points[i].boundary}};
        if (obs) p["above"] = static_cast<bool>(obs->flags[i]);
        pts.push_back(std::move(p));
    }
    json j = {{"command", "slide"},
              {"expr", to_text(ast)},
              {"method", to_json(run.method)},
              {"points", pts}};
    if (opts.theta) j["theta"] = *opts.theta;
    return j.dump(2) + "\n";
}

// ---- summarize ----

struct SummarizeOpts {
    CommonOpts common;
    std::string column;
    std::string variable;
    std::string partition;
    double tau = 0.5;
    double margin = 0.1;
    bool merge = false;
    double tau_merge = 0.2;
    bool no_suppress_bottom = false;
    bool best_only = false;
};

json matrix_to_display_json(const EvaluationMatrix& m) {
    EvaluationMatrix rounded = m;
    for (auto& row : rounded.cells)
        for (auto& cell : row) cell = sig12(cell);
    return to_json(rounded);
}

std::string do_summarize(const SummarizeOpts& opts) {
    LoadedRun run = load_run(opts.common);

    const LinguisticVariable* lv = run.config.find_variable(opts.variable);
    if (!lv) throw ArgumentError("unknown linguistic variable '" + opts.variable + "'");
    const ProportionalPartition* pp = run.config.find_partition(opts.partition);
    if (!pp) throw ArgumentError("unknown partition '" + opts.partition + "'");

    const RawSeries& raw = run.table.at(opts.column);
    std::vector<double> values;
    values.reserve(raw.length());
    for (std::size_t i = 0; i < raw.length(); ++i)
        if (!raw.missing(i)) values.push_back(raw.value(i));
    if (values.empty())
        throw DataError("column '" + opts.column + "' has no usable values");

    const EvaluationMatrix matrix = build_matrix(
        values, *lv, *pp, run.method, opts.common.data_path + ":" + opts.column);

    if (opts.best_only) {
        BestSingleResult best = best_single(matrix, opts.tau, opts.margin);
        best.best.degree = sig12(best.best.degree);
        if (best.runner_up) best.runner_up->degree = sig12(best.runner_up->degree);
        if (opts.common.format == "csv") {
            std::string s = "adequate,quantifier,label,degree\n";
            s += best.adequate ? "1," : "0,";
            s += best.best.quantifier + "," + best.best.label + "," + fmt12(best.best.degree) +
                 "\n";
            return s;
        }
        json j = {{"command", "summarize"},
                  {"matrix", matrix_to_display_json(matrix)},
                  {"best", to_json(best)}};
        return j.dump(2) + "\n";
    }

    GreedyParams params;
    params.tau = opts.tau;
    params.suppress_bottom = !opts.no_suppress_bottom;
    params.merge = opts.merge;
    params.tau_merge = opts.tau_merge;
    auto statements = greedy_extract(matrix, params);
    for (auto& s : statements) s.degree = sig12(s.degree);

    if (opts.common.format == "csv") {
        std::string s = "quantifier,label,degree,merged\n";
        for (const auto& st : statements) {
            s += st.quantifier_text() + "," + st.label + "," + fmt12(st.degree);
            s += st.merged ? ",1\n" : ",0\n";
        }
        return s;
    }
    json stmts = json::array();
    for (const auto& st : statements) stmts.push_back(to_json(st));
    json j = {{"command", "summarize"},
              {"matrix", matrix_to_display_json(matrix)},
              {"summary", stmts}};
    return j.dump(2) + "\n";
}

// ---- rate-search ----

struct RateOpts {
    CommonOpts common;
    std::string x1;
    std::string x2;
    double delta_max = 0.2;
    double step = 0.025;
};

FuzzySet restricted_fuzzy_set(const ExprTerm& term, const Config& cfg, const RawSeries& raw,
                              const std::vector<std::size_t>& keep, const BasePtr& base) {
    std::vector<double> mu;
    mu.reserve(keep.size());
    if (term.label) {
        const FuzzyNumber fn = cfg.resolve_label(*term.label);
        for (std::size_t i : keep) mu.push_back(fn(raw.value(i)));
    } else {
        for (std::size_t i : keep) {
            const double v = raw.value(i);
            if (!(v >= 0.0 && v <= 1.0))
                throw DataError("series '" + term.series +
                                "' used without a label must hold memberships in [0,1]");
            mu.push_back(v);
        }
    }
    return FuzzySet(base, std::move(mu));
}

std::string do_rate_search(const RateOpts& opts) {
    LoadedRun run = load_run(opts.common);

    const ExprTerm t1 = parse_term(opts.x1);
    const ExprTerm t2 = parse_term(opts.x2);
    if (t1.shift || t2.shift)
        throw ArgumentError("rate-search bindings do not accept 'shift'");

    const RawSeries& raw1 = run.table.at(t1.series);
    const RawSeries& raw2 = run.table.at(t2.series);

    // Shared base: the instants where both columns are present.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < raw1.length(); ++i)
        if (!raw1.missing(i) && !raw2.missing(i)) keep.push_back(i);
    if (keep.empty()) throw DataError("no instants where both columns are present");

    const auto base = BaseSet::indexed(keep.size());
    const FuzzySet x1 = restricted_fuzzy_set(t1, run.config, raw1, keep, base);
    const FuzzySet x2 = restricted_fuzzy_set(t2, run.config, raw2, keep, base);

    RateSearchResult result = rate_search(x1, x2, opts.delta_max, opts.step, run.method);
    result.r1 = sig12(result.r1);
    result.r2 = sig12(result.r2);
    result.degree = sig12(result.degree);

    if (opts.common.format == "csv") {
        std::string s = "r1,r2,degree,step,all_zero\n";
        s += fmt12(result.r1) + "," + fmt12(result.r2) + "," + fmt12(result.degree) + "," +
             fmt12(result.step) + (result.all_zero ? ",1\n" : ",0\n");
        return s;
    }
    json j = {{"command", "rate-search"},
              {"method", to_json(run.method)},
              {"result", to_json(result)}};
    return j.dump(2) + "\n";
}

}  // namespace

void apply_derived_series(CsvTable& table, const Config& config) {
    for (const auto& d : config.derived) {
        if (table.has(d.name))
            throw ArgumentError("derived series '" + d.name + "' collides with a CSV column");
        const RawSeries& src = table.at(d.source);
        table.series.emplace(d.name, pct_change(src));
        table.columns.push_back(d.name);
    }
}

BoundExpression bind_expression(const ExpressionAst& ast, const Config& config,
                                const CsvTable& table, const FuzzificationMethod& method) {
    const auto qit = config.quantifiers.find(ast.quantifier);
    if (qit == config.quantifiers.end())
        throw ArgumentError("unknown quantifier '" + ast.quantifier + "'");
    const SemiFuzzyQuantifier& q = qit->second;

    if (q.arity() != 1 + static_cast<int>(ast.terms.size()))
        throw ArgumentError("quantifier '" + ast.quantifier + "' has arity " +
                            std::to_string(q.arity()) + " but the expression supplies " +
                            std::to_string(1 + ast.terms.size()) +
                            " arguments (window + terms)");

    std::optional<TemporalWindow> window;
    if (ast.window != kWholeAxisWindow) {
        const auto wit = config.windows.find(ast.window);
        if (wit == config.windows.end())
            throw ArgumentError("unknown window '" + ast.window + "'");
        window = wit->second;
    }

    std::vector<SignalTerm> signals;
    signals.reserve(ast.terms.size());
    for (const auto& term : ast.terms)
        signals.push_back({signal_from_term(term, config, table), term.shift.value_or(0)});

    return {fuzzify(q, method), std::move(window), std::move(signals)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantified linguistic patterns over finite data and time series"};
    app.name("fq");
    app.require_subcommand(1);

    EvalOpts eval_opts;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantified statement");
    add_common_options(eval_cmd, eval_opts.common);
    eval_cmd->add_option("--expr", eval_opts.expr, "expression text or config name")->required();
    std::int64_t eval_at = 0;
    auto* eval_at_opt = eval_cmd->add_option("--at", eval_at, "instant to evaluate at");

    SlideOpts slide_opts;
    auto* slide_cmd = app.add_subcommand("slide", "slide a quantified pattern over the axis");
    add_common_options(slide_cmd, slide_opts.common);
    slide_cmd->add_option("--expr", slide_opts.expr, "expression text or config name")
        ->required();
    double slide_theta = 0.0;
    auto* theta_opt = slide_cmd->add_option("--theta", slide_theta,
                                            "threshold for the binary observable column");
    std::int64_t slide_from = 0, slide_to = 0;
    auto* from_opt = slide_cmd->add_option("--from", slide_from, "first instant");
    auto* to_opt = slide_cmd->add_option("--to", slide_to, "last instant");

    SummarizeOpts sum_opts;
    auto* sum_cmd = app.add_subcommand("summarize", "label/quantifier evaluation matrix and summary");
    add_common_options(sum_cmd, sum_opts.common);
    sum_cmd->add_option("--column", sum_opts.column, "CSV column to summarize")->required();
    sum_cmd->add_option("--variable", sum_opts.variable, "linguistic variable name")->required();
    sum_cmd->add_option("--partition", sum_opts.partition, "quantifier partition name")
        ->required();
    sum_cmd->add_option("--tau", sum_opts.tau, "minimum degree to report");
    sum_cmd->add_option("--margin", sum_opts.margin, "best-single lead over the runner-up");
    sum_cmd->add_flag("--merge", sum_opts.merge, "merge consecutive quantifiers");
    sum_cmd->add_option("--tau-merge", sum_opts.tau_merge, "merge threshold");
    sum_cmd->add_flag("--no-suppress-bottom", sum_opts.no_suppress_bottom,
                      "keep statements using the bottom quantifier");
    sum_cmd->add_flag("--best-only", sum_opts.best_only, "report only the best single cell");

    RateOpts rate_opts;
    auto* rate_cmd = app.add_subcommand("rate-search", "optimal rate quantifier grid search");
    add_common_options(rate_cmd, rate_opts.common);
    rate_cmd->add_option("--x1", rate_opts.x1, "restriction binding, e.g. \"temp is hot\"")
        ->required();
    rate_cmd->add_option("--x2", rate_opts.x2, "scope binding, e.g. \"humidity is high\"")
        ->required();
    rate_cmd->add_option("--delta-max", rate_opts.delta_max, "maximum interval width");
    rate_cmd->add_option("--step", rate_opts.step, "grid step");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::string payload;
        const CommonOpts* common = nullptr;
        if (eval_cmd->parsed()) {
            if (eval_at_opt->count()) eval_opts.at = eval_at;
            payload = do_eval(eval_opts);
            common = &eval_opts.common;
        } else if (slide_cmd->parsed()) {
            if (theta_opt->count()) slide_opts.theta = slide_theta;
            if (from_opt->count()) slide_opts.from = slide_from;
            if (to_opt->count()) slide_opts.to = slide_to;
            payload = do_slide(slide_opts);
            common = &slide_opts.common;
        } else if (sum_cmd->parsed()) {
            payload = do_summarize(sum_opts);
            common = &sum_opts.common;
        } else if (rate_cmd->parsed()) {
            payload = do_rate_search(rate_opts);
            common = &rate_opts.common;
        }
        write_payload(*common, payload, out);
        return kExitOk;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fq::cli
