#include "fuzzquant/json_io.hpp"

#include "fuzzquant/errors.hpp"

namespace fq {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number())
        throw ArgumentError(where + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

std::string require_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string())
        throw ArgumentError(where + ": missing string field '" + key + "'");
    return j[key].get<std::string>();
}

std::vector<LinguisticLabel> labels_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ArgumentError(where + ": 'labels' must be a list");
    std::vector<LinguisticLabel> labels;
    for (const auto& item : j) {
        const std::string name = require_string(item, "name", where);
        if (!item.contains("fn"))
            throw ArgumentError(where + ": label '" + name + "' needs an 'fn'");
        labels.push_back({name, fuzzy_number_from_json(item["fn"])});
    }
    return labels;
}

json labels_to_json(const std::vector<LinguisticLabel>& labels) {
    json out = json::array();
    for (const auto& l : labels) out.push_back({{"name", l.name}, {"fn", to_json(l.fn)}});
    return out;
}

}  // namespace

json to_json(const FuzzyNumber& fn) {
    switch (fn.kind()) {
        case FuzzyNumber::Kind::Trapezoid:
            return {{"kind", "trapezoid"}, {"a", fn.a()}, {"b", fn.b()}, {"c", fn.c()}, {"d", fn.d()}};
        case FuzzyNumber::Kind::SShape:
            return {{"kind", "s"}, {"alpha", fn.alpha()}, {"gamma", fn.gamma()}};
        case FuzzyNumber::Kind::LeftSShape:
            return {{"kind", "s_left"}, {"alpha", fn.alpha()}, {"gamma", fn.gamma()}};
    }
    throw ArgumentError("unknown fuzzy number kind");
}

FuzzyNumber fuzzy_number_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("fuzzy number: expected an object");
    const std::string kind = require_string(j, "kind", "fuzzy number");
    if (kind == "trapezoid")
        return FuzzyNumber::trapezoid(require_number(j, "a", "trapezoid"),
                                      require_number(j, "b", "trapezoid"),
                                      require_number(j, "c", "trapezoid"),
                                      require_number(j, "d", "trapezoid"));
    if (kind == "s")
        return FuzzyNumber::s_shape(require_number(j, "alpha", "s"),
                                    require_number(j, "gamma", "s"));
    if (kind == "s_left")
        return FuzzyNumber::left_s_shape(require_number(j, "alpha", "s_left"),
                                         require_number(j, "gamma", "s_left"));
    throw ArgumentError("fuzzy number: unknown kind '" + kind + "'");
}

json to_json(const LinguisticVariable& lv) {
    return {{"name", lv.name()},
            {"domain", {lv.lo(), lv.hi()}},
            {"labels", labels_to_json(lv.labels())}};
}

LinguisticVariable variable_from_json(const json& j) {
    const std::string name = require_string(j, "name", "linguistic variable");
    if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2)
        throw ArgumentError("linguistic variable '" + name + "': 'domain' must be [lo, hi]");
    const double lo = j["domain"][0].get<double>();
    const double hi = j["domain"][1].get<double>();
    return LinguisticVariable(name, lo, hi,
                              labels_from_json(j.value("labels", json::array()),
                                               "linguistic variable '" + name + "'"));
}

json to_json(const ProportionalPartition& pp) {
    return {{"name", pp.name()}, {"labels", labels_to_json(pp.members())}};
}

ProportionalPartition partition_from_json(const json& j) {
    const std::string name = require_string(j, "name", "partition");
    return ProportionalPartition(
        labels_from_json(j.value("labels", json::array()), "partition '" + name + "'"), name);
}

json to_json(const FuzzificationMethod& method) {
    using Model = FuzzificationMethod::Model;
    using AStrategy = FuzzificationMethod::AStrategy;
    switch (method.model) {
        case Model::MD:
            return {{"qfm", "md"}};
        case Model::I:
            return {{"qfm", "i"}};
        case Model::A:
            break;
    }
    switch (method.strategy) {
        case AStrategy::Exact:
            return {{"qfm", "a"}, {"strategy", "exact"}};
        case AStrategy::CardinalityDP: {
            json out = {{"qfm", "a"}, {"strategy", "dp"}};
            if (method.dp_trim) out["trim"] = true;
            return out;
        }
        case AStrategy::MonteCarlo:
            return {{"qfm", "a"},
                    {"strategy", "mc"},
                    {"samples", method.mc_samples},
                    {"seed", method.mc_seed}};
    }
    throw ArgumentError("unknown fuzzification method");
}

FuzzificationMethod method_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("method descriptor: expected an object");
    const std::string qfm = require_string(j, "qfm", "method descriptor");
    if (qfm == "md") return FuzzificationMethod::md();
    if (qfm == "i") return FuzzificationMethod::i();
    if (qfm != "a") throw ArgumentError("method descriptor: unknown qfm '" + qfm + "'");
    const std::string strategy = j.value("strategy", std::string("exact"));
    if (strategy == "exact") return FuzzificationMethod::a_exact();
    if (strategy == "dp") return FuzzificationMethod::a_dp(j.value("trim", false));
    if (strategy == "mc") {
        if (!j.contains("samples") || !j.contains("seed"))
            throw ArgumentError("method descriptor: mc needs 'samples' and 'seed'");
        return FuzzificationMethod::a_mc(j["samples"].get<std::uint64_t>(),
                                         j["seed"].get<std::uint64_t>());
    }
    throw ArgumentError("method descriptor: unknown strategy '" + strategy + "'");
}

SemiFuzzyQuantifier quantifier_from_json(const json& j,
                                         const std::map<std::string, FuzzyNumber>& named_fns,
                                         const std::string& name) {
    const std::string where = "quantifier '" + name + "'";
    if (!j.is_object()) throw ArgumentError(where + ": expected an object");
    const std::string kind = require_string(j, "kind", where);

    auto fn_field = [&]() -> FuzzyNumber {
        if (!j.contains("fn")) throw ArgumentError(where + ": needs an 'fn'");
        const auto& f = j["fn"];
        if (f.is_string()) {
            const auto it = named_fns.find(f.get<std::string>());
            if (it == named_fns.end())
                throw ArgumentError(where + ": unknown fuzzy number '" +
                                    f.get<std::string>() + "'");
            return it->second;
        }
        return fuzzy_number_from_json(f);
    };

    if (kind == "all") return q_all();
    if (kind == "at_least_pct") return q_at_least_pct(require_number(j, "p", where));
    if (kind == "about_abs") return q_about_abs(fn_field());
    if (kind == "prop_unary") return q_prop_unary(fn_field());
    if (kind == "prop_binary") return q_prop_binary(fn_field());
    if (kind == "prop_ternary") return q_prop_ternary(fn_field());
    if (kind == "similarity") return q_similarity(fn_field());
    if (kind == "rate")
        return q_rate(require_number(j, "r1", where), require_number(j, "r2", where));
    throw ArgumentError(where + ": unknown kind '" + kind + "'");
}

json to_json(const EvaluationMatrix& m) {
    json cells = json::array();
    for (const auto& row : m.cells) cells.push_back(row);
    return {{"rows", m.row_labels},
            {"cols", m.col_labels},
            {"cells", cells},
            {"method", m.method},
            {"data", m.data_id}};
}

json to_json(const SummaryStatement& s) {
    return {{"quantifier", s.quantifier_text()},
            {"label", s.label},
            {"degree", s.degree},
            {"merged", s.merged}};
}

json to_json(const BestSingleResult& r) {
    json cell = {{"quantifier", r.best.quantifier},
                 {"label", r.best.label},
                 {"degree", r.best.degree}};
    json out = {{"adequate", r.adequate}, {"best", cell}};
    if (r.runner_up)
        out["runner_up"] = {{"quantifier", r.runner_up->quantifier},
                            {"label", r.runner_up->label},
                            {"degree", r.runner_up->degree}};
    return out;
}

json to_json(const RateSearchResult& r) {
    return {{"r1", r.r1},
            {"r2", r.r2},
            {"degree", r.degree},
            {"step", r.step},
            {"all_zero", r.all_zero}};
}

}  // namespace fq
