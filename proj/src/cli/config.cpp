#include "fuzzquant/cli/config.hpp"

#include <fstream>

#include "fuzzquant/errors.hpp"
#include "fuzzquant/json_io.hpp"

namespace fq::cli {

namespace {

using nlohmann::json;

std::string entry_name(const json& item, const char* section) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string())
        throw ArgumentError(std::string("config: every entry in '") + section +
                            "' needs a string 'name'");
    return item["name"].get<std::string>();
}

template <typename Map>
void check_fresh(const Map& map, const std::string& name, const char* section) {
    if (map.count(name))
        throw ArgumentError(std::string("config: duplicate name '") + name + "' in '" +
                            section + "'");
}

}  // namespace

const LinguisticVariable* Config::find_variable(const std::string& name) const {
    for (const auto& v : variables)
        if (v.name() == name) return &v;
    return nullptr;
}

const ProportionalPartition* Config::find_partition(const std::string& name) const {
    for (const auto& p : partitions)
        if (p.name() == name) return &p;
    return nullptr;
}

FuzzyNumber Config::resolve_label(const std::string& name) const {
    const auto it = fuzzy_numbers.find(name);
    if (it != fuzzy_numbers.end()) return it->second;

    const FuzzyNumber* found = nullptr;
    for (const auto& v : variables) {
        if (const LinguisticLabel* l = v.find(name)) {
            if (found)
                throw ArgumentError("label '" + name +
                                    "' is ambiguous across linguistic variables");
            found = &l->fn;
        }
    }
    if (!found) throw ArgumentError("unknown label '" + name + "'");
    return *found;
}

Config config_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: expected a JSON object");
    Config cfg;

    for (const auto& item : j.value("fuzzy_numbers", json::array())) {
        const std::string name = entry_name(item, "fuzzy_numbers");
        check_fresh(cfg.fuzzy_numbers, name, "fuzzy_numbers");
        if (!item.contains("fn"))
            throw ArgumentError("config: fuzzy number '" + name + "' needs an 'fn'");
        cfg.fuzzy_numbers.emplace(name, fuzzy_number_from_json(item["fn"]));
    }

    for (const auto& item : j.value("linguistic_variables", json::array())) {
        LinguisticVariable lv = variable_from_json(item);
        if (cfg.find_variable(lv.name()))
            throw ArgumentError("config: duplicate linguistic variable '" + lv.name() + "'");
        cfg.variables.push_back(std::move(lv));
    }

    for (const auto& item : j.value("partitions", json::array())) {
        ProportionalPartition pp = partition_from_json(item);
        if (cfg.find_partition(pp.name()))
            throw ArgumentError("config: duplicate partition '" + pp.name() + "'");
        cfg.partitions.push_back(std::move(pp));
    }

    for (const auto& item : j.value("quantifiers", json::array())) {
        const std::string name = entry_name(item, "quantifiers");
        check_fresh(cfg.quantifiers, name, "quantifiers");
        cfg.quantifiers.emplace(name, quantifier_from_json(item, cfg.fuzzy_numbers, name));
    }

    for (const auto& item : j.value("windows", json::array())) {
        const std::string name = entry_name(item, "windows");
        check_fresh(cfg.windows, name, "windows");
        if (!item.contains("fn"))
            throw ArgumentError("config: window '" + name + "' needs an 'fn'");
        cfg.windows.emplace(name, TemporalWindow(fuzzy_number_from_json(item["fn"])));
    }

    for (const auto& item : j.value("methods", json::array())) {
        const std::string name = entry_name(item, "methods");
        check_fresh(cfg.methods, name, "methods");
        cfg.methods.emplace(name, method_from_json(item));
    }

    if (j.contains("expressions")) {
        if (!j["expressions"].is_object())
            throw ArgumentError("config: 'expressions' must map names to expression text");
        for (const auto& [name, text] : j["expressions"].items()) {
            if (!text.is_string())
                throw ArgumentError("config: expression '" + name + "' must be a string");
            cfg.expressions.emplace(name, text.get<std::string>());
        }
    }

    for (const auto& item : j.value("derived_series", json::array())) {
        Config::DerivedSeries d;
        d.name = entry_name(item, "derived_series");
        if (!item.contains("source") || !item["source"].is_string())
            throw ArgumentError("config: derived series '" + d.name + "' needs a 'source'");
        d.source = item["source"].get<std::string>();
        d.transform = item.value("transform", std::string("pct_change"));
        if (d.transform != "pct_change")
            throw ArgumentError("config: derived series '" + d.name +
                                "': unknown transform '" + d.transform + "'");
        cfg.derived.push_back(std::move(d));
    }

    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ArgumentError("config '" + path + "': invalid JSON: " + e.what());
    }
    return config_from_json(j);
}

}  // namespace fq::cli
