#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzquant/linguistic.hpp"
#include "fuzzquant/qfm.hpp"
#include "fuzzquant/quantifiers.hpp"
#include "fuzzquant/temporal.hpp"

namespace fq::cli {

// One JSON document naming every fuzzy number, variable, partition,
// quantifier, window, method, derived series and expression a batch run may
// reference. Names are unique per namespace.
struct Config {
    struct DerivedSeries {
        std::string name;
        std::string source;
        std::string transform;  // "pct_change"
    };

    std::map<std::string, FuzzyNumber> fuzzy_numbers;
    std::vector<LinguisticVariable> variables;
    std::vector<ProportionalPartition> partitions;
    std::map<std::string, SemiFuzzyQuantifier> quantifiers;
    std::map<std::string, TemporalWindow> windows;
    std::map<std::string, FuzzificationMethod> methods;
    std::map<std::string, std::string> expressions;
    std::vector<DerivedSeries> derived;

    const LinguisticVariable* find_variable(const std::string& name) const;
    const ProportionalPartition* find_partition(const std::string& name) const;

    // A label reference resolves against named fuzzy numbers first, then
    // against the labels of the linguistic variables; ambiguous references
    // are an error.
    FuzzyNumber resolve_label(const std::string& name) const;
};

Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);

}  // namespace fq::cli
