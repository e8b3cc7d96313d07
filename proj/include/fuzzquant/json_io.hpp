#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "fuzzquant/linguistic.hpp"
#include "fuzzquant/qfm.hpp"
#include "fuzzquant/quantifiers.hpp"
#include "fuzzquant/summarizer.hpp"

namespace fq {

// Fuzzy numbers: {"kind":"trapezoid","a":..,"b":..,"c":..,"d":..},
// {"kind":"s","alpha":..,"gamma":..}, {"kind":"s_left","alpha":..,"gamma":..}.
nlohmann::json to_json(const FuzzyNumber& fn);
FuzzyNumber fuzzy_number_from_json(const nlohmann::json& j);

// Linguistic variables / partitions serialize as named lists of labels.
nlohmann::json to_json(const LinguisticVariable& lv);
LinguisticVariable variable_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProportionalPartition& pp);
ProportionalPartition partition_from_json(const nlohmann::json& j);

// Method descriptors: {"qfm":"md"}, {"qfm":"i"}, {"qfm":"a","strategy":"dp"},
// {"qfm":"a","strategy":"mc","samples":100000,"seed":42}.
nlohmann::json to_json(const FuzzificationMethod& method);
FuzzificationMethod method_from_json(const nlohmann::json& j);

// Quantifier descriptors: {"kind":"prop_binary","fn":{...}},
// {"kind":"rate","r1":..,"r2":..}, {"kind":"all"},
// {"kind":"at_least_pct","p":..}, etc. An "fn" field may be an inline fuzzy
// number or the name of one registered in `named_fns`.
SemiFuzzyQuantifier quantifier_from_json(const nlohmann::json& j,
                                         const std::map<std::string, FuzzyNumber>& named_fns,
                                         const std::string& name);

nlohmann::json to_json(const EvaluationMatrix& m);
nlohmann::json to_json(const SummaryStatement& s);
nlohmann::json to_json(const BestSingleResult& r);
nlohmann::json to_json(const RateSearchResult& r);

}  // namespace fq
