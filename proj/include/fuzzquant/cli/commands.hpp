#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzquant/cli/config.hpp"
#include "fuzzquant/cli/csv.hpp"
#include "fuzzquant/cli/expression.hpp"
#include "fuzzquant/qfm.hpp"
#include "fuzzquant/temporal.hpp"

namespace fq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitCap = 4;

// The reserved window name binding to the whole time axis.
inline constexpr const char* kWholeAxisWindow = "all";

// An expression resolved against config and data, ready to evaluate.
struct BoundExpression {
    FuzzifiedQuantifier fq;
    std::optional<TemporalWindow> window;  // nullopt: whole-axis window "all"
    std::vector<SignalTerm> signals;
};

// Adds the config's derived series (e.g. pct_change) to the table.
void apply_derived_series(CsvTable& table, const Config& config);

BoundExpression bind_expression(const ExpressionAst& ast, const Config& config,
                                const CsvTable& table,
                                const FuzzificationMethod& method);

// Entry point used by main(); results go to --out (default stdout via `out`),
// diagnostics to `err`. Returns one of the kExit* codes. Error paths write
// nothing to the result sink.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fq::cli
