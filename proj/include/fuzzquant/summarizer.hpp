#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzquant/linguistic.hpp"
#include "fuzzquant/qfm.hpp"
#include "fuzzquant/quantifiers.hpp"
#include "fuzzquant/sets.hpp"

namespace fq {

// Label x quantifier degree grid with provenance.
struct EvaluationMatrix {
    std::vector<std::string> row_labels;  // linguistic labels
    std::vector<std::string> col_labels;  // partition quantifiers, in order
    std::vector<std::vector<double>> cells;
    std::string method;   // fuzzification method label
    std::string data_id;  // source identifier

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
};

struct SummaryStatement {
    std::vector<std::string> quantifiers;  // one, or >= 2 consecutive when merged
    std::string label;
    double degree = 0.0;
    bool merged = false;

    // Member names joined with '+'.
    std::string quantifier_text() const;
};

struct CellRef {
    std::string quantifier;
    std::string label;
    double degree = 0.0;
};

struct BestSingleResult {
    bool adequate = false;
    CellRef best;                    // always the argmax cell
    std::optional<CellRef> runner_up;
};

// cell[j][i] = fuzzify(q_prop_unary(partition[i]), method) applied to the
// data fuzzified by variable label j.
EvaluationMatrix build_matrix(std::span<const double> values,
                              const LinguisticVariable& lv,
                              const ProportionalPartition& pp,
                              const FuzzificationMethod& method,
                              std::string data_id = "");

// Argmax cell if it reaches tau and beats the runner-up by at least margin;
// otherwise a none-adequate marker carrying the top two cells.
BestSingleResult best_single(const EvaluationMatrix& m, double tau, double margin);

struct GreedyParams {
    double tau = 0.5;
    bool suppress_bottom = true;
    bool merge = false;
    double tau_merge = 0.2;
};

// One statement per label (its maximal cell), filtered by tau and the
// bottom-quantifier suppression, optionally after merging consecutive
// quantifiers. Ordered by degree descending; ties prefer the stronger
// quantifier, then the earlier label.
std::vector<SummaryStatement> greedy_extract(const EvaluationMatrix& m,
                                             const GreedyParams& params);

// A contiguous span of partition columns [first, last] with its degree.
struct MergedCell {
    std::size_t first = 0;
    std::size_t last = 0;
    double degree = 0.0;

    bool merged() const { return last > first; }
};

// Replaces every maximal run of >= 2 consecutive cells with degree >=
// tau_merge by one cell whose degree is the clamped sum; other cells pass
// through unchanged.
std::vector<MergedCell> merge_adjacent(std::span<const double> row, double tau_merge);

// The disjunction of consecutive partition members as a unary proportional
// quantifier (membership = clamped sum of the member shapes).
SemiFuzzyQuantifier merged_partition_quantifier(const ProportionalPartition& pp,
                                                std::size_t first, std::size_t last);

struct RateSearchResult {
    double r1 = 0.0;
    double r2 = 0.0;
    double degree = 0.0;
    double step = 0.0;
    bool all_zero = false;  // every grid interval evaluated to 0
};

// Evaluates fuzzify(q_rate(h, h+delta_max), method) for h = 0, step, 2*step,
// ... <= 1-delta_max and returns the maximizer; ties break to the smallest h.
RateSearchResult rate_search(const FuzzySet& x1, const FuzzySet& x2,
                             double delta_max, double step,
                             const FuzzificationMethod& method);

}  // namespace fq
