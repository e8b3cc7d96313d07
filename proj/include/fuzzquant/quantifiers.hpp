#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "fuzzquant/fuzzy_number.hpp"
#include "fuzzquant/sets.hpp"

namespace fq {

// Declares which cardinality statistics fully determine a quantifier's value.
// The pair (primary, secondary) means:
//   AbsoluteIntersection       (|Y1 n ... n Yn|, unused)
//   ProportionalPair           (|Y1 n Y2|, |Y1|)
//   RestrictedProportionalPair (|T n Y1 n Y2|, |T n Y1|)
//   SimilarityPair             (|T n Y1 n Y2|, |T n (Y1 u Y2)|)
enum class SignatureKind {
    AbsoluteIntersection,
    ProportionalPair,
    RestrictedProportionalPair,
    SimilarityPair,
};

struct SignatureCounts {
    std::size_t primary = 0;
    std::size_t secondary = 0;
};

// Reduced map from the declared statistics (plus the base-set size) to [0,1].
using ReducedMap = std::function<double(SignatureCounts, std::size_t base_size)>;

struct CardinalitySignature {
    SignatureKind kind;
    ReducedMap reduced;
};

// The statistics declared by `kind`, computed from crisp arguments.
SignatureCounts signature_counts(SignatureKind kind, std::span<const CrispSet> args);

// n-ary map from crisp subsets of a shared base set into [0,1].
class SemiFuzzyQuantifier {
public:
    using EvalFn = std::function<double(std::span<const CrispSet>)>;

    SemiFuzzyQuantifier(std::string name, int arity, EvalFn eval,
                        std::optional<CardinalitySignature> signature = {});

    // Quantifier whose evaluation is derived from a reduced map; the declared
    // signature and the evaluation agree by construction.
    static SemiFuzzyQuantifier from_signature(std::string name, int arity,
                                              SignatureKind kind, ReducedMap reduced);

    // Validates arity and shared base set, then evaluates.
    double evaluate(std::span<const CrispSet> args) const;
    double operator()(std::initializer_list<CrispSet> args) const;

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    const std::optional<CardinalitySignature>& signature() const { return signature_; }

private:
    std::string name_;
    int arity_;
    EvalFn eval_;
    std::optional<CardinalitySignature> signature_;
};

// Quantifier families.

// all(Y1,Y2) = 1 iff Y1 is a subset of Y2.
SemiFuzzyQuantifier q_all();

// 1 if Y1 empty; else 1 iff |Y1 n Y2|/|Y1| >= p. Requires p in (0,1].
SemiFuzzyQuantifier q_at_least_pct(double p);

// fn(|Y1 n Y2|) — absolute quantity, e.g. "about 5".
SemiFuzzyQuantifier q_about_abs(FuzzyNumber fn);

// fn(|Y|/|E|) — unary proportional quantifier.
SemiFuzzyQuantifier q_prop_unary(FuzzyNumber fn);

// Unary proportional quantifier with an arbitrary ratio map (used for merged
// partition members); `ratio_map` must send [0,1] into [0,1].
SemiFuzzyQuantifier q_prop_unary_map(std::string name,
                                     std::function<double(double)> ratio_map);

// 1 if T empty; else fn(|T n Y|/|T|) — e.g. "most".
SemiFuzzyQuantifier q_prop_binary(FuzzyNumber fn);

// 1 if T n Y1 empty; else fn(|T n Y1 n Y2|/|T n Y1|).
SemiFuzzyQuantifier q_prop_ternary(FuzzyNumber fn);

// 1 if T n (Y1 u Y2) empty; else fn(|T n Y1 n Y2|/|T n (Y1 u Y2)|).
SemiFuzzyQuantifier q_similarity(FuzzyNumber fn);

// 1 iff Y1 nonempty and |Y1 n Y2|/|Y1| lies in the closed interval [r1,r2];
// 0 otherwise (in particular 0 on empty Y1). Requires 0 <= r1 <= r2 <= 1.
SemiFuzzyQuantifier q_rate(double r1, double r2);

}  // namespace fq
