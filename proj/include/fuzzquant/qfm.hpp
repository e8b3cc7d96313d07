#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "fuzzquant/quantifiers.hpp"
#include "fuzzquant/sets.hpp"

namespace fq {

// apply_a_exact enumerates 2^(n*|E|) crisp tuples; refuse beyond this many bits.
inline constexpr std::size_t kExactTermCapBits = 22;

// apply_i iterates the product of per-argument breakpoint grids; the paper's
// quantifiers are at most ternary.
inline constexpr int kLevelProductArityCap = 3;

// Probability below which dynamic-program states are dropped when trimming
// is requested.
inline constexpr double kDpTrimThreshold = 1e-15;

// Selects how a semi-fuzzy quantifier is turned into a fuzzy quantifier.
struct FuzzificationMethod {
    enum class Model { MD, I, A };
    enum class AStrategy { Exact, CardinalityDP, MonteCarlo };

    Model model = Model::MD;
    AStrategy strategy = AStrategy::Exact;  // meaningful when model == A
    std::uint64_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    bool dp_trim = false;

    static FuzzificationMethod md() { return {Model::MD, AStrategy::Exact, 0, 0, false}; }
    static FuzzificationMethod i() { return {Model::I, AStrategy::Exact, 0, 0, false}; }
    static FuzzificationMethod a_exact() { return {Model::A, AStrategy::Exact, 0, 0, false}; }
    static FuzzificationMethod a_dp(bool trim = false) {
        return {Model::A, AStrategy::CardinalityDP, 0, 0, trim};
    }
    static FuzzificationMethod a_mc(std::uint64_t samples, std::uint64_t seed);

    // Short human-readable descriptor, e.g. "md", "a/dp", "a/mc(100000,42)".
    std::string label() const;

    bool deterministic() const { return !(model == Model::A && strategy == AStrategy::MonteCarlo); }

    bool operator==(const FuzzificationMethod&) const = default;
};

// Level-set integral with one shared cut level across all arguments.
double apply_md(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args);

// Multi-level integral with one independent cut level per argument.
double apply_i(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args);

// Probability that independent Bernoulli draws with success probabilities
// mu_X produce exactly the crisp set y.
double representative_prob(const FuzzySet& x, const CrispSet& y);

// Expectation of Q over all crisp tuples weighted by representative
// probabilities. Requires n*|E| <= kExactTermCapBits.
double apply_a_exact(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args);

// Same expectation computed by a dynamic program over the quantifier's
// declared cardinality statistics. Requires a signature.
double apply_a_dp(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                  bool trim = false);

// Monte Carlo estimate of the same expectation; deterministic given the seed.
double apply_a_mc(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                  std::uint64_t samples, std::uint64_t seed);

// A semi-fuzzy quantifier together with a fuzzification method: callable on
// fuzzy arguments.
class FuzzifiedQuantifier {
public:
    FuzzifiedQuantifier(SemiFuzzyQuantifier q, FuzzificationMethod method);

    double operator()(std::span<const FuzzySet> args) const;
    double operator()(std::initializer_list<FuzzySet> args) const;

    const SemiFuzzyQuantifier& source() const { return q_; }
    const FuzzificationMethod& method() const { return method_; }

private:
    SemiFuzzyQuantifier q_;
    FuzzificationMethod method_;
};

FuzzifiedQuantifier fuzzify(SemiFuzzyQuantifier q, FuzzificationMethod method);

}  // namespace fq
