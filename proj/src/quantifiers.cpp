#include "fuzzquant/quantifiers.hpp"

#include <cstdio>
#include <utility>

#include "fuzzquant/errors.hpp"

namespace fq {

namespace {

int signature_arity(SignatureKind kind, int declared) {
    switch (kind) {
        case SignatureKind::AbsoluteIntersection:
            return declared;  // any arity >= 1
        case SignatureKind::ProportionalPair:
            return 2;
        case SignatureKind::RestrictedProportionalPair:
        case SignatureKind::SimilarityPair:
            return 3;
    }
    return declared;
}

std::string format_pct(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p * 100.0);
    return buf;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

SignatureCounts signature_counts(SignatureKind kind, std::span<const CrispSet> args) {
    SignatureCounts counts;
    const std::size_t n = args.empty() ? 0 : args[0].size();
    switch (kind) {
        case SignatureKind::AbsoluteIntersection:
            for (std::size_t e = 0; e < n; ++e) {
                bool in_all = true;
                for (const auto& y : args)
                    if (!y.contains(e)) {
                        in_all = false;
                        break;
                    }
                counts.primary += in_all;
            }
            break;
        case SignatureKind::ProportionalPair:
            for (std::size_t e = 0; e < n; ++e) {
                if (!args[0].contains(e)) continue;
                ++counts.secondary;
                counts.primary += args[1].contains(e);
            }
            break;
        case SignatureKind::RestrictedProportionalPair:
            for (std::size_t e = 0; e < n; ++e) {
                if (!(args[0].contains(e) && args[1].contains(e))) continue;
                ++counts.secondary;
                counts.primary += args[2].contains(e);
            }
            break;
        case SignatureKind::SimilarityPair:
            for (std::size_t e = 0; e < n; ++e) {
                if (!args[0].contains(e)) continue;
                const bool y1 = args[1].contains(e), y2 = args[2].contains(e);
                counts.secondary += y1 || y2;
                counts.primary += y1 && y2;
            }
            break;
    }
    return counts;
}

SemiFuzzyQuantifier::SemiFuzzyQuantifier(std::string name, int arity, EvalFn eval,
                                         std::optional<CardinalitySignature> signature)
    : name_(std::move(name)), arity_(arity), eval_(std::move(eval)),
      signature_(std::move(signature)) {
    if (arity_ < 1) throw ArgumentError("quantifier arity must be at least 1");
    if (!eval_) throw ArgumentError("quantifier needs an evaluation function");
    if (signature_ && signature_arity(signature_->kind, arity_) != arity_)
        throw ArgumentError("cardinality signature does not match the quantifier arity");
}

SemiFuzzyQuantifier SemiFuzzyQuantifier::from_signature(std::string name, int arity,
                                                        SignatureKind kind,
                                                        ReducedMap reduced) {
    if (!reduced) throw ArgumentError("signature registration needs a reduced map");
    if (signature_arity(kind, arity) != arity)
        throw ArgumentError("cardinality signature does not match the quantifier arity");
    auto eval = [kind, reduced](std::span<const CrispSet> args) {
        return reduced(signature_counts(kind, args), args[0].size());
    };
    return SemiFuzzyQuantifier(std::move(name), arity, std::move(eval),
                               CardinalitySignature{kind, std::move(reduced)});
}

double SemiFuzzyQuantifier::evaluate(std::span<const CrispSet> args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ArgumentError("quantifier '" + name_ + "' expects " + std::to_string(arity_) +
                            " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 1; i < args.size(); ++i)
        if (!same_base(args[0].base(), args[i].base()))
            throw ArgumentError("quantifier arguments must share one base set");
    if (args[0].size() == 0)
        throw ArgumentError("quantifiers are defined over nonempty base sets");
    return eval_(args);
}

double SemiFuzzyQuantifier::operator()(std::initializer_list<CrispSet> args) const {
    return evaluate(std::span<const CrispSet>(args.begin(), args.size()));
}

SemiFuzzyQuantifier q_all() {
    return SemiFuzzyQuantifier::from_signature(
        "all", 2, SignatureKind::ProportionalPair,
        [](SignatureCounts c, std::size_t) { return c.primary == c.secondary ? 1.0 : 0.0; });
}

SemiFuzzyQuantifier q_at_least_pct(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw ArgumentError("at_least proportion must lie in (0,1]");
    return SemiFuzzyQuantifier::from_signature(
        "at_least_" + format_pct(p) + "%", 2, SignatureKind::ProportionalPair,
        [p](SignatureCounts c, std::size_t) {
            if (c.secondary == 0) return 1.0;
            return static_cast<double>(c.primary) / static_cast<double>(c.secondary) >= p
                       ? 1.0
                       : 0.0;
        });
}

SemiFuzzyQuantifier q_about_abs(FuzzyNumber fn) {
    return SemiFuzzyQuantifier::from_signature(
        "about_abs", 2, SignatureKind::AbsoluteIntersection,
        [fn](SignatureCounts c, std::size_t) {
            return fn(static_cast<double>(c.primary));
        });
}

SemiFuzzyQuantifier q_prop_unary_map(std::string name,
                                     std::function<double(double)> ratio_map) {
    if (!ratio_map) throw ArgumentError("unary proportional quantifier needs a ratio map");
    return SemiFuzzyQuantifier::from_signature(
        std::move(name), 1, SignatureKind::AbsoluteIntersection,
        [f = std::move(ratio_map)](SignatureCounts c, std::size_t base_size) {
            return f(static_cast<double>(c.primary) / static_cast<double>(base_size));
        });
}

SemiFuzzyQuantifier q_prop_unary(FuzzyNumber fn) {
    return q_prop_unary_map("prop_unary", [fn](double r) { return fn(r); });
}

SemiFuzzyQuantifier q_prop_binary(FuzzyNumber fn) {
    return SemiFuzzyQuantifier::from_signature(
        "prop_binary", 2, SignatureKind::ProportionalPair,
        [fn](SignatureCounts c, std::size_t) {
            if (c.secondary == 0) return 1.0;
            return fn(static_cast<double>(c.primary) / static_cast<double>(c.secondary));
        });
}

SemiFuzzyQuantifier q_prop_ternary(FuzzyNumber fn) {
    return SemiFuzzyQuantifier::from_signature(
        "prop_ternary", 3, SignatureKind::RestrictedProportionalPair,
        [fn](SignatureCounts c, std::size_t) {
            if (c.secondary == 0) return 1.0;
            return fn(static_cast<double>(c.primary) / static_cast<double>(c.secondary));
        });
}

SemiFuzzyQuantifier q_similarity(FuzzyNumber fn) {
    return SemiFuzzyQuantifier::from_signature(
        "similarity", 3, SignatureKind::SimilarityPair,
        [fn](SignatureCounts c, std::size_t) {
            if (c.secondary == 0) return 1.0;
            return fn(static_cast<double>(c.primary) / static_cast<double>(c.secondary));
        });
}

SemiFuzzyQuantifier q_rate(double r1, double r2) {
    if (!(r1 >= 0.0 && r1 <= r2 && r2 <= 1.0))
        throw ArgumentError("rate quantifier requires 0 <= r1 <= r2 <= 1");
    return SemiFuzzyQuantifier::from_signature(
        "rate[" + format_real(r1) + "," + format_real(r2) + "]", 2,
        SignatureKind::ProportionalPair, [r1, r2](SignatureCounts c, std::size_t) {
            if (c.secondary == 0) return 0.0;
            const double ratio =
                static_cast<double>(c.primary) / static_cast<double>(c.secondary);
            return ratio >= r1 && ratio <= r2 ? 1.0 : 0.0;
        });
}

}  // namespace fq
