#include "fuzzquant/qfm.hpp"

#include <cstdio>
#include <functional>
#include <vector>

#include "fuzzquant/counter_rng.hpp"
#include "fuzzquant/errors.hpp"
#include "set_access.hpp"

namespace fq {

namespace {

void validate_fuzzy_args(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
    if (static_cast<int>(args.size()) != q.arity())
        throw ArgumentError("quantifier '" + q.name() + "' expects " +
                            std::to_string(q.arity()) + " arguments, got " +
                            std::to_string(args.size()));
    for (std::size_t i = 1; i < args.size(); ++i)
        if (!same_base(args[0].base(), args[i].base()))
            throw ArgumentError("fuzzy arguments must share one base set");
    if (args[0].size() == 0)
        throw ArgumentError("quantifiers are defined over nonempty base sets");
}

void fill_cut(CrispSet& cut, const FuzzySet& x, double level) {
    auto& member = detail::SetAccess::member(cut);
    for (std::size_t e = 0; e < x.size(); ++e) member[e] = x.mu(e) >= level;
}

// Representative probabilities of every subset of the base, indexed by mask.
std::vector<double> mask_probabilities(const FuzzySet& x) {
    const std::size_t n = x.size();
    std::vector<double> m(std::size_t{1} << n, 0.0);
    m[0] = 1.0;
    for (std::size_t e = 0; e < n; ++e) {
        const std::size_t size = std::size_t{1} << e;
        const double p = x.mu(e);
        for (std::size_t mask = size; mask-- > 0;) {
            m[mask | size] = m[mask] * p;
            m[mask] *= 1.0 - p;
        }
    }
    return m;
}

void fill_from_mask(CrispSet& y, std::size_t mask, std::size_t n) {
    auto& member = detail::SetAccess::member(y);
    for (std::size_t e = 0; e < n; ++e) member[e] = (mask >> e) & 1u;
}

}  // namespace

FuzzificationMethod FuzzificationMethod::a_mc(std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw ArgumentError("monte carlo needs at least one sample");
    return {Model::A, AStrategy::MonteCarlo, samples, seed, false};
}

std::string FuzzificationMethod::label() const {
    switch (model) {
        case Model::MD:
            return "md";
        case Model::I:
            return "i";
        case Model::A:
            break;
    }
    switch (strategy) {
        case AStrategy::Exact:
            return "a/exact";
        case AStrategy::CardinalityDP:
            return dp_trim ? "a/dp-trim" : "a/dp";
        case AStrategy::MonteCarlo: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "a/mc(%llu,%llu)",
                          static_cast<unsigned long long>(mc_samples),
                          static_cast<unsigned long long>(mc_seed));
            return buf;
        }
    }
    return "a";
}

double apply_md(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
    validate_fuzzy_args(q, args);
    const auto levels = level_breakpoints(args);
    std::vector<CrispSet> cuts(args.size(), CrispSet::empty(args[0].base()));
    double total = 0.0;
    double prev = 0.0;
    for (double v : levels) {
        for (std::size_t i = 0; i < args.size(); ++i) fill_cut(cuts[i], args[i], v);
        total += (v - prev) * q.evaluate(cuts);
        prev = v;
    }
    return total;
}

double apply_i(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
    validate_fuzzy_args(q, args);
    const std::size_t n = args.size();
    if (n > static_cast<std::size_t>(kLevelProductArityCap))
        throw CapError("independent level integration supports arity <= " +
                       std::to_string(kLevelProductArityCap));

    std::vector<std::vector<double>> levels(n);
    std::vector<std::vector<CrispSet>> cuts(n);
    for (std::size_t i = 0; i < n; ++i) {
        levels[i] = level_breakpoints(args.subspan(i, 1));
        cuts[i].reserve(levels[i].size());
        for (double v : levels[i]) cuts[i].push_back(alpha_cut(args[i], v));
    }

    std::vector<CrispSet> tuple(n, CrispSet::empty(args[0].base()));
    std::vector<std::size_t> idx(n, 0);
    double total = 0.0;
    for (;;) {
        double weight = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lo = idx[i] > 0 ? levels[i][idx[i] - 1] : 0.0;
            weight *= levels[i][idx[i]] - lo;
            detail::SetAccess::member(tuple[i]) = cuts[i][idx[i]].members();
        }
        total += weight * q.evaluate(tuple);

        std::size_t i = 0;
        while (i < n && ++idx[i] == levels[i].size()) idx[i++] = 0;
        if (i == n) break;
    }
    return total;
}

double representative_prob(const FuzzySet& x, const CrispSet& y) {
    if (!same_base(x.base(), y.base()))
        throw ArgumentError("representative probability requires a shared base set");
    double p = 1.0;
    for (std::size_t e = 0; e < x.size(); ++e)
        p *= y.contains(e) ? x.mu(e) : 1.0 - x.mu(e);
    return p;
}

double apply_a_exact(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
    validate_fuzzy_args(q, args);
    const std::size_t n = args.size();
    const std::size_t base_size = args[0].size();
    if (n * base_size > kExactTermCapBits)
        throw CapError("exact expectation enumerates 2^(n*|E|) terms and requires n*|E| <= " +
                       std::to_string(kExactTermCapBits) + " (got " +
                       std::to_string(n * base_size) +
                       "); use the cardinality dynamic program or monte carlo");

    std::vector<std::vector<double>> tables;
    tables.reserve(n);
    for (const auto& x : args) tables.push_back(mask_probabilities(x));

    std::vector<CrispSet> tuple(n, CrispSet::empty(args[0].base()));
    const std::size_t mask_count = std::size_t{1} << base_size;
    double total = 0.0;
    std::function<void(std::size_t, double)> enumerate = [&](std::size_t i, double weight) {
        if (i == n) {
            total += weight * q.evaluate(tuple);
            return;
        }
        for (std::size_t mask = 0; mask < mask_count; ++mask) {
            const double w = tables[i][mask];
            if (w == 0.0) continue;
            fill_from_mask(tuple[i], mask, base_size);
            enumerate(i + 1, weight * w);
        }
    };
    enumerate(0, 1.0);
    return total;
}

double apply_a_dp(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args, bool trim) {
    validate_fuzzy_args(q, args);
    if (!q.signature())
        throw CapError("the cardinality dynamic program requires a quantifier with a "
                       "cardinality signature");
    const auto& sig = *q.signature();
    const std::size_t n = args[0].size();
    const auto& reduced = sig.reduced;

    if (sig.kind == SignatureKind::AbsoluteIntersection) {
        std::vector<double> dist(n + 1, 0.0);
        dist[0] = 1.0;
        for (std::size_t e = 0; e < n; ++e) {
            double p = 1.0;
            for (const auto& x : args) p *= x.mu(e);
            for (std::size_t k = e + 1; k-- > 0;) {
                dist[k + 1] += dist[k] * p;
                dist[k] *= 1.0 - p;
            }
            if (trim)
                for (auto& v : dist)
                    if (v < kDpTrimThreshold) v = 0.0;
        }
        double total = 0.0;
        for (std::size_t k = 0; k <= n; ++k)
            if (dist[k] != 0.0) total += dist[k] * reduced({k, 0}, n);
        return total;
    }

    // Pair statistics: state (secondary=m, primary=k), k <= m.
    const std::size_t stride = n + 1;
    std::vector<double> dist(stride * stride, 0.0);
    dist[0] = 1.0;
    for (std::size_t e = 0; e < n; ++e) {
        double p_both = 0.0, p_only = 0.0, p_none = 1.0;
        switch (sig.kind) {
            case SignatureKind::ProportionalPair: {
                const double m1 = args[0].mu(e), m2 = args[1].mu(e);
                p_both = m1 * m2;
                p_only = m1 * (1.0 - m2);
                p_none = 1.0 - m1;
                break;
            }
            case SignatureKind::RestrictedProportionalPair: {
                const double t = args[0].mu(e), y1 = args[1].mu(e), y2 = args[2].mu(e);
                p_both = t * y1 * y2;
                p_only = t * y1 * (1.0 - y2);
                p_none = 1.0 - t * y1;
                break;
            }
            case SignatureKind::SimilarityPair: {
                const double t = args[0].mu(e), y1 = args[1].mu(e), y2 = args[2].mu(e);
                p_both = t * y1 * y2;
                p_only = t * (y1 * (1.0 - y2) + (1.0 - y1) * y2);
                p_none = 1.0 - t * (y1 + y2 - y1 * y2);
                break;
            }
            case SignatureKind::AbsoluteIntersection:
                break;  // handled above
        }
        for (std::size_t m = e + 1; m-- > 0;) {
            for (std::size_t k = m + 1; k-- > 0;) {
                const double v = dist[m * stride + k];
                if (v == 0.0) continue;
                dist[(m + 1) * stride + k + 1] += v * p_both;
                dist[(m + 1) * stride + k] += v * p_only;
                dist[m * stride + k] = v * p_none;
            }
        }
        if (trim)
            for (auto& v : dist)
                if (v < kDpTrimThreshold) v = 0.0;
    }

    double total = 0.0;
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            const double v = dist[m * stride + k];
            if (v != 0.0) total += v * reduced({k, m}, n);
        }
    return total;
}

double apply_a_mc(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                  std::uint64_t samples, std::uint64_t seed) {
    validate_fuzzy_args(q, args);
    if (samples < 1) throw ArgumentError("monte carlo needs at least one sample");
    const std::size_t n = args.size();
    const std::size_t base_size = args[0].size();
    std::vector<CrispSet> tuple(n, CrispSet::empty(args[0].base()));
    double sum = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& member = detail::SetAccess::member(tuple[i]);
            for (std::size_t e = 0; e < base_size; ++e)
                member[e] = counter_uniform(seed, s, i, e) < args[i].mu(e);
        }
        sum += q.evaluate(tuple);
    }
    return sum / static_cast<double>(samples);
}

FuzzifiedQuantifier::FuzzifiedQuantifier(SemiFuzzyQuantifier q, FuzzificationMethod method)
    : q_(std::move(q)), method_(method) {
    if (method_.model == FuzzificationMethod::Model::A &&
        method_.strategy == FuzzificationMethod::AStrategy::MonteCarlo && method_.mc_samples < 1)
        throw ArgumentError("monte carlo needs at least one sample");
}

double FuzzifiedQuantifier::operator()(std::span<const FuzzySet> args) const {
    using Model = FuzzificationMethod::Model;
    using AStrategy = FuzzificationMethod::AStrategy;
    switch (method_.model) {
        case Model::MD:
            return apply_md(q_, args);
        case Model::I:
            return apply_i(q_, args);
        case Model::A:
            break;
    }
    switch (method_.strategy) {
        case AStrategy::Exact:
            return apply_a_exact(q_, args);
        case AStrategy::CardinalityDP:
            if (q_.signature()) return apply_a_dp(q_, args, method_.dp_trim);
            // Unsigned quantifiers fall back to exact enumeration when it
            // fits under the cap; a silent monte carlo substitution would
            // make results nondeterministic.
            return apply_a_exact(q_, args);
        case AStrategy::MonteCarlo:
            return apply_a_mc(q_, args, method_.mc_samples, method_.mc_seed);
    }
    throw ArgumentError("unknown fuzzification method");
}

double FuzzifiedQuantifier::operator()(std::initializer_list<FuzzySet> args) const {
    return (*this)(std::span<const FuzzySet>(args.begin(), args.size()));
}

FuzzifiedQuantifier fuzzify(SemiFuzzyQuantifier q, FuzzificationMethod method) {
    return FuzzifiedQuantifier(std::move(q), method);
}

}  // namespace fq
