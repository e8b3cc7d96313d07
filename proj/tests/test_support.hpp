#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fuzzquant/qfm.hpp"
#include "fuzzquant/quantifiers.hpp"
#include "fuzzquant/sets.hpp"

namespace fqtest {

using Rng = std::mt19937_64;

inline std::vector<double> random_memberships(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> mu(n);
    for (auto& m : mu) m = dist(rng);
    return mu;
}

inline fq::FuzzySet random_fuzzy_set(Rng& rng, const fq::BasePtr& base) {
    return fq::FuzzySet(base, random_memberships(rng, base->size()));
}

// Independent brute-force expectation over all crisp tuples: representative
// probabilities are recomputed from the definition, never taken from the
// engine under test.
inline double brute_force_fa(const fq::SemiFuzzyQuantifier& q,
                             const std::vector<fq::FuzzySet>& args) {
    const std::size_t n = args.size();
    const std::size_t base_size = args[0].size();
    const std::uint64_t mask_count = std::uint64_t{1} << base_size;

    std::vector<std::vector<double>> weights(n, std::vector<double>(mask_count, 1.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
            double w = 1.0;
            for (std::size_t e = 0; e < base_size; ++e)
                w *= (mask >> e) & 1u ? args[i].mu(e) : 1.0 - args[i].mu(e);
            weights[i][mask] = w;
        }

    std::vector<std::uint64_t> masks(n, 0);
    std::vector<fq::CrispSet> tuple;
    tuple.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        tuple.push_back(fq::CrispSet::from_mask(args[0].base(), 0));

    double total = 0.0;
    for (;;) {
        double w = 1.0;
        for (std::size_t i = 0; i < n; ++i) w *= weights[i][masks[i]];
        if (w != 0.0) total += w * q.evaluate(tuple);

        std::size_t i = 0;
        while (i < n && ++masks[i] == mask_count) masks[i++] = 0;
        if (i == n) break;
        for (std::size_t j = 0; j <= i; ++j)
            tuple[j] = fq::CrispSet::from_mask(args[0].base(), masks[j]);
    }
    return total;
}

// All crisp tuples over a base of the given size, as bit masks.
inline void for_each_crisp_tuple(
    std::size_t base_size, std::size_t arity,
    const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    const std::uint64_t mask_count = std::uint64_t{1} << base_size;
    std::vector<std::uint64_t> masks(arity, 0);
    for (;;) {
        fn(masks);
        std::size_t i = 0;
        while (i < arity && ++masks[i] == mask_count) masks[i++] = 0;
        if (i == arity) break;
    }
}

inline std::vector<fq::CrispSet> sets_from_masks(const fq::BasePtr& base,
                                                 const std::vector<std::uint64_t>& masks) {
    std::vector<fq::CrispSet> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(fq::CrispSet::from_mask(base, m));
    return out;
}

inline std::vector<fq::FuzzySet> fuzzy_from_crisp(const std::vector<fq::CrispSet>& sets) {
    std::vector<fq::FuzzySet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(fq::FuzzySet::from_crisp(s));
    return out;
}

}  // namespace fqtest
