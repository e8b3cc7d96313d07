#include "fuzzquant/sets.hpp"

#include <algorithm>
#include <unordered_set>

#include "fuzzquant/errors.hpp"

namespace fq {

std::shared_ptr<const BaseSet> BaseSet::indexed(std::size_t n) {
    return std::shared_ptr<const BaseSet>(new BaseSet(n, {}));
}

std::shared_ptr<const BaseSet> BaseSet::labeled(std::vector<std::string> labels) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw ArgumentError("base set labels must be unique: '" + l + "'");
    const std::size_t n = labels.size();
    return std::shared_ptr<const BaseSet>(new BaseSet(n, std::move(labels)));
}

bool same_base(const BasePtr& a, const BasePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

CrispSet::CrispSet(BasePtr base, std::vector<bool> member)
    : base_(std::move(base)), member_(std::move(member)) {
    if (!base_) throw ArgumentError("crisp set requires a base set");
    if (member_.size() != base_->size())
        throw ArgumentError("crisp membership length must equal the base size");
}

CrispSet CrispSet::empty(BasePtr base) {
    const std::size_t n = base ? base->size() : 0;
    return CrispSet(std::move(base), std::vector<bool>(n, false));
}

CrispSet CrispSet::full(BasePtr base) {
    const std::size_t n = base ? base->size() : 0;
    return CrispSet(std::move(base), std::vector<bool>(n, true));
}

CrispSet CrispSet::of_indices(BasePtr base, std::span<const std::size_t> indices) {
    const std::size_t n = base ? base->size() : 0;
    std::vector<bool> member(n, false);
    for (std::size_t i : indices) {
        if (i >= n) throw ArgumentError("element index out of range");
        member[i] = true;
    }
    return CrispSet(std::move(base), std::move(member));
}

CrispSet CrispSet::from_mask(BasePtr base, std::uint64_t mask) {
    const std::size_t n = base ? base->size() : 0;
    if (n > 64) throw ArgumentError("mask construction requires base size <= 64");
    std::vector<bool> member(n, false);
    for (std::size_t i = 0; i < n; ++i) member[i] = (mask >> i) & 1u;
    return CrispSet(std::move(base), std::move(member));
}

std::size_t CrispSet::count() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

FuzzySet::FuzzySet(BasePtr base, std::vector<double> mu)
    : base_(std::move(base)), mu_(std::move(mu)) {
    if (!base_) throw ArgumentError("fuzzy set requires a base set");
    if (mu_.size() != base_->size())
        throw ArgumentError("membership length must equal the base size");
    for (double m : mu_)
        if (!(m >= 0.0 && m <= 1.0))
            throw ArgumentError("memberships must lie in [0,1]");
}

FuzzySet FuzzySet::from_crisp(const CrispSet& y) {
    std::vector<double> mu(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) mu[i] = y.contains(i) ? 1.0 : 0.0;
    return FuzzySet(y.base(), std::move(mu));
}

bool FuzzySet::is_crisp() const {
    return std::all_of(mu_.begin(), mu_.end(),
                       [](double m) { return m == 0.0 || m == 1.0; });
}

CrispSet alpha_cut(const FuzzySet& x, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ArgumentError("alpha-cut level must lie in (0,1]");
    std::vector<bool> member(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) member[i] = x.mu(i) >= alpha;
    return CrispSet(x.base(), std::move(member));
}

std::vector<double> level_breakpoints(std::span<const FuzzySet> sets) {
    if (sets.empty()) throw ArgumentError("level_breakpoints requires at least one set");
    std::vector<double> levels;
    for (const auto& x : sets)
        for (double m : x.memberships())
            if (m > 0.0) levels.push_back(m);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty() || levels.back() != 1.0) levels.push_back(1.0);
    return levels;
}

FuzzySet fuzzify_values(std::span<const double> values, const FuzzyNumber& fn) {
    std::vector<double> mu(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) mu[i] = fn(values[i]);
    return FuzzySet(BaseSet::indexed(values.size()), std::move(mu));
}

}  // namespace fq
