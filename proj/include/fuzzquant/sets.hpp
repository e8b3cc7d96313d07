#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fuzzquant/fuzzy_number.hpp"

namespace fq {

namespace detail {
struct SetAccess;
}

// Finite ordered universe that sets and quantifiers range over. Shared by
// pointer between derived sets; two bases are interchangeable when they are
// structurally equal (same size, same labels).
class BaseSet {
public:
    static std::shared_ptr<const BaseSet> indexed(std::size_t n);
    static std::shared_ptr<const BaseSet> labeled(std::vector<std::string> labels);

    std::size_t size() const { return size_; }
    // Empty when the base is anonymous (index-identified elements).
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const BaseSet& other) const {
        return size_ == other.size_ && labels_ == other.labels_;
    }

private:
    BaseSet(std::size_t n, std::vector<std::string> labels)
        : size_(n), labels_(std::move(labels)) {}

    std::size_t size_;
    std::vector<std::string> labels_;
};

using BasePtr = std::shared_ptr<const BaseSet>;

bool same_base(const BasePtr& a, const BasePtr& b);

// Ordinary subset of a base set.
class CrispSet {
public:
    CrispSet(BasePtr base, std::vector<bool> member);

    static CrispSet empty(BasePtr base);
    static CrispSet full(BasePtr base);
    static CrispSet of_indices(BasePtr base, std::span<const std::size_t> indices);
    // Bit i of mask selects element i; base size must be <= 64.
    static CrispSet from_mask(BasePtr base, std::uint64_t mask);

    bool contains(std::size_t i) const { return member_[i]; }
    std::size_t count() const;
    std::size_t size() const { return member_.size(); }
    const BasePtr& base() const { return base_; }
    const std::vector<bool>& members() const { return member_; }

    bool operator==(const CrispSet& o) const {
        return member_ == o.member_ && same_base(base_, o.base_);
    }

private:
    friend struct detail::SetAccess;
    BasePtr base_;
    std::vector<bool> member_;
};

// Membership assignment E -> [0,1].
class FuzzySet {
public:
    FuzzySet(BasePtr base, std::vector<double> mu);

    static FuzzySet from_crisp(const CrispSet& y);

    double mu(std::size_t i) const { return mu_[i]; }
    const std::vector<double>& memberships() const { return mu_; }
    std::size_t size() const { return mu_.size(); }
    const BasePtr& base() const { return base_; }
    bool is_crisp() const;

    bool operator==(const FuzzySet& o) const {
        return mu_ == o.mu_ && same_base(base_, o.base_);
    }

private:
    friend struct detail::SetAccess;
    BasePtr base_;
    std::vector<double> mu_;
};

// Elements with membership >= alpha; alpha must lie in (0,1].
CrispSet alpha_cut(const FuzzySet& x, double alpha);

// Sorted distinct membership values in (0,1] across all inputs, with 1.0
// appended if absent. Alpha-cuts are constant on each interval (v_k, v_{k+1}]
// and equal the cut taken at v_{k+1}.
std::vector<double> level_breakpoints(std::span<const FuzzySet> sets);

// FuzzySet over an anonymous index base with mu[i] = fn(values[i]).
FuzzySet fuzzify_values(std::span<const double> values, const FuzzyNumber& fn);

}  // namespace fq
