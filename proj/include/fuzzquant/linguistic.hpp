#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzquant/fuzzy_number.hpp"

namespace fq {

struct LinguisticLabel {
    std::string name;
    FuzzyNumber fn;
};

// Named numeric attribute partitioned by ordered fuzzy labels over [lo, hi].
class LinguisticVariable {
public:
    LinguisticVariable(std::string name, double lo, double hi,
                       std::vector<LinguisticLabel> labels);

    const std::string& name() const { return name_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<LinguisticLabel>& labels() const { return labels_; }
    const LinguisticLabel* find(std::string_view label_name) const;

private:
    std::string name_;
    double lo_, hi_;
    std::vector<LinguisticLabel> labels_;
};

// Ordered family of proportional quantifier shapes over the ratio axis [0,1]
// (e.g. nearly none / a few / several / many / nearly all).
class ProportionalPartition {
public:
    explicit ProportionalPartition(std::vector<LinguisticLabel> members,
                                   std::string name = "");

    const std::string& name() const { return name_; }
    std::size_t size() const { return members_.size(); }
    const LinguisticLabel& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<LinguisticLabel>& members() const { return members_; }

private:
    std::string name_;
    std::vector<LinguisticLabel> members_;
};

struct RuspiniReport {
    bool ok;
    double worst_deviation;
};

// Grid check that label memberships sum to 1 everywhere on the domain.
RuspiniReport ruspini_check(const LinguisticVariable& lv, int grid_points = 1001,
                            double tol = 1e-9);
RuspiniReport ruspini_check(const ProportionalPartition& pp, int grid_points = 1001,
                            double tol = 1e-9);

}  // namespace fq
