#include "fuzzquant/linguistic.hpp"

#include <cmath>
#include <unordered_set>

#include "fuzzquant/errors.hpp"

namespace fq {

namespace {

void check_unique_names(const std::vector<LinguisticLabel>& labels, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l.name).second)
            throw ArgumentError(std::string(what) + " names must be unique: '" + l.name + "'");
}

RuspiniReport grid_check(const std::vector<LinguisticLabel>& labels, double lo, double hi,
                         int grid_points, double tol) {
    if (grid_points < 2) throw ArgumentError("ruspini check needs at least 2 grid points");
    double worst = 0.0;
    for (int k = 0; k < grid_points; ++k) {
        const double x = lo + (hi - lo) * k / (grid_points - 1);
        double sum = 0.0;
        for (const auto& l : labels) sum += l.fn(x);
        worst = std::max(worst, std::fabs(sum - 1.0));
    }
    return {worst <= tol, worst};
}

}  // namespace

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<LinguisticLabel> labels)
    : name_(std::move(name)), lo_(lo), hi_(hi), labels_(std::move(labels)) {
    if (labels_.empty()) throw ArgumentError("linguistic variable needs at least one label");
    if (!(lo_ < hi_)) throw ArgumentError("linguistic variable domain requires lo < hi");
    check_unique_names(labels_, "label");
}

const LinguisticLabel* LinguisticVariable::find(std::string_view label_name) const {
    for (const auto& l : labels_)
        if (l.name == label_name) return &l;
    return nullptr;
}

ProportionalPartition::ProportionalPartition(std::vector<LinguisticLabel> members,
                                             std::string name)
    : name_(std::move(name)), members_(std::move(members)) {
    if (members_.empty()) throw ArgumentError("partition needs at least one member");
    check_unique_names(members_, "partition member");
}

RuspiniReport ruspini_check(const LinguisticVariable& lv, int grid_points, double tol) {
    return grid_check(lv.labels(), lv.lo(), lv.hi(), grid_points, tol);
}

RuspiniReport ruspini_check(const ProportionalPartition& pp, int grid_points, double tol) {
    return grid_check(pp.members(), 0.0, 1.0, grid_points, tol);
}

}  // namespace fq
