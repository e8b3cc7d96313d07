#pragma once

#include "fuzzquant/sets.hpp"

namespace fq::detail {

// Internal escape hatch so the evaluation loops can refill preallocated set
// buffers instead of reallocating per enumeration step. Never part of the
// public surface; observed values stay immutable.
struct SetAccess {
    static std::vector<bool>& member(CrispSet& s) { return s.member_; }
    static std::vector<double>& mu(FuzzySet& s) { return s.mu_; }
};

}  // namespace fq::detail
