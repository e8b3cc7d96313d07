#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuzzquant/fuzzy_number.hpp"
#include "fuzzquant/qfm.hpp"
#include "fuzzquant/sets.hpp"

namespace fq {

// Consecutive integer instants start .. start+length-1 with a uniform step.
struct TimeAxis {
    std::int64_t start = 0;
    std::size_t length = 0;
    std::string unit = "step";

    std::int64_t end() const { return start + static_cast<std::int64_t>(length) - 1; }
    bool contains(std::int64_t t) const { return t >= start && t <= end(); }
    std::size_t index_of(std::int64_t t) const { return static_cast<std::size_t>(t - start); }

    bool operator==(const TimeAxis& o) const {
        return start == o.start && length == o.length && unit == o.unit;
    }
};

// Real-valued series over a time axis; individual instants may be missing
// (leading derivative gaps, empty CSV cells, displaced-out instants).
class RawSeries {
public:
    RawSeries(TimeAxis axis, std::vector<double> values, std::vector<bool> missing = {});

    const TimeAxis& axis() const { return axis_; }
    double value(std::size_t i) const { return values_[i]; }
    bool missing(std::size_t i) const { return missing_[i]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<bool>& missing_flags() const { return missing_; }
    std::size_t length() const { return values_.size(); }

private:
    TimeAxis axis_;
    std::vector<double> values_;
    std::vector<bool> missing_;
};

// Time-indexed memberships; missing instants carry mu = 0 plus a flag.
class FuzzySignal {
public:
    FuzzySignal(TimeAxis axis, std::vector<double> mu, std::vector<bool> missing = {});

    const TimeAxis& axis() const { return axis_; }
    double mu(std::size_t i) const { return mu_[i]; }
    bool missing(std::size_t i) const { return missing_[i]; }
    const std::vector<double>& memberships() const { return mu_; }
    const std::vector<bool>& missing_flags() const { return missing_; }
    std::size_t length() const { return mu_.size(); }

private:
    TimeAxis axis_;
    std::vector<double> mu_;
    std::vector<bool> missing_;
};

// Relative fuzzy window over integer offsets around 0; the shape must have
// bounded support (trapezoids qualify, open-ended S shapes do not).
class TemporalWindow {
public:
    explicit TemporalWindow(FuzzyNumber shape);

    const FuzzyNumber& shape() const { return shape_; }
    // Ascending integer offsets with strictly positive membership.
    const std::vector<std::int64_t>& support_offsets() const { return support_; }

private:
    FuzzyNumber shape_;
    std::vector<std::int64_t> support_;
};

// out[i] = 100*(raw[i]-raw[i-1])/raw[i-1]; the first instant is missing.
// Throws DataError naming the instant whose value is a zero denominator.
RawSeries pct_change(const RawSeries& raw);

// mu[t] = fn(raw[t]); missing instants get mu = 0 and stay flagged.
FuzzySignal fuzzify_series(const RawSeries& raw, const FuzzyNumber& fn);

// A window displaced to t0 and clipped to an axis: the instants with positive
// window membership, their memberships, and whether clipping lost support.
struct DisplacedWindow {
    std::vector<std::int64_t> instants;
    std::vector<double> membership;
    bool clipped = false;

    bool empty() const { return instants.empty(); }
};

DisplacedWindow displace_window(const TemporalWindow& w, std::int64_t t0,
                                const TimeAxis& axis);

// out(t) = s(t - d); instants displaced outside the source axis are missing.
FuzzySignal displace_signal(const FuzzySignal& s, std::int64_t d);

struct SignalTerm {
    FuzzySignal signal;
    std::int64_t displacement = 0;
};

struct SlidePoint {
    std::int64_t t;
    double degree;
    // True when the clipped window lost support, the window was empty, or the
    // window overlapped missing signal data.
    bool boundary;
};

// Evaluates fq(window at t, signals restricted to the window support) for
// each requested instant. The window is the quantifier's first argument.
std::vector<SlidePoint> sliding_evaluate(const FuzzifiedQuantifier& fq,
                                         const TemporalWindow& w,
                                         std::span<const SignalTerm> signals,
                                         std::span<const std::int64_t> instants);

// Binary observables obtained by strict thresholding of a degree series.
struct BinaryObservableSeries {
    std::vector<std::int64_t> instants;
    std::vector<bool> flags;  // degree > threshold
    double threshold = 0.0;
};

BinaryObservableSeries threshold_observable(std::span<const SlidePoint> series,
                                            double theta);

}  // namespace fq
