#include "fuzzquant/temporal.hpp"

#include <cmath>
#include <utility>

#include "fuzzquant/errors.hpp"

namespace fq {

namespace {

void validate_axis(const TimeAxis& axis) {
    if (axis.length < 1) throw ArgumentError("time axis needs at least one instant");
}

std::vector<bool> normalize_missing(std::vector<bool> missing, std::size_t n) {
    if (missing.empty()) missing.assign(n, false);
    if (missing.size() != n)
        throw ArgumentError("missing-flag length must equal the axis length");
    return missing;
}

// Evaluating a quantifier when the clipped window vanished: all arguments
// restricted to the empty set (the proportional families yield 1 here).
double empty_restriction_value(const SemiFuzzyQuantifier& q) {
    const auto base = BaseSet::indexed(1);
    std::vector<CrispSet> args(static_cast<std::size_t>(q.arity()), CrispSet::empty(base));
    return q.evaluate(args);
}

constexpr std::int64_t kMaxWindowSpan = 1'000'000;

}  // namespace

RawSeries::RawSeries(TimeAxis axis, std::vector<double> values, std::vector<bool> missing)
    : axis_(std::move(axis)), values_(std::move(values)) {
    validate_axis(axis_);
    if (values_.size() != axis_.length)
        throw ArgumentError("value count must equal the axis length");
    missing_ = normalize_missing(std::move(missing), values_.size());
}

FuzzySignal::FuzzySignal(TimeAxis axis, std::vector<double> mu, std::vector<bool> missing)
    : axis_(std::move(axis)), mu_(std::move(mu)) {
    validate_axis(axis_);
    if (mu_.size() != axis_.length)
        throw ArgumentError("membership count must equal the axis length");
    for (double m : mu_)
        if (!(m >= 0.0 && m <= 1.0))
            throw ArgumentError("signal memberships must lie in [0,1]");
    missing_ = normalize_missing(std::move(missing), mu_.size());
}

TemporalWindow::TemporalWindow(FuzzyNumber shape) : shape_(std::move(shape)) {
    const auto [lo, hi] = shape_.support();
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ArgumentError("temporal window shape needs bounded support");
    const auto first = static_cast<std::int64_t>(std::ceil(lo));
    const auto last = static_cast<std::int64_t>(std::floor(hi));
    if (last - first > kMaxWindowSpan)
        throw ArgumentError("temporal window support is unreasonably large");
    for (std::int64_t o = first; o <= last; ++o)
        if (shape_(static_cast<double>(o)) > 0.0) support_.push_back(o);
}

RawSeries pct_change(const RawSeries& raw) {
    const std::size_t n = raw.length();
    std::vector<double> values(n, 0.0);
    std::vector<bool> missing(n, false);
    missing[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
        if (raw.missing(i) || raw.missing(i - 1)) {
            missing[i] = true;
            continue;
        }
        const double prev = raw.value(i - 1);
        if (prev == 0.0)
            throw DataError("pct_change: zero denominator at instant t=" +
                            std::to_string(raw.axis().start + static_cast<std::int64_t>(i) - 1));
        values[i] = 100.0 * (raw.value(i) - prev) / prev;
    }
    return RawSeries(raw.axis(), std::move(values), std::move(missing));
}

FuzzySignal fuzzify_series(const RawSeries& raw, const FuzzyNumber& fn) {
    const std::size_t n = raw.length();
    std::vector<double> mu(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (!raw.missing(i)) mu[i] = fn(raw.value(i));
    return FuzzySignal(raw.axis(), std::move(mu), raw.missing_flags());
}

DisplacedWindow displace_window(const TemporalWindow& w, std::int64_t t0,
                                const TimeAxis& axis) {
    validate_axis(axis);
    DisplacedWindow out;
    for (std::int64_t o : w.support_offsets()) {
        const std::int64_t t = t0 + o;
        if (!axis.contains(t)) {
            out.clipped = true;
            continue;
        }
        out.instants.push_back(t);
        out.membership.push_back(w.shape()(static_cast<double>(t - t0)));
    }
    return out;
}

FuzzySignal displace_signal(const FuzzySignal& s, std::int64_t d) {
    const std::size_t n = s.length();
    std::vector<double> mu(n, 0.0);
    std::vector<bool> missing(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t src = s.axis().start + static_cast<std::int64_t>(i) - d;
        if (!s.axis().contains(src)) {
            missing[i] = true;
            continue;
        }
        const std::size_t j = s.axis().index_of(src);
        mu[i] = s.mu(j);
        missing[i] = s.missing(j);
    }
    return FuzzySignal(s.axis(), std::move(mu), std::move(missing));
}

std::vector<SlidePoint> sliding_evaluate(const FuzzifiedQuantifier& fq,
                                         const TemporalWindow& w,
                                         std::span<const SignalTerm> signals,
                                         std::span<const std::int64_t> instants) {
    if (signals.empty())
        throw ArgumentError("sliding evaluation needs at least one signal");
    if (fq.source().arity() != 1 + static_cast<int>(signals.size()))
        throw ArgumentError("quantifier arity must equal 1 + signal count");
    for (std::size_t i = 1; i < signals.size(); ++i)
        if (!(signals[i].signal.axis() == signals[0].signal.axis()))
            throw ArgumentError("all signals must share one time axis");

    std::vector<FuzzySignal> displaced;
    displaced.reserve(signals.size());
    for (const auto& term : signals)
        displaced.push_back(term.displacement == 0 ? term.signal
                                                   : displace_signal(term.signal, term.displacement));

    std::vector<SlidePoint> out;
    out.reserve(instants.size());
    const TimeAxis axis = signals[0].signal.axis();

    for (std::int64_t t : instants) {
        const DisplacedWindow dw = displace_window(w, t, axis);
        if (dw.empty()) {
            out.push_back({t, empty_restriction_value(fq.source()), true});
            continue;
        }
        bool boundary = dw.clipped;
        const auto base = BaseSet::indexed(dw.instants.size());
        std::vector<FuzzySet> args;
        args.reserve(1 + displaced.size());
        args.emplace_back(base, dw.membership);
        for (const auto& sig : displaced) {
            std::vector<double> mu(dw.instants.size(), 0.0);
            for (std::size_t j = 0; j < dw.instants.size(); ++j) {
                const std::size_t idx = axis.index_of(dw.instants[j]);
                if (sig.missing(idx))
                    boundary = true;
                else
                    mu[j] = sig.mu(idx);
            }
            args.emplace_back(base, std::move(mu));
        }
        out.push_back({t, fq(args), boundary});
    }
    return out;
}

BinaryObservableSeries threshold_observable(std::span<const SlidePoint> series,
                                            double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw ArgumentError("threshold must lie in [0,1]");
    BinaryObservableSeries out;
    out.threshold = theta;
    out.instants.reserve(series.size());
    out.flags.reserve(series.size());
    for (const auto& p : series) {
        out.instants.push_back(p.t);
        out.flags.push_back(p.degree > theta);
    }
    return out;
}

}  // namespace fq
