#include <doctest.h>

#include <cmath>
#include <vector>

#include "fuzzquant/errors.hpp"
#include "fuzzquant/temporal.hpp"
#include "test_support.hpp"

using namespace fq;

namespace {

const FuzzyNumber kMostShape = FuzzyNumber::s_shape(0.7, 0.9);

FuzzifiedQuantifier most_fa() {
    return fuzzify(q_prop_binary(kMostShape), FuzzificationMethod::a_dp());
}

FuzzySignal constant_signal(const TimeAxis& axis, double mu) {
    return FuzzySignal(axis, std::vector<double>(axis.length, mu));
}

std::vector<std::int64_t> range(std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = from; t <= to; ++t) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("pct_change arithmetic and gap") {
    const RawSeries raw({0, 2}, {100.0, 104.0});
    const RawSeries out = pct_change(raw);
    CHECK(out.missing(0));
    CHECK_FALSE(out.missing(1));
    CHECK(out.value(1) == doctest::Approx(4.0).epsilon(1e-12));

    const RawSeries constant({0, 4}, {7.0, 7.0, 7.0, 7.0});
    const RawSeries flat = pct_change(constant);
    for (std::size_t i = 1; i < 4; ++i) CHECK(flat.value(i) == 0.0);

    const RawSeries drop({0, 2}, {100.0, 50.0});
    CHECK(pct_change(drop).value(1) == doctest::Approx(-50.0).epsilon(1e-12));
}

TEST_CASE("pct_change zero denominator names the instant") {
    const RawSeries raw({1990, 3}, {5.0, 0.0, 3.0});
    try {
        pct_change(raw);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("1991") != std::string::npos);
    }
}

TEST_CASE("pct_change propagates missing inputs") {
    const RawSeries raw({0, 4}, {1.0, 0.0, 2.0, 3.0}, {false, true, false, false});
    const RawSeries out = pct_change(raw);
    CHECK(out.missing(0));
    CHECK(out.missing(1));  // current value missing
    CHECK(out.missing(2));  // previous value missing
    CHECK_FALSE(out.missing(3));
    CHECK(out.value(3) == doctest::Approx(50.0));
}

TEST_CASE("fuzzify_series applies the shape and keeps missing flags") {
    const auto slight = FuzzyNumber::left_s_shape(1, 4);
    const RawSeries raw({0, 4}, {0.0, 4.0, 2.5, 9.0}, {false, false, false, true});
    const FuzzySignal sig = fuzzify_series(raw, slight);
    CHECK(sig.mu(0) == 1.0);
    CHECK(sig.mu(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sig.mu(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sig.mu(3) == 0.0);
    CHECK(sig.missing(3));
}

TEST_CASE("temporal window needs bounded support") {
    CHECK_THROWS_AS(TemporalWindow(FuzzyNumber::s_shape(0, 1)), ArgumentError);
    CHECK_THROWS_AS(TemporalWindow(FuzzyNumber::left_s_shape(0, 1)), ArgumentError);
    const TemporalWindow w(FuzzyNumber::trapezoid(-8, -5, 0, 0));
    CHECK(w.support_offsets() == std::vector<std::int64_t>{-7, -6, -5, -4, -3, -2, -1, 0});
}

TEST_CASE("displace_window substitutes t - t0") {
    const TemporalWindow w(FuzzyNumber::trapezoid(-8, -5, 0, 0));
    const TimeAxis axis{1965, 42, "year"};
    const DisplacedWindow dw = displace_window(w, 1995, axis);
    REQUIRE_FALSE(dw.empty());
    CHECK_FALSE(dw.clipped);

    const auto member_at = [&](std::int64_t t) -> double {
        for (std::size_t i = 0; i < dw.instants.size(); ++i)
            if (dw.instants[i] == t) return dw.membership[i];
        return 0.0;
    };
    CHECK(member_at(1990) == 1.0);                                      // offset -5
    CHECK(member_at(1996) == 0.0);                                      // offset +1
    CHECK(member_at(1988) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));  // offset -7
    CHECK(member_at(1995) == 1.0);                                      // offset 0
}

TEST_CASE("displace_window clips to the axis and can come up empty") {
    const TemporalWindow w(FuzzyNumber::trapezoid(-3, -2, 0, 0));
    const TimeAxis axis{10, 5};
    const DisplacedWindow clipped = displace_window(w, 11, axis);
    CHECK(clipped.clipped);
    CHECK(clipped.instants == std::vector<std::int64_t>{10, 11});

    const DisplacedWindow gone = displace_window(w, 30, axis);
    CHECK(gone.empty());

    // Pure translation: the membership multiset over the support is preserved.
    const DisplacedWindow a = displace_window(w, 12, axis);
    const DisplacedWindow b = displace_window(w, 13, axis);
    REQUIRE(a.membership.size() == b.membership.size());
    for (std::size_t i = 0; i < a.membership.size(); ++i)
        CHECK(a.membership[i] == b.membership[i]);
}

TEST_CASE("displace_signal shifts right by d") {
    const TimeAxis axis{0, 2};
    const FuzzySignal s(axis, {0.2, 0.9});
    const FuzzySignal d0 = displace_signal(s, 0);
    CHECK(d0.mu(0) == 0.2);
    CHECK(d0.mu(1) == 0.9);

    const FuzzySignal d1 = displace_signal(s, 1);
    CHECK(d1.missing(0));
    CHECK(d1.mu(1) == 0.2);

    // Interior values survive a round trip.
    const TimeAxis longer{0, 10};
    fqtest::Rng rng(5);
    const FuzzySignal sig(longer, fqtest::random_memberships(rng, 10));
    const FuzzySignal back = displace_signal(displace_signal(sig, 3), -3);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(back.mu(i) == sig.mu(i));
        CHECK_FALSE(back.missing(i));
    }
}

TEST_CASE("sliding evaluation on constant signals") {
    const TimeAxis axis{0, 30};
    const TemporalWindow w(FuzzyNumber::trapezoid(-6, -3, 0, 0));
    const auto interior = range(6, 29);

    const std::vector<SignalTerm> ones{{constant_signal(axis, 1.0), 0}};
    for (const auto& p : sliding_evaluate(most_fa(), w, ones, interior)) {
        CHECK(p.degree == 1.0);
        CHECK_FALSE(p.boundary);
    }

    const std::vector<SignalTerm> zeros{{constant_signal(axis, 0.0), 0}};
    for (const auto& p : sliding_evaluate(most_fa(), w, zeros, interior))
        CHECK(p.degree == 0.0);
}

TEST_CASE("crisp window and signal reduce to direct semi-fuzzy evaluation") {
    // Crisp 5-instant window; the signal holds on 4 of the 5.
    const TimeAxis axis{0, 20};
    const TemporalWindow w(FuzzyNumber::trapezoid(-4, -4, 0, 0));
    std::vector<double> mu(axis.length, 0.0);
    for (std::int64_t t : {6, 7, 8, 9}) mu[static_cast<std::size_t>(t)] = 1.0;
    const std::vector<SignalTerm> sig{{FuzzySignal(axis, mu), 0}};

    for (const auto method :
         {FuzzificationMethod::md(), FuzzificationMethod::i(), FuzzificationMethod::a_dp()}) {
        const auto fq_most = fuzzify(q_prop_binary(kMostShape), method);
        const auto points = sliding_evaluate(fq_most, w, sig, range(10, 10));
        REQUIRE(points.size() == 1);
        CHECK(points[0].degree == doctest::Approx(kMostShape(0.8)).epsilon(1e-12));
        CHECK(points[0].degree == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("boundary marking: clipping, empty windows, missing data") {
    const TimeAxis axis{0, 10};
    const TemporalWindow w(FuzzyNumber::trapezoid(-3, -2, 0, 0));
    std::vector<bool> missing(axis.length, false);
    missing[4] = true;
    const std::vector<SignalTerm> sig{
        {FuzzySignal(axis, std::vector<double>(axis.length, 1.0), missing), 0}};

    const auto points = sliding_evaluate(most_fa(), w, sig, range(-5, 9));
    for (const auto& p : points) {
        const bool window_fits = p.t - 3 >= 0 && p.t <= 9;
        const bool covers_missing = p.t >= 4 && p.t - 3 <= 4;
        const bool expect_boundary = !window_fits || covers_missing;
        CHECK(p.boundary == expect_boundary);
    }
    // Far outside the axis the window is empty: proportional convention is 1.
    CHECK(points[0].t == -5);
    CHECK(points[0].degree == 1.0);
    CHECK(points[0].boundary);
}

TEST_CASE("shift equivariance on interior instants") {
    fqtest::Rng rng(71);
    const TimeAxis axis{0, 40};
    const TemporalWindow w(FuzzyNumber::trapezoid(-5, -3, -1, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const FuzzySignal s(axis, fqtest::random_memberships(rng, axis.length));
        const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
        const std::vector<SignalTerm> plain{{s, 0}};
        const std::vector<SignalTerm> shifted{{displace_signal(s, d), 0}};

        for (std::int64_t t : range(10, 20)) {
            const std::int64_t ts = t + d;
            const auto a = sliding_evaluate(most_fa(), w, plain, std::span(&t, 1));
            const auto b = sliding_evaluate(most_fa(), w, shifted, std::span(&ts, 1));
            CHECK(a[0].degree == b[0].degree);
        }
    }
}

TEST_CASE("zero-membership instants outside the window support change nothing") {
    fqtest::Rng rng(73);
    const TimeAxis axis{0, 11};
    const TemporalWindow w(FuzzyNumber::trapezoid(-4, -2, 0, 0));
    for (const auto method :
         {FuzzificationMethod::md(), FuzzificationMethod::i(), FuzzificationMethod::a_exact(),
          FuzzificationMethod::a_dp()}) {
        const auto fq_most = fuzzify(q_prop_binary(kMostShape), method);
        const FuzzySignal s(axis, fqtest::random_memberships(rng, axis.length));
        const std::vector<SignalTerm> sig{{s, 0}};
        const std::int64_t t = 8;
        const auto clipped = sliding_evaluate(fq_most, w, sig, std::span(&t, 1));

        // Unclipped route: the whole axis as base, zeros outside the support.
        const auto base = BaseSet::indexed(axis.length);
        std::vector<double> wmu(axis.length, 0.0);
        for (std::size_t i = 0; i < axis.length; ++i)
            wmu[i] = std::max(0.0, w.shape()(static_cast<double>(axis.start +
                                                                 static_cast<std::int64_t>(i) - t)));
        const std::vector<FuzzySet> args{FuzzySet(base, wmu),
                                         FuzzySet(base, s.memberships())};
        CHECK(std::fabs(clipped[0].degree - fq_most(args)) <= 1e-12);
    }
}

TEST_CASE("threshold observable is strict") {
    const std::vector<SlidePoint> pts{{0, 0.81, false}, {1, 0.8, false}, {2, 0.0, true}};
    const auto obs = threshold_observable(pts, 0.8);
    CHECK(obs.flags == std::vector<bool>{true, false, false});
    CHECK(obs.threshold == 0.8);
    CHECK_THROWS_AS(threshold_observable(pts, 1.5), ArgumentError);
}

TEST_CASE("sliding validates arity") {
    const TimeAxis axis{0, 5};
    const std::vector<SignalTerm> two{{constant_signal(axis, 1.0), 0},
                                      {constant_signal(axis, 1.0), 0}};
    const TemporalWindow w(FuzzyNumber::trapezoid(-2, -1, 0, 0));
    CHECK_THROWS_AS(sliding_evaluate(most_fa(), w, two, range(0, 4)), ArgumentError);
}
