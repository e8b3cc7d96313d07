#include <doctest.h>

#include <cmath>
#include <vector>

#include "fuzzquant/errors.hpp"
#include "fuzzquant/summarizer.hpp"
#include "test_support.hpp"

using namespace fq;

namespace {

ProportionalPartition quantity_partition() {
    return ProportionalPartition(
        {
            {"nearly none", FuzzyNumber::trapezoid(0, 0, 0, 0.25)},
            {"a few", FuzzyNumber::trapezoid(0, 0.25, 0.25, 0.5)},
            {"several", FuzzyNumber::trapezoid(0.25, 0.5, 0.5, 0.75)},
            {"many", FuzzyNumber::trapezoid(0.5, 0.75, 0.75, 1)},
            {"nearly all", FuzzyNumber::trapezoid(0.75, 1, 1, 1)},
        },
        "quantity");
}

LinguisticVariable temperature_variable() {
    return LinguisticVariable(
        "temperature", 0.0, 40.0,
        {
            {"very low", FuzzyNumber::trapezoid(-10, 0, 0, 10)},
            {"low", FuzzyNumber::trapezoid(0, 10, 10, 20)},
            {"warm", FuzzyNumber::trapezoid(10, 20, 20, 30)},
            {"hot", FuzzyNumber::trapezoid(20, 30, 30, 40)},
            {"very hot", FuzzyNumber::trapezoid(30, 40, 40, 50)},
        });
}

// The degrees of the april temperature example, used as a fixture input.
EvaluationMatrix april_matrix() {
    EvaluationMatrix m;
    m.row_labels = {"very low", "low", "warm", "hot", "very hot"};
    m.col_labels = {"nearly none", "a few", "several", "many", "nearly all"};
    m.cells = {
        {1, 0, 0, 0, 0},
        {0, 0.72, 0.28, 0, 0},
        {0, 0, 0.28, 0.72, 0},
        {1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0},
    };
    m.method = "fixture";
    m.data_id = "april";
    return m;
}

}  // namespace

TEST_CASE("build_matrix concentrates plateau data on the extreme quantifiers") {
    // All values deep inside the 'warm' plateau.
    const std::vector<double> values{20, 20, 20, 20};
    const auto m = build_matrix(values, temperature_variable(), quantity_partition(),
                                FuzzificationMethod::md());
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 5);
    // warm row: ratio 1 -> all mass on "nearly all".
    CHECK(m.cells[2][4] == 1.0);
    CHECK(m.cells[2][0] == 0.0);
    // hot row: ratio 0 -> all mass on "nearly none".
    CHECK(m.cells[3][0] == 1.0);
    CHECK(m.cells[3][4] == 0.0);
}

TEST_CASE("build_matrix rejects empty data") {
    CHECK_THROWS_AS(build_matrix(std::vector<double>{}, temperature_variable(),
                                 quantity_partition(), FuzzificationMethod::md()),
                    ArgumentError);
}

TEST_CASE("ruspini row sums reach 1 for deterministic methods") {
    REQUIRE(ruspini_check(quantity_partition()).ok);
    fqtest::Rng rng(83);
    std::uniform_real_distribution<double> value(-2.0, 42.0);
    std::uniform_int_distribution<std::size_t> size(1, 18);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> values(size(rng));
        for (auto& v : values) v = value(rng);
        for (const auto method :
             {FuzzificationMethod::md(), FuzzificationMethod::i(),
              FuzzificationMethod::a_exact(), FuzzificationMethod::a_dp()}) {
            const auto m = build_matrix(values, temperature_variable(), quantity_partition(),
                                        method);
            for (const auto& row : m.cells) {
                double sum = 0.0;
                for (double cell : row) sum += cell;
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("best_single on the april warm row") {
    EvaluationMatrix warm;
    warm.row_labels = {"warm"};
    warm.col_labels = april_matrix().col_labels;
    warm.cells = {{0, 0, 0.28, 0.72, 0}};
    const auto r = best_single(warm, 0.5, 0.1);
    CHECK(r.adequate);
    CHECK(r.best.quantifier == "many");
    CHECK(r.best.label == "warm");
    CHECK(r.best.degree == 0.72);
    REQUIRE(r.runner_up.has_value());
    CHECK(r.runner_up->degree == 0.28);
}

TEST_CASE("best_single ties and low degrees are none-adequate") {
    EvaluationMatrix m;
    m.row_labels = {"a", "b"};
    m.col_labels = {"q1", "q2"};

    m.cells = {{0.7, 0.1}, {0.7, 0.0}};
    const auto tie = best_single(m, 0.5, 0.1);
    CHECK_FALSE(tie.adequate);
    CHECK(tie.best.degree == 0.7);
    REQUIRE(tie.runner_up.has_value());
    CHECK(tie.runner_up->degree == 0.7);

    m.cells = {{0.3, 0.1}, {0.2, 0.0}};
    CHECK_FALSE(best_single(m, 0.5, 0.1).adequate);
}

TEST_CASE("best_single argmax is invariant under monotone rescaling") {
    fqtest::Rng rng(89);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        EvaluationMatrix m;
        m.row_labels = {"r1", "r2", "r3"};
        m.col_labels = {"c1", "c2", "c3", "c4"};
        m.cells.assign(3, std::vector<double>(4));
        for (auto& row : m.cells)
            for (auto& cell : row) cell = unit(rng);

        EvaluationMatrix scaled = m;
        for (auto& row : scaled.cells)
            for (auto& cell : row) cell = cell * cell;  // strictly monotone on [0,1]

        const auto a = best_single(m, 0.0, 0.0);
        const auto b = best_single(scaled, 0.0, 0.0);
        CHECK(a.best.quantifier == b.best.quantifier);
        CHECK(a.best.label == b.best.label);
    }
}

TEST_CASE("greedy extraction reproduces the april summary") {
    const auto m = april_matrix();
    const auto defaults = greedy_extract(m, {});
    REQUIRE(defaults.size() == 2);
    CHECK(defaults[0].quantifier_text() == "many");
    CHECK(defaults[0].label == "warm");
    CHECK(defaults[0].degree == 0.72);
    CHECK(defaults[1].quantifier_text() == "a few");
    CHECK(defaults[1].label == "low");
    CHECK(defaults[1].degree == 0.72);

    GreedyParams keep_bottom;
    keep_bottom.suppress_bottom = false;
    const auto full = greedy_extract(m, keep_bottom);
    REQUIRE(full.size() == 5);
    CHECK(full[0].quantifier_text() == "nearly none");
    CHECK(full[0].label == "very low");
    CHECK(full[1].label == "hot");
    CHECK(full[2].label == "very hot");
    CHECK(full[3].label == "warm");
    CHECK(full[4].label == "low");
}

TEST_CASE("greedy extraction on an all-zero matrix is empty") {
    EvaluationMatrix m;
    m.row_labels = {"a", "b"};
    m.col_labels = {"q1", "q2"};
    m.cells = {{0, 0}, {0, 0}};
    CHECK(greedy_extract(m, {}).empty());
}

TEST_CASE("greedy output degrees respect tau and are deterministic") {
    fqtest::Rng rng(97);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        EvaluationMatrix m;
        m.row_labels = {"r1", "r2", "r3", "r4"};
        m.col_labels = {"c1", "c2", "c3"};
        m.cells.assign(4, std::vector<double>(3));
        for (auto& row : m.cells)
            for (auto& cell : row) cell = unit(rng);
        GreedyParams params;
        params.tau = 0.4;
        params.suppress_bottom = false;
        const auto a = greedy_extract(m, params);
        const auto b = greedy_extract(m, params);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].degree >= params.tau);
            CHECK(a[i].label == b[i].label);
            CHECK(a[i].quantifier_text() == b[i].quantifier_text());
        }
    }
}

TEST_CASE("merge_adjacent merges maximal runs and clamps the sum") {
    const std::vector<double> row{0, 0.28, 0.72, 0, 0};
    const auto merged = merge_adjacent(row, 0.2);
    REQUIRE(merged.size() == 4);
    CHECK(merged[1].first == 1);
    CHECK(merged[1].last == 2);
    CHECK(merged[1].degree == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(merged[1].merged());

    const std::vector<double> lonely{1, 0, 0, 0, 0};
    const auto untouched = merge_adjacent(lonely, 0.2);
    CHECK(untouched.size() == 5);
    for (const auto& c : untouched) CHECK_FALSE(c.merged());

    const std::vector<double> sparse{0.5, 0.1, 0.5, 0.1, 0.5};
    CHECK(merge_adjacent(sparse, 0.2).size() == 5);
}

TEST_CASE("merged quantifier evaluation matches the summed degrees") {
    const auto pp = quantity_partition();
    const auto lv = temperature_variable();
    fqtest::Rng rng(101);
    std::uniform_real_distribution<double> value(0.0, 40.0);
    for (const auto method : {FuzzificationMethod::md(), FuzzificationMethod::a_dp()}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> values(12);
            for (auto& v : values) v = value(rng);
            const auto m = build_matrix(values, lv, pp, method);
            for (std::size_t j = 0; j < m.rows(); ++j) {
                const auto merged = merge_adjacent(m.cells[j], 0.2);
                for (const auto& cell : merged) {
                    if (!cell.merged()) continue;
                    const auto q = merged_partition_quantifier(pp, cell.first, cell.last);
                    const FuzzySet x = fuzzify_values(values, lv.labels()[j].fn);
                    const double direct = fuzzify(q, method)({x});
                    CHECK(std::fabs(direct - cell.degree) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("rate_search finds the crisp ratio with the smallest-h tie break") {
    const auto base = BaseSet::indexed(10);
    const FuzzySet x1 = FuzzySet::from_crisp(CrispSet::full(base));
    const FuzzySet x2 = FuzzySet::from_crisp(CrispSet::from_mask(base, 0x7F));  // 7 of 10
    const auto r = rate_search(x1, x2, 0.2, 0.025, FuzzificationMethod::md());
    CHECK(r.r1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.r2 == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(r.degree == 1.0);
    CHECK_FALSE(r.all_zero);
}

TEST_CASE("rate_search on identical crisp sets covers ratio 1") {
    const auto base = BaseSet::indexed(6);
    const FuzzySet x = FuzzySet::from_crisp(CrispSet::full(base));
    const auto r = rate_search(x, x, 0.2, 0.05, FuzzificationMethod::md());
    CHECK(r.degree == 1.0);
    CHECK(r.r1 <= 1.0);
    CHECK(r.r2 >= 1.0 - 1e-12);
}

TEST_CASE("rate_search reports the all-zero condition on an empty restriction") {
    const auto base = BaseSet::indexed(5);
    const FuzzySet none(base, std::vector<double>(5, 0.0));
    const FuzzySet any = FuzzySet::from_crisp(CrispSet::full(base));
    const auto r = rate_search(none, any, 0.2, 0.05, FuzzificationMethod::a_dp());
    CHECK(r.all_zero);
    CHECK(r.degree == 0.0);
}

TEST_CASE("rate_search parameter validation") {
    const auto base = BaseSet::indexed(3);
    const FuzzySet x = FuzzySet::from_crisp(CrispSet::full(base));
    CHECK_THROWS_AS(rate_search(x, x, 0.0, 0.05, FuzzificationMethod::md()), ArgumentError);
    CHECK_THROWS_AS(rate_search(x, x, 1.5, 0.05, FuzzificationMethod::md()), ArgumentError);
    CHECK_THROWS_AS(rate_search(x, x, 0.2, 0.0, FuzzificationMethod::md()), ArgumentError);
    CHECK_THROWS_AS(rate_search(x, x, 0.2, 0.3, FuzzificationMethod::md()), ArgumentError);
}

TEST_CASE("rate_search degree is nondecreasing in delta_max") {
    fqtest::Rng rng(103);
    for (int trial = 0; trial < 15; ++trial) {
        const auto base = BaseSet::indexed(8);
        const FuzzySet x1 = fqtest::random_fuzzy_set(rng, base);
        const FuzzySet x2 = fqtest::random_fuzzy_set(rng, base);
        const auto narrow = rate_search(x1, x2, 0.1, 0.025, FuzzificationMethod::a_dp());
        const auto wide = rate_search(x1, x2, 0.3, 0.025, FuzzificationMethod::a_dp());
        CHECK(wide.degree >= narrow.degree - 1e-12);
    }
}

TEST_CASE("rate_search equals an independent full-grid maximizer") {
    fqtest::Rng rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        const auto base = BaseSet::indexed(9);
        const FuzzySet x1 = fqtest::random_fuzzy_set(rng, base);
        const FuzzySet x2 = fqtest::random_fuzzy_set(rng, base);
        const double delta = 0.2, step = 0.05;
        const auto got = rate_search(x1, x2, delta, step, FuzzificationMethod::md());

        double best_h = 0.0, best_degree = -1.0;
        for (long k = 0;; ++k) {
            const double h = k * step;
            if (h > 1.0 - delta + 1e-9) break;
            const double deg =
                fuzzify(q_rate(h, std::min(1.0, h + delta)), FuzzificationMethod::md())(
                    {x1, x2});
            if (deg > best_degree) {
                best_degree = deg;
                best_h = h;
            }
        }
        CHECK(got.r1 == best_h);
        CHECK(got.degree == best_degree);
    }
}
