#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fuzzquant/cli/expression.hpp"

using namespace fq::cli;

TEST_CASE("parses the oil pattern") {
    const auto ast = parse_expression("most(last_five_years, oil is slight_increase)");
    CHECK(ast.quantifier == "most");
    CHECK(ast.window == "last_five_years");
    REQUIRE(ast.terms.size() == 1);
    CHECK(ast.terms[0].series == "oil");
    CHECK(ast.terms[0].label == "slight_increase");
    CHECK_FALSE(ast.terms[0].shift.has_value());
}

TEST_CASE("parses ternary expressions and shifts") {
    const auto ast = parse_expression("sim80(last_month, temp is hot, humidity is high)");
    CHECK(ast.quantifier == "sim80");
    CHECK(ast.window == "last_month");
    REQUIRE(ast.terms.size() == 2);
    CHECK(ast.terms[0].series == "temp");
    CHECK(ast.terms[1].label == "high");

    const auto shifted = parse_expression("q(w, a shift -3, b is l shift 2)");
    REQUIRE(shifted.terms.size() == 2);
    CHECK(shifted.terms[0].shift == -3);
    CHECK_FALSE(shifted.terms[0].label.has_value());
    CHECK(shifted.terms[1].shift == 2);
    CHECK(shifted.terms[1].label == "l");
}

TEST_CASE("truncated input reports the position") {
    try {
        parse_expression("most(");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() == 6);
    }
}

TEST_CASE("syntax errors carry line, column and token") {
    try {
        parse_expression("most(w oil)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() == 8);
        CHECK(e.token() == "oil");
    }

    try {
        parse_expression("most(w,\n  x is)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse_expression("most(w, a) extra"), ParseError);
    CHECK_THROWS_AS(parse_expression("most(w)"), ParseError);   // needs a term
    CHECK_THROWS_AS(parse_expression("(w, a)"), ParseError);
    CHECK_THROWS_AS(parse_expression("most(w, 3)"), ParseError);
    CHECK_THROWS_AS(parse_expression("most(w, is is x)"), ParseError);
    CHECK_THROWS_AS(parse_expression("most(w, a shift b)"), ParseError);
    CHECK_THROWS_AS(parse_expression("most(w, a # b)"), ParseError);
}

TEST_CASE("bare terms parse for rate-search bindings") {
    const auto term = parse_term("humidity is high shift -1");
    CHECK(term.series == "humidity");
    CHECK(term.label == "high");
    CHECK(term.shift == -1);
    CHECK_THROWS_AS(parse_term("a b"), ParseError);
}

TEST_CASE("print/parse round trip on hand-written samples") {
    for (const char* text :
         {"most(last_five_years, oil is slight_increase)",
          "sim80(last_month, temp is hot, humidity is high)",
          "q(w, a shift -3, b is l shift 2)", "q(w, a shift 0)", "q(w, a, b, c)"}) {
        const auto ast = parse_expression(text);
        CHECK(parse_expression(to_text(ast)) == ast);
    }
}

TEST_CASE("print/parse round trip over generated expressions") {
    std::mt19937_64 rng(20240915);
    const std::vector<std::string> names{"most", "w",  "oil",   "x",   "temp_1",
                                         "_a",   "ab", "s_2_b", "hum", "q9"};
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<std::int64_t> shift(-50, 50);

    for (int trial = 0; trial < 1000; ++trial) {
        ExpressionAst ast;
        ast.quantifier = names[pick(rng)];
        ast.window = names[pick(rng)];
        const int terms = term_count(rng);
        for (int i = 0; i < terms; ++i) {
            ExprTerm t;
            t.series = names[pick(rng)];
            if (coin(rng)) t.label = names[pick(rng)];
            if (coin(rng)) t.shift = shift(rng);
            ast.terms.push_back(std::move(t));
        }
        const std::string text = to_text(ast);
        CAPTURE(text);
        CHECK(parse_expression(text) == ast);
    }
}
