#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzquant/errors.hpp"

namespace fq::cli {

// One quantifier argument: a series, optionally fuzzified by a label and
// displaced by an integer shift.
struct ExprTerm {
    std::string series;
    std::optional<std::string> label;
    std::optional<std::int64_t> shift;

    bool operator==(const ExprTerm&) const = default;
};

// expr := QUANT '(' WINDOW ( ',' term )+ ')'
// term := SERIES ( 'is' LABEL )? ( 'shift' INT )?
struct ExpressionAst {
    std::string quantifier;
    std::string window;
    std::vector<ExprTerm> terms;

    bool operator==(const ExpressionAst&) const = default;
};

class ParseError : public ArgumentError {
public:
    ParseError(std::string message, int line, int col, std::string token);

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int col_;
    std::string token_;
};

ExpressionAst parse_expression(std::string_view text);

// Canonical text form; parse(to_text(ast)) == ast.
std::string to_text(const ExpressionAst& ast);

// Parses a bare term ("humidity is high shift -1"), used by rate-search
// column bindings.
ExprTerm parse_term(std::string_view text);

}  // namespace fq::cli
