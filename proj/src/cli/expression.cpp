#include "fuzzquant/cli/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace fq::cli {

namespace {

struct Token {
    enum class Type { Ident, Int, LParen, RParen, Comma, End };
    Type type;
    std::string text;
    int line;
    int col;
};

const char* type_name(Token::Type t) {
    switch (t) {
        case Token::Type::Ident: return "identifier";
        case Token::Type::Int: return "integer";
        case Token::Type::LParen: return "'('";
        case Token::Type::RParen: return "')'";
        case Token::Type::Comma: return "','";
        case Token::Type::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (ch == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
                continue;
            }
            const int line = line_, col = col_;
            if (ch == '(') {
                tokens.push_back({Token::Type::LParen, "(", line, col});
                advance();
            } else if (ch == ')') {
                tokens.push_back({Token::Type::RParen, ")", line, col});
                advance();
            } else if (ch == ',') {
                tokens.push_back({Token::Type::Comma, ",", line, col});
                advance();
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string word;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    word += text_[pos_];
                    advance();
                }
                tokens.push_back({Token::Type::Ident, std::move(word), line, col});
            } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                       (ch == '-' && pos_ + 1 < text_.size() &&
                        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                std::string num;
                if (ch == '-') {
                    num += '-';
                    advance();
                }
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    num += text_[pos_];
                    advance();
                }
                tokens.push_back({Token::Type::Int, std::move(num), line, col});
            } else {
                throw ParseError("unexpected character '" + std::string(1, ch) + "'", line,
                                 col, std::string(1, ch));
            }
        }
        tokens.push_back({Token::Type::End, "", line_, col_});
        return tokens;
    }

private:
    void advance() {
        ++pos_;
        ++col_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExpressionAst parse_expression() {
        ExpressionAst ast;
        ast.quantifier = expect_name("quantifier name");
        expect(Token::Type::LParen);
        ast.window = expect_name("window name");
        expect(Token::Type::Comma);
        ast.terms.push_back(parse_term_body());
        while (peek().type == Token::Type::Comma) {
            next();
            ast.terms.push_back(parse_term_body());
        }
        expect(Token::Type::RParen);
        expect(Token::Type::End);
        return ast;
    }

    ExprTerm parse_single_term() {
        ExprTerm term = parse_term_body();
        expect(Token::Type::End);
        return term;
    }

private:
    ExprTerm parse_term_body() {
        ExprTerm term;
        term.series = expect_name("series name");
        if (peek().type == Token::Type::Ident && peek().text == "is") {
            next();
            term.label = expect_name("label name");
        }
        if (peek().type == Token::Type::Ident && peek().text == "shift") {
            next();
            const Token t = expect(Token::Type::Int);
            term.shift = std::stoll(t.text);
        }
        return term;
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    Token expect(Token::Type type) {
        const Token& t = peek();
        if (t.type != type) fail(type_name(type), t);
        return next();
    }

    std::string expect_name(const char* what) {
        const Token& t = peek();
        if (t.type != Token::Type::Ident) fail(what, t);
        if (t.text == "is" || t.text == "shift")
            throw ParseError("'" + t.text + "' is a reserved word, expected " + what, t.line,
                             t.col, t.text);
        return next().text;
    }

    [[noreturn]] void fail(const std::string& expected, const Token& got) {
        const std::string shown = got.type == Token::Type::End ? "end of input" : "'" + got.text + "'";
        throw ParseError("expected " + expected + ", got " + shown, got.line, got.col,
                         got.text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::string message, int line, int col, std::string token)
    : ArgumentError("parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + message),
      line_(line), col_(col), token_(std::move(token)) {}

ExpressionAst parse_expression(std::string_view text) {
    return Parser(Lexer(text).run()).parse_expression();
}

ExprTerm parse_term(std::string_view text) {
    return Parser(Lexer(text).run()).parse_single_term();
}

std::string to_text(const ExpressionAst& ast) {
    std::string out = ast.quantifier + "(" + ast.window;
    for (const auto& term : ast.terms) {
        out += ", " + term.series;
        if (term.label) out += " is " + *term.label;
        if (term.shift) out += " shift " + std::to_string(*term.shift);
    }
    out += ")";
    return out;
}

}  // namespace fq::cli
