/** @file parser.cpp
 *  Lexer and recursive-descent parser for the expression language. The
 *  grammar is documented in parser.hpp; errors carry line and column.
 */
#include "parser.hpp"

#include <cctype>
#include <utility>

namespace ursg2 {

namespace {

struct Token {
    enum class Kind { Int, Ident, Op, End };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            step();
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Token::Kind::End;
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Token::Kind::Int;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                cur_.text += src_[pos_];
                step();
            }
            cur_.value = std::stol(cur_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            cur_.kind = Token::Kind::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '\'')) {
                cur_.text += src_[pos_];
                step();
            }
            return;
        }
        static const std::string ops = "+-*/^()[]{},_";
        if (ops.find(c) != std::string::npos) {
            cur_.kind = Token::Kind::Op;
            cur_.text = std::string(1, c);
            step();
            return;
        }
        throw Error(Error::Parse, where() + "unexpected character '" + std::string(1, c) + "'");
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string where() const {
        return "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": ";
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw Error(Error::Parse, where(t) + "unexpected trailing input '" + t.text + "'");
        return e;
    }

private:
    static std::string where(const Token& t) {
        return "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) + ": ";
    }

    bool at_op(const char* s) const {
        return lex_.peek().kind == Token::Kind::Op && lex_.peek().text == s;
    }

    Token expect_op(const char* s) {
        if (!at_op(s))
            throw Error(Error::Parse, where(lex_.peek()) + "expected '" + s + "'");
        return lex_.take();
    }

    static std::shared_ptr<Expr> node(Expr::Kind kind, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    ExprPtr expr() {
        ExprPtr left;
        if (at_op("-")) {
            Token t = lex_.take();
            auto n = node(Expr::Kind::Neg, t);
            n->a = term();
            left = n;
        } else {
            left = term();
        }
        while (at_op("+") || at_op("-")) {
            Token t = lex_.take();
            auto n = node(t.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, t);
            n->a = std::move(left);
            n->b = term();
            left = n;
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        for (;;) {
            if (at_op("*") || at_op("/")) {
                Token t = lex_.take();
                auto n = node(t.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, t);
                n->a = std::move(left);
                n->b = factor();
                left = n;
                continue;
            }
            // Juxtaposition is multiplication, so rendered monomials like
            // "E112 E1112" read back in.
            const Token& t = lex_.peek();
            const bool starts_atom = t.kind == Token::Kind::Int ||
                                     t.kind == Token::Kind::Ident || at_op("(") ||
                                     at_op("[");
            if (!starts_atom) break;
            auto n = node(Expr::Kind::Mul, t);
            n->a = std::move(left);
            n->b = factor();
            left = n;
        }
        return left;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!at_op("^")) return base;
        Token t = lex_.take();
        long sign = 1;
        if (at_op("-")) {
            lex_.take();
            sign = -1;
        }
        if (lex_.peek().kind != Token::Kind::Int)
            throw Error(Error::Parse, where(lex_.peek()) + "expected an integer exponent");
        Token expTok = lex_.take();
        auto n = node(Expr::Kind::Pow, t);
        n->a = std::move(base);
        n->num = sign * expTok.value;
        return n;
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            Token tok = lex_.take();
            auto n = node(Expr::Kind::Num, tok);
            n->num = tok.value;
            return n;
        }
        if (t.kind == Token::Kind::Ident) {
            Token tok = lex_.take();
            if (tok.text == "tau") {
                expect_op("(");
                auto n = node(Expr::Kind::Tau, tok);
                n->a = expr();
                expect_op(")");
                return n;
            }
            auto n = node(Expr::Kind::Sym, tok);
            n->sym = tok.text;
            return n;
        }
        if (at_op("(")) {
            lex_.take();
            ExprPtr inner = expr();
            expect_op(")");
            return inner;
        }
        if (at_op("[")) {
            Token tok = lex_.take();
            auto n = node(Expr::Kind::QBracket, tok);
            n->a = expr();
            expect_op(",");
            n->b = expr();
            expect_op("]");
            expect_op("_");
            expect_op("{");
            n->q = expr();
            expect_op("}");
            return n;
        }
        throw Error(Error::Parse,
                    where(t) + (t.kind == Token::Kind::End
                                    ? std::string("unexpected end of input")
                                    : "unexpected token '" + t.text + "'"));
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expr(const std::string& input) { return Parser(input).parse(); }

}  // namespace ursg2
