/** @file parser.hpp
 *  Input language for algebra expressions: a small recursive-descent
 *  grammar over generator and root-vector names, the coefficient
 *  parameters, q-brackets, and tau.
 *
 *      expr   := ['-'] term (('+'|'-') term)*
 *      term   := factor (('*'|'/') factor)*
 *      factor := atom ('^' ['-'] int)?
 *      atom   := int | ident | 'tau' '(' expr ')' | '(' expr ')'
 *              | '[' expr ',' expr ']' '_' '{' expr '}'
 *
 *  Whitespace is insignificant. Parsing is field-independent; evaluation
 *  happens against a concrete engine, where scalar symbols resolve to
 *  the active coefficient field.
 */
#pragma once

#include <memory>
#include <string>

#include "engine.hpp"

namespace ursg2 {

struct Expr {
    enum class Kind { Num, Sym, Pow, Neg, Add, Sub, Mul, Div, QBracket, Tau };
    Kind kind;
    long num = 0;      // Num: literal value; Pow: exponent
    std::string sym;   // Sym: identifier text
    std::shared_ptr<const Expr> a, b, q;  // operands; q is the bracket subscript
    int line = 1, col = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parse a complete expression; trailing input is a syntax error.
ExprPtr parse_expr(const std::string& input);

namespace detail {

/// The coefficient of a scalar element (a multiple of the empty monomial).
template <typename F>
typename F::Elem as_scalar(const Engine<F>& e, const Element<F>& x) {
    if (x.terms.empty()) return e.field().from_long(0);
    if (x.terms.size() == 1 && x.terms.begin()->first == unit_mono())
        return x.terms.begin()->second;
    throw Error(Error::Parse, "expected a scalar expression");
}

}  // namespace detail

template <typename F>
Element<F> eval_expr(const Engine<F>& e, const Expr& x) {
    const F& f = e.field();
    using Elem = typename F::Elem;
    switch (x.kind) {
        case Expr::Kind::Num:
            return e.scale(e.one(), f.from_long(x.num));
        case Expr::Kind::Sym: {
            if (x.sym == "r") return e.scale(e.one(), e.R());
            if (x.sym == "s") return e.scale(e.one(), e.S());
            if (x.sym == "theta") {
                if constexpr (requires { f.theta(); })
                    return e.scale(e.one(), f.theta());
                throw Error(Error::UnknownSymbol,
                            "theta is defined only in root mode");
            }
            const int rank = letter_rank(x.sym);
            if (rank < 0)
                throw Error(Error::UnknownSymbol, "unknown symbol: " + x.sym);
            return e.gen(rank);
        }
        case Expr::Kind::Pow: {
            const auto base = eval_expr(e, *x.a);
            if (base.terms.size() == 1 &&
                base.terms.begin()->first == unit_mono())
                return e.scale(e.one(),
                               f.pow(base.terms.begin()->second, x.num));
            if (x.num >= 0) return e.pow(base, x.num);
            // Negative powers exist only for scalar multiples of torus
            // monomials.
            if (base.terms.size() == 1) {
                const auto& [m, c] = *base.terms.begin();
                bool torus_only = true;
                for (int k = 0; k < kLetters; ++k)
                    if (m[k] != 0 && !is_torus_rank(k)) torus_only = false;
                if (torus_only) {
                    Word w;
                    for (int k = 6; k < 10; ++k)
                        if (m[k] != 0)
                            w.push_back({k, static_cast<int>(m[k] * x.num)});
                    return e.normalize(f.pow(c, x.num), w);
                }
            }
            throw Error(Error::BadExponent,
                        "negative power of a non-invertible element");
        }
        case Expr::Kind::Neg:
            return e.scale(eval_expr(e, *x.a), f.from_long(-1));
        case Expr::Kind::Add:
            return e.add(eval_expr(e, *x.a), eval_expr(e, *x.b));
        case Expr::Kind::Sub:
            return e.sub(eval_expr(e, *x.a), eval_expr(e, *x.b));
        case Expr::Kind::Mul:
            return e.mul(eval_expr(e, *x.a), eval_expr(e, *x.b));
        case Expr::Kind::Div: {
            const auto num = eval_expr(e, *x.a);
            const Elem den = detail::as_scalar(e, eval_expr(e, *x.b));
            if (f.is_zero(den))
                throw Error(Error::DivisionByZero, "division by zero");
            return e.scale(num, f.inv(den));
        }
        case Expr::Kind::QBracket: {
            const auto a = eval_expr(e, *x.a);
            const auto b = eval_expr(e, *x.b);
            const Elem q = detail::as_scalar(e, eval_expr(e, *x.q));
            return e.sub(e.mul(a, b), e.scale(e.mul(b, a), q));
        }
        case Expr::Kind::Tau: {
            const auto a = eval_expr(e, *x.a);
            if constexpr (requires(const Elem& z) { z.swapped_vars(); }) {
                Element<F> out;
                for (const auto& [m, c] : e.tau_mirror(a).terms)
                    out.add_term(f, m, c.swapped_vars());
                return out;
            } else {
                throw Error(Error::Mode, "tau requires generic mode");
            }
        }
    }
    throw Error(Error::Internal, "unhandled expression node");
}

template <typename F>
Element<F> eval_string(const Engine<F>& e, const std::string& input) {
    return eval_expr(e, *parse_expr(input));
}

}  // namespace ursg2
