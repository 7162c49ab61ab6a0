/** @file laurent.hpp
 *  Sparse bivariate Laurent polynomials over an exact scalar field, in two
 *  fixed deformation variables (printed as "r" and "s").
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace ursg2 {

/// Exponent pair (a, b) for r^a * s^b.
using Expo = std::pair<int, int>;

/// Graded-lex order with r > s: higher total degree first, ties broken by
/// larger r-exponent. Used for leading terms and deterministic printing.
inline bool grlex_less(const Expo& x, const Expo& y) {
    int dx = x.first + x.second, dy = y.first + y.second;
    if (dx != dy) return dx < dy;
    return x.first < y.first;
}

template <class K>
class LaurentPoly {
public:
    using Terms = std::map<Expo, K>;

    LaurentPoly() = default;
    explicit LaurentPoly(const K& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    static LaurentPoly monomial(const K& c, int a, int b) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[{a, b}] = c;
        return p;
    }
    static LaurentPoly var_r() { return monomial(K(1), 1, 0); }
    static LaurentPoly var_s() { return monomial(K(1), 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0} &&
               terms_.begin()->second.is_one();
    }
    /// True when the support is a single exponent pair.
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Expo& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    void scale(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [e, v] : terms_) v *= c;
    }
    LaurentPoly scaled(const K& c) const {
        LaurentPoly p = *this;
        p.scale(c);
        return p;
    }
    /// Multiply by the monomial r^a s^b.
    LaurentPoly shifted(int a, int b) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(Expo{e.first + a, e.second + b}, c);
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Componentwise minimal exponents of the support (0 for the zero poly).
    Expo min_expo() const {
        if (terms_.empty()) return {0, 0};
        int ma = terms_.begin()->first.first, mb = terms_.begin()->first.second;
        for (const auto& [e, c] : terms_) {
            (void)c;
            ma = std::min(ma, e.first);
            mb = std::min(mb, e.second);
        }
        return {ma, mb};
    }

    Expo leading_expo() const {
        // grlex maximum of the support
        auto it = terms_.begin();
        Expo best = it->first;
        for (++it; it != terms_.end(); ++it)
            if (grlex_less(best, it->first)) best = it->first;
        return best;
    }
    const K& leading_coeff() const { return terms_.at(leading_expo()); }

    /// Swap the two variables (the exponent transposition r <-> s).
    LaurentPoly swapped_vars() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(Expo{e.second, e.first}, c);
        return p;
    }

    /// Deterministic rendering, grlex-descending, e.g. "r^2 - 2*r*s + s^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const typename Terms::value_type*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(),
                  [](const auto* x, const auto* y) { return grlex_less(y->first, x->first); });
        std::string out;
        bool first = true;
        for (const auto* t : order) {
            std::string cs = t->second.str();
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs = cs.substr(1);
            std::string mono = expo_str(t->first);
            std::string body;
            if (mono.empty()) {
                body = cs;
            } else if (cs == "1") {
                body = mono;
            } else {
                // Composite scalars (like zeta sums) need their own parens.
                if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
                    cs = "(" + cs + ")";
                body = cs + "*" + mono;
            }
            if (first) {
                out += negative ? "-" + body : body;
                first = false;
            } else {
                out += negative ? " - " + body : " + " + body;
            }
        }
        return out;
    }

private:
    static std::string expo_str(const Expo& e) {
        std::string m;
        if (e.first != 0) {
            m += "r";
            if (e.first != 1) m += "^" + std::to_string(e.first);
        }
        if (e.second != 0) {
            if (!m.empty()) m += "*";
            m += "s";
            if (e.second != 1) m += "^" + std::to_string(e.second);
        }
        return m;
    }

    Terms terms_;
};

}  // namespace ursg2
