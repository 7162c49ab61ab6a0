/** @file ratfunc.hpp
 *  Rational functions in the two deformation variables over an exact scalar
 *  field K, kept in a canonical reduced form:
 *
 *    value = num / den
 *
 *  where den is a true polynomial (no negative exponents), not divisible by
 *  either variable, monic with respect to the graded-lex leading term, and
 *  coprime to the polynomial part of num. Any pure monomial content of the
 *  value is carried on num, which is a Laurent polynomial. This form is
 *  unique, so equality is plain structural comparison.
 *
 *  The gcd of bivariate polynomials is computed with a primitive polynomial
 *  remainder sequence in (K[s])[r], using monic Euclid for the univariate
 *  content gcds. Sizes in this engine stay small, so the primitive PRS is
 *  the right tradeoff of simplicity over the subresultant variant.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "rat.hpp"

namespace ursg2 {

namespace polygcd {

/// Dense univariate polynomial over K; index is the degree in s.
template <class K>
using UPoly = std::vector<K>;

template <class K>
void utrim(UPoly<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class K>
bool uis_zero(const UPoly<K>& p) { return p.empty(); }

template <class K>
int udeg(const UPoly<K>& p) { return static_cast<int>(p.size()) - 1; }

template <class K>
UPoly<K> uadd(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r(std::max(a.size(), b.size()), K(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

template <class K>
UPoly<K> uscale(const UPoly<K>& a, const K& c) {
    if (c.is_zero()) return {};
    UPoly<K> r = a;
    for (auto& x : r) x *= c;
    return r;
}

template <class K>
UPoly<K> umul(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<K> r(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

/// Division with remainder over the field K; b must be nonzero.
template <class K>
std::pair<UPoly<K>, UPoly<K>> udivmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.empty()) throw Error(Error::DivisionByZero, "univariate division by zero");
    UPoly<K> rem = a, quo;
    const K lb_inv = b.back().inv();
    if (udeg(rem) >= udeg(b)) quo.assign(rem.size() - b.size() + 1, K(0));
    while (!rem.empty() && rem.size() >= b.size()) {
        size_t d = rem.size() - b.size();
        K c = rem.back() * lb_inv;
        quo[d] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[d + i] -= c * b[i];
        utrim(rem);
    }
    utrim(quo);
    return {quo, rem};
}

template <class K>
UPoly<K> uexact_div(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = udivmod(a, b);
    if (!r.empty()) throw Error(Error::Internal, "inexact univariate division");
    return q;
}

/// Monic gcd via Euclid; gcd(0, 0) = 0.
template <class K>
UPoly<K> ugcd(UPoly<K> a, UPoly<K> b) {
    while (!b.empty()) {
        auto [q, r] = udivmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) a = uscale(a, a.back().inv());
    return a;
}

/// Bivariate polynomial as a vector of s-polynomials; index is the r-degree.
template <class K>
using BPoly = std::vector<UPoly<K>>;

template <class K>
void btrim(BPoly<K>& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

template <class K>
bool bis_zero(const BPoly<K>& p) { return p.empty(); }

template <class K>
BPoly<K> bmul_upoly(const BPoly<K>& a, const UPoly<K>& c) {
    BPoly<K> r;
    r.reserve(a.size());
    for (const auto& co : a) r.push_back(umul(co, c));
    btrim(r);
    return r;
}

/// Content in (K[s])[r]: monic gcd of all r-coefficients.
template <class K>
UPoly<K> bcontent(const BPoly<K>& p) {
    UPoly<K> c;
    for (const auto& co : p)
        if (!co.empty()) c = ugcd(c, co);
    return c;
}

template <class K>
BPoly<K> bdiv_content(const BPoly<K>& p, const UPoly<K>& c) {
    BPoly<K> r;
    r.reserve(p.size());
    for (const auto& co : p) r.push_back(co.empty() ? UPoly<K>{} : uexact_div(co, c));
    return r;
}

/// Pseudo-remainder of a by b in (K[s])[r], up to content (which the caller
/// strips anyway). b must be nonzero with deg_r(b) <= deg_r(a) on entry.
template <class K>
BPoly<K> bprem(BPoly<K> a, const BPoly<K>& b) {
    const UPoly<K>& lb = b.back();
    const size_t db = b.size();
    while (!a.empty() && a.size() >= db) {
        UPoly<K> la = a.back();
        size_t shift = a.size() - db;
        // a <- lb * a - la * r^shift * b, which kills the leading term.
        BPoly<K> next(std::max(a.size() - 1, shift + db - 1));
        for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = umul(a[i], lb);
        for (size_t i = 0; i + 1 < db; ++i) {
            UPoly<K> t = umul(la, b[i]);
            UPoly<K> neg = uscale(t, K(-1));
            next[shift + i] = uadd(next[shift + i], neg);
        }
        btrim(next);
        a = std::move(next);
    }
    return a;
}

/// Primitive part; the K-unit is normalized so the top coefficient of the
/// leading r-coefficient is 1.
template <class K>
BPoly<K> bprimitive(const BPoly<K>& p) {
    if (p.empty()) return {};
    UPoly<K> c = bcontent(p);
    BPoly<K> pp = bdiv_content(p, c);
    const K u = pp.back().back();
    if (!u.is_one()) {
        const K ui = u.inv();
        for (auto& co : pp) co = uscale(co, ui);
    }
    return pp;
}

/// Gcd in K[r,s] via content/primitive split and a primitive PRS.
template <class K>
BPoly<K> bgcd(BPoly<K> a, BPoly<K> b) {
    if (bis_zero(a)) return bprimitive(b);
    if (bis_zero(b)) return bprimitive(a);
    UPoly<K> ca = bcontent(a), cb = bcontent(b);
    UPoly<K> cg = ugcd(ca, cb);
    a = bdiv_content(a, ca);
    b = bdiv_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!bis_zero(b)) {
        BPoly<K> r = bprem(a, b);
        if (!bis_zero(r)) r = bprimitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    a = bprimitive(a);
    return bmul_upoly(a, cg);
}

/// Exact division in (K[s])[r]; throws on any inexact step, which checks the
/// gcd result at the same time.
template <class K>
BPoly<K> bexact_div(BPoly<K> a, const BPoly<K>& b) {
    if (bis_zero(b)) throw Error(Error::DivisionByZero, "bivariate division by zero");
    BPoly<K> quo;
    if (a.size() >= b.size()) quo.resize(a.size() - b.size() + 1);
    while (!bis_zero(a)) {
        if (a.size() < b.size()) throw Error(Error::Internal, "inexact bivariate division");
        size_t shift = a.size() - b.size();
        UPoly<K> qc = uexact_div(a.back(), b.back());
        quo[shift] = qc;
        BPoly<K> next(a.size() - 1);
        for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = a[i];
        for (size_t i = 0; i + 1 < b.size(); ++i) {
            UPoly<K> t = uscale(umul(qc, b[i]), K(-1));
            next[shift + i] = uadd(next[shift + i], t);
        }
        btrim(next);
        a = std::move(next);
    }
    btrim(quo);
    return quo;
}

/// Conversion from a Laurent polynomial whose support has componentwise
/// minimal exponents (0, 0).
template <class K>
BPoly<K> from_laurent(const LaurentPoly<K>& p) {
    BPoly<K> b;
    for (const auto& [e, c] : p.terms()) {
        if (e.first < 0 || e.second < 0)
            throw Error(Error::Internal, "negative exponent in polynomial conversion");
        if (b.size() <= static_cast<size_t>(e.first)) b.resize(e.first + 1);
        auto& co = b[e.first];
        if (co.size() <= static_cast<size_t>(e.second)) co.resize(e.second + 1, K(0));
        co[e.second] = c;
    }
    btrim(b);
    return b;
}

template <class K>
LaurentPoly<K> to_laurent(const BPoly<K>& b) {
    LaurentPoly<K> p;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j)
            if (!b[i][j].is_zero()) p.add_term({static_cast<int>(i), static_cast<int>(j)}, b[i][j]);
    return p;
}

}  // namespace polygcd

template <class K>
class RatFunc {
public:
    RatFunc() : den_(K(1)) {}
    explicit RatFunc(const K& c) : num_(c), den_(K(1)) {}
    RatFunc(LaurentPoly<K> num, LaurentPoly<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RatFunc from_long(long v) { return RatFunc(K(v)); }
    static RatFunc var_r() { return RatFunc(LaurentPoly<K>::var_r(), LaurentPoly<K>(K(1))); }
    static RatFunc var_s() { return RatFunc(LaurentPoly<K>::var_s(), LaurentPoly<K>(K(1))); }
    /// r^a * s^b, exponents of either sign.
    static RatFunc monomial(const K& c, int a, int b) {
        RatFunc f;
        f.num_ = LaurentPoly<K>::monomial(c, a, b);
        return f;
    }

    const LaurentPoly<K>& num() const { return num_; }
    const LaurentPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc f = *this;
        f.num_ = -f.num_;
        return f;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc f;
            f.num_ = a.num_ + b.num_;
            return f;
        }
        if (a.den_ == b.den_) {
            RatFunc f(a.num_ + b.num_, a.den_);
            return f;
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc f;
            f.num_ = a.num_ * b.num_;
            return f;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw Error(Error::DivisionByZero, "inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc acc = RatFunc(K(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Exchange the two variables; the canonical form is restored afterward
    /// because monic-ness under grlex is not preserved by the swap.
    RatFunc swapped_vars() const {
        return RatFunc(num_.swapped_vars(), den_.swapped_vars());
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return wrap(num_) + " / " + wrap(den_);
    }

private:
    static std::string wrap(const LaurentPoly<K>& p) {
        std::string s = p.str();
        if (p.term_count() > 1 || s.find('*') != std::string::npos || (!s.empty() && s[0] == '-'))
            return "(" + s + ")";
        return s;
    }

    void reduce() {
        if (den_.is_zero())
            throw Error(Error::DivisionByZero, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly<K>(K(1));
            return;
        }
        // Pull all monomial content onto the numerator.
        Expo nm = num_.min_expo(), dm = den_.min_expo();
        LaurentPoly<K> npoly = num_.shifted(-nm.first, -nm.second);
        LaurentPoly<K> dpoly = den_.shifted(-dm.first, -dm.second);
        int sr = nm.first - dm.first, ss = nm.second - dm.second;

        if (!dpoly.is_one()) {
            auto nb = polygcd::from_laurent(npoly);
            auto db = polygcd::from_laurent(dpoly);
            auto g = polygcd::bgcd(nb, db);
            bool unit = g.size() == 1 && g[0].size() == 1;
            if (!unit) {
                nb = polygcd::bexact_div(std::move(nb), g);
                db = polygcd::bexact_div(std::move(db), g);
            } else if (!g[0][0].is_one()) {
                const K gi = g[0][0].inv();
                for (auto& co : nb) co = polygcd::uscale(co, gi);
                for (auto& co : db) co = polygcd::uscale(co, gi);
            }
            npoly = polygcd::to_laurent(nb);
            dpoly = polygcd::to_laurent(db);
        }
        if (!dpoly.is_one()) {
            const K lc = dpoly.leading_coeff();
            if (!lc.is_one()) {
                const K li = lc.inv();
                npoly.scale(li);
                dpoly.scale(li);
            }
        }
        num_ = npoly.shifted(sr, ss);
        den_ = std::move(dpoly);
    }

    LaurentPoly<K> num_;
    LaurentPoly<K> den_;
};

}  // namespace ursg2
