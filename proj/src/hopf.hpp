/** @file hopf.hpp
 *  Hopf structure on top of the straightening engine: coproduct, counit,
 *  antipode and its inverse, iterated coproducts into the tensor cube, and
 *  the left adjoint action. Coproducts and antipodes of composite root
 *  vectors are derived from their bracket definitions and memoized.
 */
#pragma once

#include <array>
#include <map>
#include <utility>

#include "engine.hpp"

namespace ursg2 {

template <typename F>
class Hopf {
public:
    using Elem = typename F::Elem;
    using Elt = Element<F>;
    using Key2 = std::pair<Mono16, Mono16>;
    using T2 = std::map<Key2, Elem>;
    using Key3 = std::array<Mono16, 3>;
    using T3 = std::map<Key3, Elem>;

    explicit Hopf(const Engine<F>& e) : e_(e), f_(e.field()) {}

    const Engine<F>& engine() const { return e_; }

    void t2_add_term(T2& t, const Mono16& a, const Mono16& b, const Elem& c) const {
        if (f_.is_zero(c)) return;
        Key2 k{a, b};
        auto it = t.find(k);
        if (it == t.end()) it = t.emplace(k, f_.from_long(0)).first;
        it->second = f_.add(it->second, c);
        if (f_.is_zero(it->second)) t.erase(it);
    }

    /// a (x) b for already-normalized elements.
    T2 t2_simple(const Elt& a, const Elt& b) const {
        T2 out;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) t2_add_term(out, ma, mb, f_.mul(ca, cb));
        return out;
    }

    T2 t2_add(T2 x, const T2& y) const {
        for (const auto& [k, c] : y) t2_add_term(x, k.first, k.second, c);
        return x;
    }
    T2 t2_sub(T2 x, const T2& y) const {
        for (const auto& [k, c] : y) t2_add_term(x, k.first, k.second, f_.neg(c));
        return x;
    }
    T2 t2_scale(T2 x, const Elem& c) const {
        T2 out;
        for (const auto& [k, a] : x) t2_add_term(out, k.first, k.second, f_.mul(a, c));
        return out;
    }
    T2 t2_mul(const T2& x, const T2& y) const {
        T2 out;
        for (const auto& [kx, cx] : x)
            for (const auto& [ky, cy] : y) {
                const Elt& left = mono_prod(kx.first, ky.first);
                const Elt& right = mono_prod(kx.second, ky.second);
                Elem c = f_.mul(cx, cy);
                for (const auto& [ml, cl] : left.terms)
                    for (const auto& [mr, cr] : right.terms)
                        t2_add_term(out, ml, mr, f_.mul(c, f_.mul(cl, cr)));
            }
        return out;
    }
    T2 t2_one() const {
        T2 out;
        t2_add_term(out, unit_mono(), unit_mono(), f_.from_long(1));
        return out;
    }
    T2 t2_pow(const T2& x, long n) const {
        T2 acc = t2_one();
        for (long i = 0; i < n; ++i) acc = t2_mul(acc, x);
        return acc;
    }
    bool t2_is_zero(const T2& x) const { return x.empty(); }
    bool t2_eq(const T2& x, const T2& y) const { return t2_sub(x, y).empty(); }
    std::string t2_str(const T2& x) const {
        if (x.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : x) {
            if (!out.empty()) out += " + ";
            out += "(" + f_.str(c) + ")*" + Engine<F>::mono_str(k.first) + " (x) " +
                   Engine<F>::mono_str(k.second);
        }
        return out;
    }

    void t3_add_term(T3& t, const Key3& k, const Elem& c) const {
        if (f_.is_zero(c)) return;
        auto it = t.find(k);
        if (it == t.end()) it = t.emplace(k, f_.from_long(0)).first;
        it->second = f_.add(it->second, c);
        if (f_.is_zero(it->second)) t.erase(it);
    }
    T3 t3_sub(T3 x, const T3& y) const {
        for (const auto& [k, c] : y) t3_add_term(x, k, f_.neg(c));
        return x;
    }
    bool t3_eq(const T3& x, const T3& y) const { return t3_sub(x, y).empty(); }

    T2 delta(const Elt& x) const {
        T2 out;
        for (const auto& [m, c] : x.terms)
            out = t2_add(std::move(out), t2_scale(delta_mono(m), c));
        return out;
    }

    /// Coproduct of a single normal monomial, memoized; products of heavy
    /// elements revisit the same monomials constantly.
    const T2& delta_mono(const Mono16& m) const {
        auto it = delta_mono_memo_.find(m);
        if (it != delta_mono_memo_.end()) return it->second;
        T2 acc = t2_one();
        for (int k = 0; k < kLetters; ++k) {
            if (m[k] == 0) continue;
            if (is_torus_rank(k)) {
                T2 g;
                t2_add_term(g, torus_mono(k, m[k]), torus_mono(k, m[k]), f_.from_long(1));
                acc = t2_mul(acc, g);
            } else {
                acc = t2_mul(acc, t2_pow(delta_letter(k), m[k]));
            }
        }
        return delta_mono_memo_.emplace(m, std::move(acc)).first->second;
    }

    /// (Delta (x) id) Delta and (id (x) Delta) Delta; equality of the two is
    /// coassociativity.
    T3 coassoc_left(const Elt& x) const {
        T3 out;
        for (const auto& [k, c] : delta(x))
            for (const auto& [k2, c2] : delta(e_.monomial(k.first, f_.from_long(1))))
                t3_add_term(out, {k2.first, k2.second, k.second}, f_.mul(c, c2));
        return out;
    }
    T3 coassoc_right(const Elt& x) const {
        T3 out;
        for (const auto& [k, c] : delta(x))
            for (const auto& [k2, c2] : delta(e_.monomial(k.second, f_.from_long(1))))
                t3_add_term(out, {k.first, k2.first, k2.second}, f_.mul(c, c2));
        return out;
    }

    Elem counit(const Elt& x) const {
        Elem acc = f_.from_long(0);
        for (const auto& [m, c] : x.terms) {
            bool torus_only = true;
            for (int k = 0; k < kLetters && torus_only; ++k)
                if (m[k] != 0 && !is_torus_rank(k)) torus_only = false;
            if (torus_only) acc = f_.add(acc, c);
        }
        return acc;
    }

    Elt antipode(const Elt& x) const { return antipode_impl(x, false); }
    Elt antipode_inv(const Elt& x) const { return antipode_impl(x, true); }

    /// ad_l a (b) = sum a_(1) b S(a_(2)).
    Elt ad_left(const Elt& a, const Elt& b) const {
        Elt acc;
        for (const auto& [k, c] : delta(a)) {
            Elt piece = e_.mul(e_.monomial(k.first, f_.from_long(1)),
                               e_.mul(b, antipode(e_.monomial(k.second, f_.from_long(1)))));
            acc = e_.add(acc, e_.scale(piece, c));
        }
        return acc;
    }

private:
    static Mono16 torus_mono(int rank, int exp) {
        Mono16 m = unit_mono();
        m[rank] = exp;
        return m;
    }

    const T2& delta_letter(int rank) const {
        auto it = delta_memo_.find(rank);
        if (it != delta_memo_.end()) return it->second;
        T2 d;
        switch (rank) {
            case 0:
                d = t2_add(t2_simple(e_.gen(0), e_.one()), t2_simple(e_.gen(7), e_.gen(0)));
                break;
            case 5:
                d = t2_add(t2_simple(e_.gen(5), e_.one()), t2_simple(e_.gen(6), e_.gen(5)));
                break;
            case 10:
                d = t2_add(t2_simple(e_.one(), e_.gen(10)), t2_simple(e_.gen(10), e_.gen(8)));
                break;
            case 15:
                d = t2_add(t2_simple(e_.one(), e_.gen(15)), t2_simple(e_.gen(15), e_.gen(9)));
                break;
            default: {
                const auto& def = e_.composite_def(rank);
                const T2& dx = delta_letter(def.x);
                const T2& dy = delta_letter(def.y);
                d = t2_sub(t2_mul(dx, dy), t2_scale(t2_mul(dy, dx), def.c));
            }
        }
        return delta_memo_.emplace(rank, std::move(d)).first->second;
    }

    const Elt& s_letter(int rank, bool inverse) const {
        auto& memo = inverse ? sinv_memo_ : s_memo_;
        auto it = memo.find(rank);
        if (it != memo.end()) return it->second;
        Elt v;
        auto neg_mul = [&](const Elt& a, const Elt& b) {
            return e_.scale(e_.mul(a, b), f_.from_long(-1));
        };
        switch (rank) {
            case 0: v = inverse ? neg_mul(e_.gen(0), e_.gen(7, -1))
                                : neg_mul(e_.gen(7, -1), e_.gen(0));
                break;
            case 5: v = inverse ? neg_mul(e_.gen(5), e_.gen(6, -1))
                                : neg_mul(e_.gen(6, -1), e_.gen(5));
                break;
            case 10: v = inverse ? neg_mul(e_.gen(8, -1), e_.gen(10))
                                 : neg_mul(e_.gen(10), e_.gen(8, -1));
                break;
            case 15: v = inverse ? neg_mul(e_.gen(9, -1), e_.gen(15))
                                 : neg_mul(e_.gen(15), e_.gen(9, -1));
                break;
            default: {
                // S is an antihomomorphism, so the bracket definition
                // E = x y - c y x maps to S(y) S(x) - c S(x) S(y).
                const auto& def = e_.composite_def(rank);
                const Elt& sx = s_letter(def.x, inverse);
                const Elt& sy = s_letter(def.y, inverse);
                v = e_.sub(e_.mul(sy, sx), e_.scale(e_.mul(sx, sy), def.c));
            }
        }
        return memo.emplace(rank, std::move(v)).first->second;
    }

    Elt antipode_impl(const Elt& x, bool inverse) const {
        Elt out;
        for (const auto& [m, c] : x.terms) {
            Mono16 ecore{}, fcore{};
            for (int k = 0; k < 6; ++k) ecore[k] = m[k];
            for (int k = 10; k < kLetters; ++k) fcore[k] = m[k];
            Elt acc = s_block(ecore, inverse);
            for (int k = 6; k < 10; ++k)
                if (m[k] != 0) acc = e_.mul(e_.gen(k, -m[k]), acc);
            acc = e_.mul(s_block(fcore, inverse), acc);
            out = e_.add(out, e_.scale(acc, c));
        }
        return out;
    }

    /// Antipode image of a pure E-block or F-block monomial.  Memoized
    /// because large elements tend to repeat a block across many torus
    /// components.
    const Elt& s_block(const Mono16& m, bool inverse) const {
        auto& memo = inverse ? sinv_block_memo_ : s_block_memo_;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Elt acc = e_.one();
        for (int k = 0; k < kLetters; ++k) {
            if (m[k] == 0) continue;
            acc = e_.mul(e_.pow(s_letter(k, inverse), m[k]), acc);
        }
        return memo.emplace(m, std::move(acc)).first->second;
    }

    const Engine<F>& e_;
    const F& f_;
    mutable std::map<int, T2> delta_memo_;
    mutable std::map<int, Elt> s_memo_, sinv_memo_;
    mutable std::map<Mono16, Elt> s_block_memo_, sinv_block_memo_;
    mutable std::map<Mono16, T2> delta_mono_memo_;
    mutable std::map<std::pair<Mono16, Mono16>, Elt> prod_memo_;

    /// Memoized product of two normal monomials; tensor-leg multiplication
    /// revisits identical pairs constantly.
    const Elt& mono_prod(const Mono16& a, const Mono16& b) const {
        auto key = std::make_pair(a, b);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end()) return it->second;
        Elt p = e_.mul(e_.monomial(a, f_.from_long(1)), e_.monomial(b, f_.from_long(1)));
        return prod_memo_.emplace(std::move(key), std::move(p)).first->second;
    }
};

}  // namespace ursg2
