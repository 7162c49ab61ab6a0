/** @file integrals.hpp
 *  Left and right integrals of the positive Borel half in restricted
 *  mode, the distinguished character they induce, and the realization
 *  of the dual integrals inside the negative half.
 *
 *  Everything lives in a single restricted engine.  The positive-half
 *  integrals are y = t x and y' = x t, where t averages the omega torus
 *  and x is the top PBW monomial in the root vector letters.  The dual
 *  integrals are pulled back through the half-to-dual isomorphism: they
 *  become F t' and t' F, where F is the mirror word in the negative
 *  root vectors (taken in the reversed letter order, which the rewrite
 *  system then straightens) and t' averages the omega' torus.
 */
#pragma once

#include <map>
#include <vector>

#include "pairing.hpp"

namespace ursg2 {

/// Exact row rank of a dense matrix over the coefficient field.
template <typename F>
long exact_rank(const F& f, std::vector<std::vector<typename F::Elem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    long rank = 0;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t piv = lead;
        while (piv < rows.size() && f.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[lead]);
        const auto scale = f.inv(rows[lead][c]);
        for (std::size_t j = c; j < cols; ++j)
            rows[lead][j] = f.mul(rows[lead][j], scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || f.is_zero(rows[i][c])) continue;
            const auto m = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[lead][j]));
        }
        ++lead;
        ++rank;
    }
    return rank;
}

template <typename F>
struct Integrals {
    using Elt = Element<F>;
    Elt t;        // omega torus average, ell^2 group-like terms
    Elt x;        // top monomial E2^n E12^n E11212^n E112^n E1112^n E1^n
    Elt y;        // t x, a left integral of the positive half
    Elt yp;       // x t, a right integral of the positive half
    Elt tprime;   // omega' torus average
    Elt fword;    // F2^n F12^n F11212^n F112^n F1112^n F1^n, straightened
    Elt lambda;   // t' F, pullback of the left dual integral
    Elt lambdap;  // F t', pullback of the right dual integral
};

/// Average of one torus family: prod_i (1 + g_i + ... + g_i^{ell-1}).
template <typename F>
Element<F> torus_average(const Engine<F>& e, bool primed) {
    Element<F> acc = e.one();
    for (int i = 0; i < 2; ++i) {
        const int rank = (primed ? 8 : 6) + i;
        Element<F> fac = e.one();
        for (long j = 1; j < e.ell(); ++j) fac = e.add(fac, e.gen(rank, j));
        acc = e.mul(acc, fac);
    }
    return acc;
}

template <typename F>
Integrals<F> build_integrals(const Engine<F>& e) {
    if (e.ell() < 2) throw Error(Error::Mode, "integrals require restricted mode");
    const int n = static_cast<int>(e.ell()) - 1;
    Integrals<F> I;
    I.t = torus_average(e, false);
    I.tprime = torus_average(e, true);

    Mono16 xm{};
    for (int k = 0; k <= 5; ++k) xm[k] = n;
    I.x = e.monomial(xm, e.field().from_long(1));

    Word fw;
    for (int rank = 15; rank >= 10; --rank) fw.push_back({rank, n});
    I.fword = e.normalize(e.field().from_long(1), fw);

    I.y = e.mul(I.t, I.x);
    I.yp = e.mul(I.x, I.t);
    I.lambda = e.mul(I.tprime, I.fword);
    I.lambdap = e.mul(I.fword, I.tprime);
    return I;
}

/// b y = counit(b) y for the four generators of the positive half.
template <typename F>
bool left_integral_holds(const Engine<F>& e, const Element<F>& y) {
    for (int rank : {6, 7})
        if (!e.eq(e.mul(e.gen(rank), y), y)) return false;
    for (int rank : {5, 0})
        if (!e.is_zero(e.mul(e.gen(rank), y))) return false;
    return true;
}

/// y' b = counit(b) y' for the four generators of the positive half.
template <typename F>
bool right_integral_holds(const Engine<F>& e, const Element<F>& yp) {
    for (int rank : {6, 7})
        if (!e.eq(e.mul(yp, e.gen(rank)), yp)) return false;
    for (int rank : {5, 0})
        if (!e.is_zero(e.mul(yp, e.gen(rank)))) return false;
    return true;
}

/// The distinguished character of the positive half: the torus weight
/// of 2 rho, acting through omega values on both torus families.
template <typename F>
Character<F> distinguished_character(const Engine<F>& e) {
    return weight_character(e, 10, 6);
}

/// y a = gamma(a) y for the four generators, gamma the distinguished
/// character.
template <typename F>
bool distinguished_action_holds(const Engine<F>& e, const Element<F>& y) {
    const Character<F> g = distinguished_character(e);
    for (int k = 1; k <= 2; ++k)
        if (!e.eq(e.mul(y, e.gen(5 + k)), e.scale(y, g.v[k - 1]))) return false;
    for (int rank : {5, 0})
        if (!e.is_zero(e.mul(y, e.gen(rank)))) return false;
    return true;
}

/// Cumulative scalars picked up as e_1 crosses the first k blocks of
/// E2^n E12^n E11212^n E112^n E1112^n.  All tails die against the
/// remaining blocks, so the crossing is scalar as a full product.
template <typename F>
typename F::Elem chain_scalar(const Engine<F>& e, int k) {
    const auto& f = e.field();
    const long n = e.ell() - 1;
    static constexpr long kR[5] = {0, 1, 4, 6, 9};
    static constexpr long kS[5] = {3, 5, 8, 9, 9};
    return f.mul(f.pow(e.R(), kR[k - 1] * n), f.pow(e.S(), kS[k - 1] * n));
}

/// e_1 (B_1 ... B_5) = chain_scalar(k) B_1 ... B_k e_1 B_{k+1} ... B_5
/// where B_j are the n-th power blocks of the five non-e_1 root vectors
/// in PBW order.
template <typename F>
bool chain_step_holds(const Engine<F>& e, int k) {
    const int n = static_cast<int>(e.ell()) - 1;
    Mono16 full{}, pre{}, suf{};
    for (int j = 0; j <= 4; ++j) {
        full[j] = n;
        (j < k ? pre : suf)[j] = n;
    }
    const auto one = e.field().from_long(1);
    const auto lhs = e.mul(e.gen(5), e.monomial(full, one));
    auto rhs = e.mul(e.gen(5), e.monomial(suf, one));
    rhs = e.mul(e.monomial(pre, one), rhs);
    return e.eq(lhs, e.scale(rhs, chain_scalar(e, k)));
}

/// gamma_k(g) for g = omega_{2 rho}^{-1}, which is also the scalar in
/// omega'_k F = gamma_k(g) F omega'_k.
template <typename F>
typename F::Elem dual_grouplike_scalar(const Engine<F>& e, int k) {
    const auto& f = e.field();
    return f.mul(f.pow(e.pw(k, 1), -10), f.pow(e.pw(k, 2), -6));
}

template <typename F>
bool fword_commutation_holds(const Engine<F>& e, const Element<F>& fword,
                             int k) {
    const auto lhs = e.mul(e.gen(7 + k), fword);
    const auto rhs = e.mul(fword, e.gen(7 + k));
    return e.eq(lhs, e.scale(rhs, dual_grouplike_scalar(e, k)));
}

/// xi lambda' = xi(g) lambda' pulled back to the negative half: the
/// omega'_k act by gamma_k(g) and the f_k annihilate.
template <typename F>
bool dual_right_integral_holds(const Engine<F>& e, const Element<F>& lambdap) {
    for (int k = 1; k <= 2; ++k) {
        const auto lhs = e.mul(e.gen(7 + k), lambdap);
        if (!e.eq(lhs, e.scale(lambdap, dual_grouplike_scalar(e, k))))
            return false;
    }
    for (int rank : {10, 15})
        if (!e.is_zero(e.mul(e.gen(rank), lambdap))) return false;
    return true;
}

/// xi lambda = counit(xi) lambda pulled back to the negative half.
template <typename F>
bool dual_left_integral_holds(const Engine<F>& e, const Element<F>& lambda) {
    for (int k = 1; k <= 2; ++k)
        if (!e.eq(e.mul(e.gen(7 + k), lambda), lambda)) return false;
    for (int rank : {10, 15})
        if (!e.is_zero(e.mul(e.gen(rank), lambda))) return false;
    return true;
}

/// e_k t = (prod_i sum_j pw(k,i)^{-j} omega_i^j) e_k.
template <typename F>
bool torus_average_crossing_holds(const Engine<F>& e, const Element<F>& t,
                                  int k) {
    const auto& f = e.field();
    const int rank = (k == 1) ? 5 : 0;
    Element<F> shifted = e.one();
    for (int i = 1; i <= 2; ++i) {
        Element<F> fac = e.one();
        for (long j = 1; j < e.ell(); ++j)
            fac = e.add(fac, e.scale(e.gen(5 + i, j), f.pow(e.pw(k, i), -j)));
        shifted = e.mul(shifted, fac);
    }
    return e.eq(e.mul(e.gen(rank), t), e.mul(shifted, e.gen(rank)));
}

/// Dimension of the space of left integrals within the natural ansatz
/// span { omega_1^a omega_2^b x : 0 <= a, b < ell }.  Expected 1.
template <typename F>
long integral_nullity(const Engine<F>& e) {
    const auto& f = e.field();
    const long ell = e.ell();
    const int n = static_cast<int>(ell) - 1;
    const std::size_t N = static_cast<std::size_t>(ell * ell);

    std::vector<Element<F>> basis;
    basis.reserve(N);
    for (long a = 0; a < ell; ++a)
        for (long b = 0; b < ell; ++b) {
            Mono16 m{};
            for (int kslot = 0; kslot <= 5; ++kslot) m[kslot] = n;
            m[6] = static_cast<int>(a);
            m[7] = static_cast<int>(b);
            basis.push_back(e.monomial(m, f.from_long(1)));
        }

    std::map<Mono16, std::vector<typename F::Elem>> rowmap;
    const int gens[4] = {6, 7, 5, 0};
    const long eps[4] = {1, 1, 0, 0};
    for (int gi = 0; gi < 4; ++gi) {
        const auto g = e.gen(gens[gi]);
        for (std::size_t j = 0; j < N; ++j) {
            auto elt = e.mul(g, basis[j]);
            if (eps[gi] != 0)
                elt = e.sub(elt, e.scale(basis[j], f.from_long(eps[gi])));
            for (const auto& [m, c] : elt.terms) {
                auto it = rowmap.find(m);
                if (it == rowmap.end())
                    it = rowmap.emplace(m, std::vector<typename F::Elem>(
                                               N, f.from_long(0))).first;
                it->second[j] = f.add(it->second[j], c);
            }
        }
    }
    std::vector<std::vector<typename F::Elem>> rows;
    rows.reserve(rowmap.size());
    for (auto& [m, row] : rowmap) rows.push_back(std::move(row));
    return static_cast<long>(N) - exact_rank(f, std::move(rows));
}

}  // namespace ursg2
