/** @file rsq.hpp
 *  Two-parameter integers, factorials and binomial coefficients:
 *
 *    [n]_i = (r^{in} - s^{in}) / (r^i - s^i) = sum_k r^{ik} s^{i(n-1-k)}
 *
 *  with [n] = [n]_1, plus the one-parameter analogues in the single variable
 *  r/s used by the Hopf-ideal coproduct identities. Integers and factorials
 *  are plain sums and products, valid over every scalar field. Binomial
 *  coefficients involve divisions that can degenerate to 0/0 at roots of
 *  unity, so at a root they are computed generically over Q(r,s) first and
 *  specialized afterward, with a small memo table for the generic values.
 */
#pragma once

#include <map>
#include <tuple>

#include "field.hpp"

namespace ursg2 {

/// [n]_i as a sum of monomials; n >= 0.
template <class F>
typename F::Elem rs_integer(const F& f, long n, int i = 1) {
    typename F::Elem acc = f.from_long(0);
    const typename F::Elem R = f.R(), S = f.S();
    for (long k = 0; k < n; ++k)
        acc = f.add(acc, f.mul(f.pow(R, i * k), f.pow(S, i * (n - 1 - k))));
    return acc;
}

/// [n]_i! with [0]! = 1.
template <class F>
typename F::Elem rs_factorial(const F& f, long n, int i = 1) {
    typename F::Elem acc = f.from_long(1);
    for (long m = 2; m <= n; ++m) acc = f.mul(acc, rs_integer(f, m, i));
    return acc;
}

/// Generic binomial over Q(r,s), memoized; the ratio of factorials reduces
/// to a Laurent polynomial.
inline RatFunc<Rat> rs_binomial_generic(long n, long m, int i = 1) {
    if (m < 0 || m > n) return RatFunc<Rat>();
    static std::map<std::tuple<long, long, int>, RatFunc<Rat>> memo;
    auto key = std::make_tuple(n, m, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    GenericField f;
    RatFunc<Rat> v = f.div(rs_factorial(f, n, i),
                           f.mul(rs_factorial(f, m, i), rs_factorial(f, n - m, i)));
    memo.emplace(key, v);
    return v;
}

template <class K>
typename FuncField<K>::Elem rs_binomial(const FuncField<K>& f, long n, long m, int i = 1) {
    if (m < 0 || m > n) return f.from_long(0);
    return f.div(rs_factorial(f, n, i), f.mul(rs_factorial(f, m, i), rs_factorial(f, n - m, i)));
}

inline CycloField::Elem rs_binomial(const CycloField& f, long n, long m, int i = 1) {
    return f.specialize(rs_binomial_generic(n, m, i));
}

/// One-parameter integer (k) = 1 + v + ... + v^{k-1} in v = (r s^{-1})^i.
template <class F>
typename F::Elem theta_integer(const F& f, long k, int i = 1) {
    const typename F::Elem v = f.pow(f.mul(f.R(), f.inv(f.S())), i);
    typename F::Elem acc = f.from_long(0);
    for (long t = 0; t < k; ++t) acc = f.add(acc, f.pow(v, t));
    return acc;
}

inline RatFunc<Rat> theta_binomial_generic(long n, long j, int i = 1) {
    if (j < 0 || j > n) return RatFunc<Rat>();
    static std::map<std::tuple<long, long, int>, RatFunc<Rat>> memo;
    auto key = std::make_tuple(n, j, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    GenericField f;
    RatFunc<Rat> num = f.from_long(1), den = f.from_long(1);
    for (long t = 1; t <= n; ++t) num = f.mul(num, theta_integer(f, t, i));
    for (long t = 1; t <= j; ++t) den = f.mul(den, theta_integer(f, t, i));
    for (long t = 1; t <= n - j; ++t) den = f.mul(den, theta_integer(f, t, i));
    RatFunc<Rat> v = f.div(num, den);
    memo.emplace(key, v);
    return v;
}

template <class K>
typename FuncField<K>::Elem theta_binomial(const FuncField<K>& f, long n, long j, int i = 1) {
    if (j < 0 || j > n) return f.from_long(0);
    typename FuncField<K>::Elem num = f.from_long(1), den = f.from_long(1);
    for (long t = 1; t <= n; ++t) num = f.mul(num, theta_integer(f, t, i));
    for (long t = 1; t <= j; ++t) den = f.mul(den, theta_integer(f, t, i));
    for (long t = 1; t <= n - j; ++t) den = f.mul(den, theta_integer(f, t, i));
    return f.div(num, den);
}

inline CycloField::Elem theta_binomial(const CycloField& f, long n, long j, int i = 1) {
    return f.specialize(theta_binomial_generic(n, j, i));
}

/// Hopf pairing of torus generators: the value of (omega_i', omega_j).
template <class F>
typename F::Elem omega_pairing(const F& f, int i, int j) {
    const typename F::Elem R = f.R(), S = f.S();
    if (i == 1 && j == 1) return f.mul(R, f.inv(S));
    if (i == 1 && j == 2) return f.pow(R, -3);
    if (i == 2 && j == 1) return f.pow(S, 3);
    if (i == 2 && j == 2) return f.mul(f.pow(R, 3), f.pow(S, -3));
    throw Error(Error::Internal, "omega pairing index out of range");
}

}  // namespace ursg2
