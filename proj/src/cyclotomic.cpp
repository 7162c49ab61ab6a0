/** @file cyclotomic.cpp
 *  Cyclotomic polynomial construction and residue arithmetic.
 */
#include "cyclotomic.hpp"

#include <numeric>

namespace ursg2 {

using polygcd::UPoly;

namespace {

UPoly<Rat> x_pow_minus_one(long n) {
    UPoly<Rat> p(n + 1, Rat(0));
    p[0] = Rat(-1);
    p[n] = Rat(1);
    return p;
}

/// Phi_n by dividing x^n - 1 by the cyclotomic polynomials of the proper
/// divisors of n.
UPoly<Rat> cyclotomic_poly(long n) {
    UPoly<Rat> p = x_pow_minus_one(n);
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UPoly<Rat> phi_d = cyclotomic_poly(d);
        p = polygcd::uexact_div(p, phi_d);
    }
    return p;
}

}  // namespace

bool CycloNum::operator<(const CycloNum& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = 0; i < c.size(); ++i) {
        int cmp = (c[i] - o.c[i]).sign();
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

CycloCtx::CycloCtx(long ell, long y, long z) : ell_(ell), y_(y), z_(z) {
    if (ell < 2) throw Error(Error::Mode, "root-of-unity order must be at least 2");
    if (std::gcd(ell, 3L) != 1)
        throw Error(Error::Mode, "root-of-unity order must be coprime to 3");
    long oy = ell / std::gcd(((y % ell) + ell) % ell, ell);
    long oz = ell / std::gcd(((z % ell) + ell) % ell, ell);
    if (std::lcm(oy, oz) != ell)
        throw Error(Error::Mode, "parameters r, s must jointly generate the full root group");
    if (((3 * (y - z)) % ell + ell) % ell == 0)
        throw Error(Error::Mode, "parameters must satisfy r^3 != s^3");
    if (((4 * (y - z)) % ell + ell) % ell == 0)
        throw Error(Error::Mode, "parameters must satisfy r^4 != s^4");
    phi_ = cyclotomic_poly(ell);

    theta_table_.resize(ell);
    for (long k = 0; k < ell; ++k) {
        UPoly<Rat> xk(k + 1, Rat(0));
        xk[k] = Rat(1);
        theta_table_[k].c = reduce(std::move(xk));
    }
}

UPoly<Rat> CycloCtx::reduce(UPoly<Rat> p) const {
    auto [q, r] = polygcd::udivmod(p, phi_);
    (void)q;
    return r;
}

CycloNum CycloCtx::from_long(long v) const {
    CycloNum n;
    if (v != 0) n.c = {Rat(v)};
    return n;
}

CycloNum CycloCtx::theta_pow(long k) const {
    k %= ell_;
    if (k < 0) k += ell_;
    return theta_table_[k];
}

CycloNum CycloCtx::add(const CycloNum& a, const CycloNum& b) const {
    CycloNum r;
    r.c = polygcd::uadd(a.c, b.c);
    return r;
}

CycloNum CycloCtx::neg(const CycloNum& a) const {
    CycloNum r;
    r.c = polygcd::uscale(a.c, Rat(-1));
    return r;
}

CycloNum CycloCtx::sub(const CycloNum& a, const CycloNum& b) const { return add(a, neg(b)); }

CycloNum CycloCtx::mul(const CycloNum& a, const CycloNum& b) const {
    CycloNum r;
    r.c = reduce(polygcd::umul(a.c, b.c));
    return r;
}

CycloNum CycloCtx::inv(const CycloNum& a) const {
    if (a.is_zero()) throw Error(Error::DivisionByZero, "inverse of zero in cyclotomic field");
    // Extended Euclid in Q[x]: u*a + v*phi = gcd, with gcd a nonzero constant
    // because phi is irreducible over Q.
    UPoly<Rat> r0 = a.c, r1 = phi_;
    UPoly<Rat> s0 = {Rat(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, rem] = polygcd::udivmod(r0, r1);
        UPoly<Rat> s2 = polygcd::uadd(s0, polygcd::uscale(polygcd::umul(q, s1), Rat(-1)));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw Error(Error::Internal, "cyclotomic modulus is not irreducible over Q");
    CycloNum r;
    r.c = reduce(polygcd::uscale(s0, r0[0].inv()));
    return r;
}

CycloNum CycloCtx::pow(const CycloNum& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    CycloNum acc = from_long(1), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

CycloNum CycloCtx::eval_laurent(const LaurentPoly<Rat>& p) const {
    CycloNum acc;
    for (const auto& [e, coeff] : p.terms()) {
        long k = static_cast<long>(e.first) * y_ + static_cast<long>(e.second) * z_;
        CycloNum t = theta_pow(k);
        t.c = polygcd::uscale(t.c, coeff);
        acc = add(acc, t);
    }
    return acc;
}

CycloNum CycloCtx::specialize(const RatFunc<Rat>& f) const {
    CycloNum n = eval_laurent(f.num());
    if (f.den().is_one()) return n;
    CycloNum d = eval_laurent(f.den());
    if (d.is_zero())
        throw Error(Error::Mode, "denominator vanishes at the chosen root of unity");
    return mul(n, inv(d));
}

std::string CycloCtx::str(const CycloNum& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        std::string cs = a.c[i].str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        std::string body;
        if (i == 0) {
            body = cs;
        } else {
            std::string mono = i == 1 ? "theta" : "theta^" + std::to_string(i);
            body = cs == "1" ? mono : cs + "*" + mono;
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

}  // namespace ursg2
