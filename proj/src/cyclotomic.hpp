/** @file cyclotomic.hpp
 *  Exact arithmetic in the cyclotomic field Q(theta), theta a primitive
 *  ell-th root of unity, represented as Q[x] modulo the ell-th cyclotomic
 *  polynomial. Root-of-unity specializations send r -> theta^y, s -> theta^z.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rat.hpp"
#include "ratfunc.hpp"

namespace ursg2 {

/// Residue class in Q[x]/(Phi_ell); plain value type, arithmetic lives in
/// CycloField so the context travels once instead of per element.
struct CycloNum {
    std::vector<Rat> c;  // coefficient of theta^i at index i, trimmed

    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0].is_one(); }
    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c == b.c; }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a.c == b.c); }
    bool operator<(const CycloNum& o) const;  // arbitrary total order for map keys
};

class CycloCtx {
public:
    CycloCtx(long ell, long y, long z);

    long ell() const { return ell_; }
    long y() const { return y_; }
    long z() const { return z_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }

    CycloNum from_long(long v) const;
    CycloNum theta_pow(long k) const;  // theta^k, any sign of k

    CycloNum add(const CycloNum& a, const CycloNum& b) const;
    CycloNum sub(const CycloNum& a, const CycloNum& b) const;
    CycloNum neg(const CycloNum& a) const;
    CycloNum mul(const CycloNum& a, const CycloNum& b) const;
    CycloNum inv(const CycloNum& a) const;
    CycloNum pow(const CycloNum& a, long e) const;

    /// Evaluate a rational function at r = theta^y, s = theta^z. A vanishing
    /// denominator raises a mode error.
    CycloNum specialize(const RatFunc<Rat>& f) const;

    std::string str(const CycloNum& a) const;

private:
    polygcd::UPoly<Rat> reduce(polygcd::UPoly<Rat> p) const;
    CycloNum eval_laurent(const LaurentPoly<Rat>& p) const;

    long ell_, y_, z_;
    polygcd::UPoly<Rat> phi_;
    std::vector<CycloNum> theta_table_;  // theta^k for 0 <= k < ell
};

/// Field facade matching the engine's scalar-field concept.
class CycloField {
public:
    using Elem = CycloNum;

    CycloField(long ell, long y, long z) : ctx_(std::make_shared<CycloCtx>(ell, y, z)) {}

    const CycloCtx& ctx() const { return *ctx_; }
    long ell() const { return ctx_->ell(); }

    Elem from_long(long v) const { return ctx_->from_long(v); }
    Elem add(const Elem& a, const Elem& b) const { return ctx_->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return ctx_->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return ctx_->mul(a, b); }
    Elem neg(const Elem& a) const { return ctx_->neg(a); }
    Elem inv(const Elem& a) const { return ctx_->inv(a); }
    Elem div(const Elem& a, const Elem& b) const { return ctx_->mul(a, ctx_->inv(b)); }
    Elem pow(const Elem& a, long e) const { return ctx_->pow(a, e); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    std::string str(const Elem& a) const { return ctx_->str(a); }

    Elem R() const { return ctx_->theta_pow(ctx_->y()); }
    Elem S() const { return ctx_->theta_pow(ctx_->z()); }
    Elem theta(long k = 1) const { return ctx_->theta_pow(k); }
    Elem specialize(const RatFunc<Rat>& f) const { return ctx_->specialize(f); }

private:
    std::shared_ptr<const CycloCtx> ctx_;
};

}  // namespace ursg2
