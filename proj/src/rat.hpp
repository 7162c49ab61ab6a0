/** @file rat.hpp
 *  Exact scalar types: arbitrary-precision rationals (GMP-backed) and the
 *  quadratic extension Q(zeta) by a primitive cube root of unity.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ursg2 {

/// Engine-internal error. Carries a stable code so the C ABI can map it.
class Error : public std::runtime_error {
public:
    enum Code {
        Parse = 1,
        Mode = 2,
        Internal = 3,
        DivisionByZero = 4,
        UnknownSymbol = 5,
        BadExponent = 6,
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Arbitrary-precision rational number, always kept canonical.
/// Thin value wrapper over mpq_class so GMP's expression templates never
/// leak into the generic containers built on top of it.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw Error(Error::DivisionByZero, "rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error(Error::DivisionByZero, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    Rat inv() const {
        if (is_zero()) throw Error(Error::DivisionByZero, "inverse of zero");
        return Rat(mpq_class(1) / q_);
    }

    /// Renders like "3", "-1/2".
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// Element of Q(zeta), zeta a primitive cube root of unity (zeta^2 = -1 - zeta).
/// Used to check the structure-preserving maps whose parameter twist needs a
/// cube root of unity that Q(r,s) does not contain.
class ZetaRat {
public:
    ZetaRat() = default;
    ZetaRat(long n) : a_(n) {}  // NOLINT: implicit by design
    ZetaRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    static ZetaRat zeta() { return ZetaRat(Rat(0), Rat(1)); }

    const Rat& re() const { return a_; }
    const Rat& ze() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    ZetaRat operator-() const { return ZetaRat(-a_, -b_); }
    ZetaRat& operator+=(const ZetaRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    ZetaRat& operator-=(const ZetaRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    ZetaRat& operator*=(const ZetaRat& o) {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
        Rat ac = a_ * o.a_, bd = b_ * o.b_;
        Rat mid = a_ * o.b_ + b_ * o.a_;
        a_ = ac - bd;
        b_ = mid - bd;
        return *this;
    }
    ZetaRat& operator/=(const ZetaRat& o) { return *this *= o.inv(); }

    friend ZetaRat operator+(ZetaRat a, const ZetaRat& b) { a += b; return a; }
    friend ZetaRat operator-(ZetaRat a, const ZetaRat& b) { a -= b; return a; }
    friend ZetaRat operator*(ZetaRat a, const ZetaRat& b) { a *= b; return a; }
    friend ZetaRat operator/(ZetaRat a, const ZetaRat& b) { a /= b; return a; }
    friend bool operator==(const ZetaRat& a, const ZetaRat& b) {
        return a.a_ == b.a_ && a.b_ == b.b_;
    }
    friend bool operator!=(const ZetaRat& a, const ZetaRat& b) { return !(a == b); }

    ZetaRat inv() const {
        // Conjugate is a + b z^2 = (a - b) - b z; norm (a+bz)(a+bz^2) = a^2 - ab + b^2.
        Rat norm = a_ * a_ - a_ * b_ + b_ * b_;
        if (norm.is_zero()) throw Error(Error::DivisionByZero, "inverse of zero in Q(zeta)");
        return ZetaRat((a_ - b_) / norm, -b_ / norm);
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string zterm = b_.is_one() ? "zeta" : (b_ == Rat(-1) ? "-zeta" : b_.str() + "*zeta");
        if (a_.is_zero()) return zterm;
        if (b_.sign() > 0) return a_.str() + "+" + zterm;
        return a_.str() + zterm;  // zterm already carries the minus sign
    }

private:
    Rat a_, b_;
};

}  // namespace ursg2
