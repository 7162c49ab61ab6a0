/** @file field.hpp
 *  Scalar-field facades. The whole engine is templated on a field object F
 *  with value type F::Elem; every coefficient operation routes through the
 *  facade so the same normalization code runs over Q(r,s), over Q(zeta)(r,s)
 *  with an adjoined cube root of unity, and over a cyclotomic field with
 *  r, s specialized to roots of unity.
 */
#pragma once

#include <string>

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "rat.hpp"
#include "ratfunc.hpp"

namespace ursg2 {

/// Rational functions in r, s over the exact coefficient field K.
template <class K>
class FuncField {
public:
    using Elem = RatFunc<K>;

    Elem from_long(long v) const { return Elem(K(v)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem pow(const Elem& a, long e) const { return a.pow(e); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    std::string str(const Elem& a) const { return a.str(); }

    Elem R() const { return Elem::var_r(); }
    Elem S() const { return Elem::var_s(); }
    /// r^a * s^b as a field element.
    Elem rs_monomial(int a, int b) const { return Elem::monomial(K(1), a, b); }
};

using GenericField = FuncField<Rat>;
using ZetaField = FuncField<ZetaRat>;

/// The adjoined primitive cube root of unity as a field element.
inline ZetaField::Elem zeta_elem() { return ZetaField::Elem(ZetaRat::zeta()); }

}  // namespace ursg2
