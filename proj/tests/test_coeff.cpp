/** @file test_coeff.cpp
 *  Exact scalar arithmetic: rationals, the adjoined cube root of unity,
 *  Laurent polynomials, reduced rational functions, cyclotomic residues and
 *  the two-parameter integer combinatorics.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "field.hpp"
#include "rsq.hpp"

using namespace ursg2;

TEST_CASE("rational basics") {
    Rat a(3, 4), b(1, 4);
    CHECK((a + b).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * Rat(4, 3)).is_one());
    CHECK(a.inv() == Rat(4, 3));
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(6, 3).is_integer());
}

TEST_CASE("cube root of unity arithmetic") {
    ZetaRat z = ZetaRat::zeta();
    ZetaRat z2 = z * z;
    CHECK(z2 == ZetaRat(-1) - z);           // minimal polynomial x^2 + x + 1
    CHECK((z * z2).is_one());               // zeta^3 = 1
    CHECK((ZetaRat(1) + z + z2).is_zero()); // 1 + zeta + zeta^2 = 0
    CHECK((z.inv() * z).is_one());
    ZetaRat w = ZetaRat(2) + z * ZetaRat(3);
    CHECK((w * w.inv()).is_one());
}

TEST_CASE("laurent polynomials") {
    using L = LaurentPoly<Rat>;
    L r = L::var_r(), s = L::var_s();
    L p = r * r - s * s;
    CHECK(p.term_count() == 2);
    CHECK(p.swapped_vars() == -(p));
    L m = L::monomial(Rat(1), -2, 3);
    CHECK((m * L::monomial(Rat(1), 2, -3)).is_one());
    CHECK(p.min_expo() == Expo{0, 0});
    CHECK(m.min_expo() == Expo{-2, 3});
    CHECK((r + s).str() == "r + s");
    CHECK((r * r - L(Rat(2)) * r * s + s * s).str() == "r^2 - 2*r*s + s^2");
}

TEST_CASE("rational function reduction") {
    GenericField f;
    auto r = f.R(), s = f.S();
    auto diff_sq = f.sub(f.mul(r, r), f.mul(s, s));
    auto diff = f.sub(r, s);
    // (r^2 - s^2)/(r - s) collapses to the polynomial r + s.
    auto q = f.div(diff_sq, diff);
    CHECK(f.eq(q, f.add(r, s)));
    CHECK(q.den().is_one());

    // zeta = (r^3 - s^3)/(r + s) stays a genuine fraction.
    auto cubes = f.sub(f.pow(r, 3), f.pow(s, 3));
    auto zeta = f.div(cubes, f.add(r, s));
    CHECK(!zeta.den().is_one());
    CHECK(f.eq(f.mul(zeta, f.add(r, s)), cubes));

    // Common factors across numerator and denominator cancel.
    auto lhs = f.div(f.mul(f.add(r, s), f.sub(r, s)),
                     f.mul(f.add(r, s), f.add(f.mul(r, r), f.mul(s, s))));
    auto rhs = f.div(f.sub(r, s), f.add(f.mul(r, r), f.mul(s, s)));
    CHECK(f.eq(lhs, rhs));

    // Negative powers are exact monomial shifts.
    auto m = f.mul(f.pow(r, -3), f.pow(s, 2));
    CHECK(f.eq(f.mul(m, f.mul(f.pow(r, 3), f.pow(s, -2))), f.from_long(1)));

    // Variable swap restores canonical form.
    auto g = f.div(f.sub(r, s), f.add(r, f.mul(s, s)));
    auto gs = g.swapped_vars();
    CHECK(f.eq(gs, f.div(f.sub(s, r), f.add(s, f.mul(r, r)))));

    CHECK_THROWS_AS((void)f.inv(f.from_long(0)), Error);
}

TEST_CASE("rs integers and binomials over the function field") {
    GenericField f;
    auto r = f.R(), s = f.S();
    CHECK(f.eq(rs_integer(f, 0), f.from_long(0)));
    CHECK(f.eq(rs_integer(f, 1), f.from_long(1)));
    CHECK(f.eq(rs_integer(f, 2), f.add(r, s)));
    CHECK(f.eq(rs_integer(f, 3), f.add(f.mul(r, r), f.add(f.mul(r, s), f.mul(s, s)))));
    // [2]_3 = r^3 + s^3
    CHECK(f.eq(rs_integer(f, 2, 3), f.add(f.pow(r, 3), f.pow(s, 3))));
    // [3]! = [3][2]
    CHECK(f.eq(rs_factorial(f, 3), f.mul(rs_integer(f, 3), rs_integer(f, 2))));
    // Binomial [4 2] = (r^2 + s^2)(r^2 + rs + s^2), and it is a polynomial.
    auto b42 = rs_binomial(f, 4, 2);
    auto expect = f.mul(f.add(f.mul(r, r), f.mul(s, s)), rs_integer(f, 3));
    CHECK(f.eq(b42, expect));
    CHECK(b42.den().is_one());
    CHECK(f.eq(rs_binomial(f, 4, 0), f.from_long(1)));
    CHECK(f.is_zero(rs_binomial(f, 4, 5)));
    // Pascal-type check [5 2] = [4 1]*shift + ... is covered indirectly by
    // the engine lemmas; here freeze [5 2] = [5][4]/[2].
    CHECK(f.eq(rs_binomial(f, 5, 2),
               f.div(f.mul(rs_integer(f, 5), rs_integer(f, 4)), rs_integer(f, 2))));
}

TEST_CASE("one-parameter integers in r/s") {
    GenericField f;
    auto v = f.mul(f.R(), f.inv(f.S()));
    CHECK(f.eq(theta_integer(f, 2), f.add(f.from_long(1), v)));
    CHECK(f.eq(theta_binomial(f, 3, 1), theta_integer(f, 3)));
    CHECK(f.eq(theta_binomial(f, 4, 2),
               f.mul(f.add(f.from_long(1), f.pow(v, 2)), theta_integer(f, 3))));
}

TEST_CASE("omega pairing scalars") {
    GenericField f;
    auto r = f.R(), s = f.S();
    CHECK(f.eq(omega_pairing(f, 1, 1), f.div(r, s)));
    CHECK(f.eq(omega_pairing(f, 1, 2), f.pow(r, -3)));
    CHECK(f.eq(omega_pairing(f, 2, 1), f.pow(s, 3)));
    CHECK(f.eq(omega_pairing(f, 2, 2), f.mul(f.pow(r, 3), f.pow(s, -3))));
}

TEST_CASE("cyclotomic field at ell = 5") {
    CycloField f(5, 1, 2);
    auto th = f.theta();
    CHECK(f.is_one(f.pow(th, 5)));
    CHECK(!f.is_one(f.pow(th, 1)));
    // 1 + theta + ... + theta^4 = 0
    auto sum = f.from_long(0);
    for (long k = 0; k < 5; ++k) sum = f.add(sum, f.theta(k));
    CHECK(f.is_zero(sum));
    // Inverses via extended Euclid.
    auto x = f.sub(f.theta(1), f.theta(2));
    CHECK(f.is_one(f.mul(x, f.inv(x))));

    // Specialization r -> theta, s -> theta^2.
    GenericField g;
    auto q = g.div(g.sub(g.mul(g.R(), g.R()), g.mul(g.S(), g.S())), g.sub(g.R(), g.S()));
    CHECK(f.eq(f.specialize(q), f.add(f.theta(1), f.theta(2))));
    // [5] specializes to zero at a 5th root of unity.
    CHECK(f.is_zero(f.specialize(rs_integer(g, 5))));
    CHECK(f.is_zero(rs_integer(f, 5)));
    // ... so the binomial [5 2] needs the generic-then-specialize route.
    CHECK(f.is_zero(rs_binomial(f, 5, 2)));
    CHECK(f.is_one(rs_binomial(f, 5, 5)));
    CHECK(f.is_zero(theta_binomial(f, 5, 2)));
    CHECK(f.is_one(theta_binomial(f, 5, 0)));
    // Vanishing denominators are rejected.
    auto bad = g.div(g.from_long(1), g.sub(g.pow(g.R(), 5), g.pow(g.S(), 5)));
    CHECK_THROWS_AS((void)f.specialize(bad), Error);
}

TEST_CASE("mode validation") {
    CHECK_THROWS_AS(CycloField(6, 1, 2), Error);   // order divisible by 3
    CHECK_THROWS_AS(CycloField(5, 1, 1), Error);   // r^3 = s^3
    CHECK_THROWS_AS(CycloField(8, 2, 4), Error);   // r, s generate a proper subgroup
    CHECK_THROWS_AS(CycloField(8, 1, 3), Error);   // r^4 = s^4 has 4(1-3) = -8
    CHECK_NOTHROW(CycloField(7, 1, 2));            // valid order, pairing degeneracy is separate
    CHECK_NOTHROW(CycloField(5, 1, 2));
}
