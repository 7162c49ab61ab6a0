/** @file test_integrals.cpp
 *  Integrals of the Borel halves in restricted mode at ell = 5 with
 *  r = theta, s = theta^2: existence and uniqueness of the left and
 *  right integrals, the distinguished character, the crossing scalars
 *  that make y = t x work, and the dual integrals realized in the
 *  negative half.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "field.hpp"
#include "integrals.hpp"

using namespace ursg2;

namespace {

const CycloField& cf() {
    static CycloField f(5, 1, 2);
    return f;
}

const Engine<CycloField>& eng() {
    static Engine<CycloField> e(cf(), 5);
    return e;
}

const Hopf<CycloField>& hopf() {
    static Hopf<CycloField> h(eng());
    return h;
}

const Integrals<CycloField>& ints() {
    static Integrals<CycloField> I = build_integrals(eng());
    return I;
}

}  // namespace

TEST_CASE("shapes of t, x, y, y' and counit vanishing") {
    const auto& e = eng();
    const auto& I = ints();
    CHECK(I.t.terms.size() == 25);
    CHECK(I.x.terms.size() == 1);
    CHECK(I.y.terms.size() == 25);
    CHECK(I.yp.terms.size() == 25);
    CHECK(I.tprime.terms.size() == 25);

    const auto& f = cf();
    CHECK(f.is_zero(hopf().counit(I.y)));
    CHECK(f.is_zero(hopf().counit(I.yp)));
    CHECK(f.eq(hopf().counit(I.t), f.from_long(25)));

    CHECK_THROWS_AS(build_integrals(Engine<GenericField>(
                        GenericField{}, 0)),
                    Error);
    (void)e;
}

TEST_CASE("y is a left integral, y' a right integral") {
    const auto& e = eng();
    const auto& I = ints();
    CHECK(left_integral_holds(e, I.y));
    CHECK(right_integral_holds(e, I.yp));

    // The inverse torus generators come along for free but are part of
    // the half, so spot-check one of each.
    CHECK(e.eq(e.mul(e.gen(6, -1), I.y), I.y));
    CHECK(e.eq(e.mul(I.yp, e.gen(7, -1)), I.yp));
}

TEST_CASE("top monomial annihilation from both sides") {
    const auto& e = eng();
    const auto& I = ints();
    CHECK(e.is_zero(e.mul(e.gen(0), I.x)));
    CHECK(e.is_zero(e.mul(e.gen(5), I.x)));
    CHECK(e.is_zero(e.mul(I.x, e.gen(0))));
    CHECK(e.is_zero(e.mul(I.x, e.gen(5))));
}

TEST_CASE("e_1 crossing scalars through the block product") {
    const auto& e = eng();
    const auto& f = cf();

    // At ell = 5 the cumulative scalars specialize to s^12, r^4 s^20,
    // r^16 s^32, r^24 s^36, r^36 s^36.
    static const long rexp[5] = {0, 4, 16, 24, 36};
    static const long sexp[5] = {12, 20, 32, 36, 36};
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(f.eq(chain_scalar(e, k), f.mul(f.pow(e.R(), rexp[k - 1]),
                                             f.pow(e.S(), sexp[k - 1]))));
        CHECK(chain_step_holds(e, k));
    }
}

TEST_CASE("distinguished character gamma") {
    const auto& e = eng();
    const auto& f = cf();
    const auto& I = ints();

    CHECK(distinguished_action_holds(e, I.y));

    const auto g = distinguished_character(e);
    CHECK(f.eq(g.v[0], f.mul(f.pow(e.R(), 10), f.pow(e.S(), 8))));
    for (int k = 1; k <= 2; ++k) {
        const auto expected =
            f.mul(f.pow(e.pw(1, k), 10), f.pow(e.pw(2, k), 6));
        CHECK(f.eq(g.v[k - 1], expected));
    }
}

TEST_CASE("omega'_k F commutation and the distinguished group-like") {
    const auto& e = eng();
    const auto& f = cf();
    const auto& I = ints();

    CHECK_FALSE(I.fword.empty());
    CHECK(fword_commutation_holds(e, I.fword, 1));
    CHECK(fword_commutation_holds(e, I.fword, 2));

    // k = 1 scalar is r^8 s^10.
    CHECK(f.eq(dual_grouplike_scalar(e, 1),
               f.mul(f.pow(e.R(), 8), f.pow(e.S(), 10))));

    // (omega'_i | g) = gamma_i(g) for g = omega_1^{-10} omega_2^{-6}.
    const Hopf<CycloField>& h = hopf();
    const Pairing<CycloField> p(h, PairNorm::Eq62);
    const auto g = e.mul(e.gen(6, -10), e.gen(7, -6));
    for (int i = 1; i <= 2; ++i)
        CHECK(f.eq(p.pair(e.gen(7 + i), g), dual_grouplike_scalar(e, i)));
}

TEST_CASE("dual integrals in the negative half") {
    const auto& e = eng();
    const auto& f = cf();
    const auto& I = ints();

    CHECK(dual_right_integral_holds(e, I.lambdap));
    CHECK(dual_left_integral_holds(e, I.lambda));
    CHECK(f.is_zero(hopf().counit(I.lambda)));
    CHECK(f.is_zero(hopf().counit(I.lambdap)));
}

TEST_CASE("e_k t torus average crossing") {
    const auto& e = eng();
    const auto& I = ints();
    CHECK(torus_average_crossing_holds(e, I.t, 1));
    CHECK(torus_average_crossing_holds(e, I.t, 2));
}

TEST_CASE("uniqueness of the left integral within the torus ansatz") {
    CHECK(integral_nullity(eng()) == 1);
}
