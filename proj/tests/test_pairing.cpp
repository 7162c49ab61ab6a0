/** @file test_pairing.cpp
 *  Skew pairing layer: generator tables in both normalizations, the two
 *  product/coproduct compatibility laws, antipode invariance, printed dual
 *  power values, the double's cross relation through psi, and the ribbon
 *  precondition report.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "field.hpp"
#include "pairing.hpp"

using namespace ursg2;

namespace {

using Eng = Engine<GenericField>;
using Elt = Eng::Elt;

const GenericField& gf() {
    static GenericField f;
    return f;
}
const Eng& eng() {
    static Eng e(gf());
    return e;
}
const Hopf<GenericField>& hopf() {
    static Hopf<GenericField> h(eng());
    return h;
}
const Pairing<GenericField>& p22() {
    static Pairing<GenericField> p(hopf(), PairNorm::Prop22);
    return p;
}
const Pairing<GenericField>& p62() {
    static Pairing<GenericField> p(hopf(), PairNorm::Eq62);
    return p;
}

using REng = Engine<CycloField>;
using RElt = REng::Elt;

const CycloField& cf() {
    static CycloField f(5, 1, 2);
    return f;
}
const REng& reng() {
    static REng e(cf(), 5);
    return e;
}
const Hopf<CycloField>& rhopf() {
    static Hopf<CycloField> h(reng());
    return h;
}
const Pairing<CycloField>& rp62() {
    static Pairing<CycloField> p(rhopf(), PairNorm::Eq62);
    return p;
}

/// <ab, x> against the leg-by-leg expansion over Delta(x).
template <typename F>
bool law_product_left(const Pairing<F>& p, const Element<F>& a, const Element<F>& b,
                      const Element<F>& x) {
    const auto& e = p.engine();
    const auto& f = e.field();
    const Hopf<F> h(e);
    typename F::Elem rhs = f.from_long(0);
    for (const auto& [legs, c] : h.delta(x)) {
        auto t = f.mul(p.pair(a, e.monomial(legs.first, f.from_long(1))),
                       p.pair(b, e.monomial(legs.second, f.from_long(1))));
        rhs = f.add(rhs, f.mul(c, t));
    }
    return f.eq(p.pair(e.mul(a, b), x), rhs);
}

/// <a, xy> against the reversed-leg expansion over Delta(a).
template <typename F>
bool law_product_right(const Pairing<F>& p, const Element<F>& a, const Element<F>& x,
                       const Element<F>& y) {
    const auto& e = p.engine();
    const auto& f = e.field();
    const Hopf<F> h(e);
    typename F::Elem rhs = f.from_long(0);
    for (const auto& [legs, c] : h.delta(a)) {
        auto t = f.mul(p.pair(e.monomial(legs.first, f.from_long(1)), y),
                       p.pair(e.monomial(legs.second, f.from_long(1)), x));
        rhs = f.add(rhs, f.mul(c, t));
    }
    return f.eq(p.pair(a, e.mul(x, y)), rhs);
}

}  // namespace

TEST_CASE("generator pairing table in both normalizations") {
    const auto& e = eng();
    const auto& f = gf();
    auto R = e.R(), S = e.S();
    auto zero = f.from_long(0), one = f.from_long(1);

    CHECK(f.eq(p22().pair(e.gen(10), e.gen(5)), f.inv(f.sub(S, R))));
    CHECK(f.eq(p22().pair(e.gen(15), e.gen(0)),
               f.inv(f.sub(f.pow(S, 3), f.pow(R, 3)))));
    CHECK(f.eq(p62().pair(e.gen(10), e.gen(5)), one));
    CHECK(f.eq(p62().pair(e.gen(15), e.gen(0)), one));
    CHECK(f.eq(p62().pair(e.gen(10), e.gen(0)), zero));
    CHECK(f.eq(p62().pair(e.gen(15), e.gen(5)), zero));

    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 2; ++i) {
            CHECK(f.eq(p22().pair(e.gen(7 + j), e.gen(5 + i)), e.pw(j, i)));
            CHECK(f.eq(p62().pair(e.gen(7 + j), e.gen(5 + i)), e.pw(j, i)));
        }
    CHECK(f.eq(p62().pair(e.gen(8, -1), e.gen(6)), f.inv(e.pw(1, 1))));
    CHECK(f.eq(p62().pair(e.gen(8), e.gen(6, 2)), f.mul(e.pw(1, 1), e.pw(1, 1))));

    // Mixed generator pairs vanish, as does everything off the weight grading.
    CHECK(f.eq(p62().pair(e.gen(10), e.gen(6)), zero));
    CHECK(f.eq(p62().pair(e.gen(8), e.gen(5)), zero));
    CHECK(f.eq(p62().pair(e.one(), e.one()), one));
    CHECK(f.eq(p62().pair(e.gen(10), e.gen(1)), zero));
    for (int k = 1; k < 6; ++k) CHECK(f.eq(p62().pair(e.gen(15 - k), e.gen(0)), zero));

    CHECK_THROWS_AS((void)p62().pair(e.gen(5), e.gen(5)), Error);
    CHECK_THROWS_AS((void)p62().pair(e.gen(10), e.gen(10)), Error);
}

TEST_CASE("pairing laws against direct evaluation") {
    const auto& e = eng();
    std::vector<Elt> duals = {e.gen(10), e.gen(15), e.gen(8), e.gen(9, -1)};
    std::vector<Elt> poss = {e.gen(5), e.gen(0), e.gen(6), e.gen(7, -1)};

    for (const auto& p : {&p22(), &p62()}) {
        for (const auto& a : duals)
            for (const auto& b : duals)
                for (const auto& x : poss) {
                    CHECK(law_product_left(*p, a, b, x));
                    CHECK(law_product_left(*p, a, b, e.mul(x, e.gen(5))));
                }
        for (const auto& a : duals)
            for (const auto& x : poss)
                for (const auto& y : poss) CHECK(law_product_right(*p, a, x, y));
    }

    // Root-vector letters on both sides of both laws.
    for (int k = 0; k < 6; ++k) {
        Elt fa = e.gen(15 - k), ea = e.gen(k);
        CHECK(law_product_left(p62(), fa, e.gen(10), e.mul(ea, e.gen(5))));
        CHECK(law_product_left(p62(), fa, fa, e.mul(ea, ea)));
        CHECK(law_product_right(p62(), fa, ea, e.gen(6)));
        CHECK(law_product_right(p62(), e.mul(fa, e.gen(9)), ea, e.gen(5)));
    }
}

TEST_CASE("antipode invariance of the pairing") {
    const auto& e = eng();
    const auto& f = gf();
    const auto& h = hopf();

    Elt a0 = e.mul(e.gen(10), e.gen(9));
    Elt b0 = e.mul(e.gen(6), e.gen(5));
    for (const auto& p : {&p22(), &p62()})
        CHECK(f.eq(p->pair(h.antipode(a0), h.antipode(b0)), p->pair(a0, b0)));

    std::mt19937 rng(20260815u);
    for (int trial = 0; trial < 10; ++trial) {
        Elt a = e.gen(8 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
        Elt b = e.gen(6 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
        for (int i = 0; i < 2; ++i) {
            int fr = (rng() % 2) ? 10 : 15;
            a = e.mul(a, e.gen(fr));
            b = e.mul(b, e.gen(15 - fr));
        }
        CHECK(f.eq(p62().pair(h.antipode(a), h.antipode(b)), p62().pair(a, b)));
    }
}

TEST_CASE("dual power values of the character computation") {
    const auto& e = eng();
    const auto& f = gf();
    auto R = e.R(), S = e.S();

    Elt f2f2f1 = e.mul(e.gen(15, 2), e.gen(10));
    Elt f2f1f2 = e.mul(e.mul(e.gen(15), e.gen(10)), e.gen(15));
    Elt f1f2f2 = e.mul(e.gen(10), e.gen(15, 2));
    Elt e2e2e1 = e.mul(e.gen(0, 2), e.gen(5));
    Elt e2E12 = e.mul(e.gen(0), e.gen(1));

    auto R3 = f.pow(R, 3), S3 = f.pow(S, 3);
    auto iR3 = f.inv(R3), iS3 = f.inv(S3);

    CHECK(f.eq(p62().pair(f2f2f1, e2e2e1), f.add(f.from_long(1), f.mul(R3, iS3))));
    CHECK(f.eq(p62().pair(f2f2f1, e2E12), f.from_long(0)));
    CHECK(f.eq(p62().pair(f2f1f2, e2e2e1), f.add(iR3, iS3)));
    CHECK(f.eq(p62().pair(f2f1f2, e2E12), f.sub(f.from_long(1), f.mul(iR3, S3))));
    CHECK(f.eq(p62().pair(f1f2f2, e2e2e1), f.mul(iR3, f.add(iR3, iS3))));
    CHECK(f.eq(p62().pair(f1f2f2, e2E12),
               f.mul(S3, f.sub(f.mul(iS3, iS3), f.mul(iR3, iR3)))));

    // The same values at the concrete root mode.
    const auto& re = reng();
    const auto& rf = cf();
    RElt g2g2g1 = re.mul(re.gen(15, 2), re.gen(10));
    RElt g2g1g2 = re.mul(re.mul(re.gen(15), re.gen(10)), re.gen(15));
    RElt h2h2h1 = re.mul(re.gen(0, 2), re.gen(5));
    RElt h2H12 = re.mul(re.gen(0), re.gen(1));
    auto rR3 = rf.pow(re.R(), 3), rS3 = rf.pow(re.S(), 3);
    CHECK(rf.eq(rp62().pair(g2g2g1, h2h2h1),
                rf.add(rf.from_long(1), rf.mul(rR3, rf.inv(rS3)))));
    CHECK(rf.eq(rp62().pair(g2g1g2, h2H12),
                rf.sub(rf.from_long(1), rf.mul(rf.inv(rR3), rS3))));
}

TEST_CASE("distinguished character through the pairing") {
    const auto& e = eng();
    const auto& f = gf();
    Elt w2rho = e.mul(e.gen(8, 10), e.gen(9, 6));
    for (int k = 1; k <= 2; ++k) {
        auto expect = f.mul(f.pow(e.pw(1, k), 10), f.pow(e.pw(2, k), 6));
        CHECK(f.eq(p62().pair(w2rho, e.gen(5 + k)), expect));
    }
    CHECK(f.eq(p62().pair(w2rho, e.gen(5)), f.from_long(0)));
    CHECK(f.eq(p62().pair(w2rho, e.gen(0)), f.from_long(0)));
    auto g11 = f.mul(f.mul(f.pow(e.pw(1, 1), 10), f.pow(e.pw(2, 1), 6)),
                     f.mul(f.pow(e.pw(1, 2), 10), f.pow(e.pw(2, 2), 6)));
    CHECK(f.eq(p62().pair(w2rho, e.mul(e.gen(6), e.gen(7))), g11));

    // gamma(omega_1) = r^10 s^8 in the generic parameters.
    auto R = e.R(), S = e.S();
    CHECK(f.eq(f.mul(f.pow(e.pw(1, 1), 10), f.pow(e.pw(2, 1), 6)),
               f.mul(f.pow(R, 10), f.pow(S, 8))));
}

TEST_CASE("nondegeneracy gcd check") {
    CHECK(double_nondegenerate(5, 1, 2));
    CHECK_FALSE(double_nondegenerate(7, 1, 2));
    CHECK_FALSE(double_nondegenerate(5, 0, 0));
    CHECK(double_nondegenerate(11, 1, 2));
    CHECK_FALSE(double_nondegenerate(3, 1, 2));
}

TEST_CASE("double products and psi at the root mode") {
    const auto& e = reng();
    const auto& f = cf();
    const auto& h = rhopf();
    const auto& p = rp62();
    Double<CycloField> d(h, p);
    auto R = e.R(), S = e.S();

    std::vector<typename Double<CycloField>::DElt> gens;
    std::vector<RElt> images;
    for (int rank : {5, 0}) {
        gens.push_back(d.d_from(e.one(), e.gen(rank)));
        images.push_back(e.gen(rank));
    }
    for (int rank : {6, 7}) {
        gens.push_back(d.d_from(e.one(), e.gen(rank)));
        images.push_back(e.gen(rank));
    }
    gens.push_back(d.d_from(e.gen(10), e.one()));
    images.push_back(e.scale(e.gen(10), f.sub(S, R)));
    gens.push_back(d.d_from(e.gen(15), e.one()));
    images.push_back(e.scale(e.gen(15), f.sub(f.pow(S, 3), f.pow(R, 3))));
    for (int rank : {8, 9}) {
        gens.push_back(d.d_from(e.gen(rank), e.one()));
        images.push_back(e.gen(rank));
    }

    for (size_t i = 0; i < gens.size(); ++i) CHECK(e.eq(d.psi(gens[i]), images[i]));

    // psi is multiplicative across every ordered generator pair; this is the
    // cross-relation oracle.
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            CHECK(e.eq(d.psi(d.d_mul(gens[i], gens[j])), e.mul(images[i], images[j])));

    // Forward-order product is plain concatenation.
    auto fwd = d.d_mul(d.d_from(e.gen(10), e.one()), d.d_from(e.one(), e.gen(5)));
    CHECK(d.d_eq(fwd, d.d_from(e.gen(10), e.gen(5))));

    // e_1 * omega_1' reorders with the single scalar r s^{-1}.
    auto ce = d.d_mul(d.d_from(e.one(), e.gen(5)), d.d_from(e.gen(8), e.one()));
    auto expect = d.d_scale(d.d_from(e.gen(8), e.gen(5)), f.mul(R, f.inv(S)));
    CHECK(d.d_eq(ce, expect));

    // The commutator with the dual f letter lands on the (G4) right side.
    auto de1 = d.d_from(e.one(), e.gen(5));
    auto df1 = d.d_from(e.gen(10), e.one());
    auto comm = d.d_sub(d.d_mul(de1, df1), d.d_mul(df1, de1));
    CHECK(e.eq(d.psi(comm), e.sub(e.gen(8), e.gen(6))));
    auto de2 = d.d_from(e.one(), e.gen(0));
    auto df2 = d.d_from(e.gen(15), e.one());
    auto comm2 = d.d_sub(d.d_mul(de2, df2), d.d_mul(df2, de2));
    CHECK(e.eq(d.psi(comm2), e.sub(e.gen(9), e.gen(7))));
    CHECK(d.d_is_zero(d.d_sub(d.d_mul(de1, df2), d.d_mul(df2, de1))));
    CHECK(d.d_is_zero(d.d_sub(d.d_mul(de2, df1), d.d_mul(df1, de2))));

    // Associativity probes across the cross relation.
    auto dg2 = d.d_from(e.gen(9), e.one());
    CHECK(d.d_eq(d.d_mul(d.d_mul(de1, df1), dg2), d.d_mul(de1, d.d_mul(df1, dg2))));
    CHECK(d.d_eq(d.d_mul(d.d_mul(de2, df2), de1), d.d_mul(de2, d.d_mul(df2, de1))));
    CHECK(d.d_eq(d.d_mul(d.d_mul(df1, de1), df2), d.d_mul(df1, d.d_mul(de1, df2))));
    CHECK(d.d_eq(d.d_mul(d.d_one(), de1), de1));
    CHECK(d.d_eq(d.d_mul(de1, d.d_one()), de1));
}

TEST_CASE("ribbon preconditions at the root mode") {
    const auto& h = rhopf();
    RibbonReport rep = ribbon_precheck(h);
    CHECK(rep.h_ok);
    CHECK(rep.delta_ok);
    CHECK(rep.s2_ok);
    CHECK(rep.all());
    for (int rank : {6, 7, 5, 0, 10, 15}) {
        CHECK(ribbon_s2_holds(h, rank));
        CHECK(ribbon_sigma_holds(h, rank));
    }
}
