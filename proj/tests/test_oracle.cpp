/** @file test_oracle.cpp
 *  Groebner oracle: completion sanity, normal-word counts against the PBW
 *  prediction, engine agreement on straightened products, and bounded-degree
 *  linear independence of PBW monomial expansions.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracle.hpp"

using namespace ursg2;

namespace {

const GenericField& gf() {
    static GenericField f;
    return f;
}
const Engine<GenericField>& eng() {
    static Engine<GenericField> e(gf());
    return e;
}
const SerreOracle& oracle() {
    static SerreOracle o(10);
    return o;
}

/// All PBW monomials in the positive letters with total generator-degree in
/// [0, max_degree], as engine monomials.
std::vector<Mono16> pbw_monomials(int max_degree) {
    std::vector<Mono16> out;
    Mono16 m = unit_mono();
    auto rec = [&](auto&& self, int rank, int left) -> void {
        if (rank == 6) {
            out.push_back(m);
            return;
        }
        auto [a, b] = letter_weight(rank);
        int w = a + b;
        for (int c = 0; c * w <= left; ++c) {
            m[rank] = c;
            self(self, rank + 1, left - c * w);
        }
        m[rank] = 0;
    };
    rec(rec, 0, max_degree);
    return out;
}

}  // namespace

TEST_CASE("completion and defining relations") {
    const auto& o = oracle();
    CHECK(o.basis().size() >= 2);
    CHECK(o.reduces_to_zero(o.basis()[0]));
    CHECK(o.reduces_to_zero(o.basis()[1]));

    FreePoly w21;
    fp_add_term(w21, "21", gf().from_long(1));
    CHECK(fp_str(o.reduce(w21)) == fp_str(w21));
}

TEST_CASE("normal word counts match the PBW prediction") {
    const auto& o = oracle();
    auto words = o.normal_words(6);
    auto monos = pbw_monomials(6);
    std::map<size_t, int> by_len;
    for (const auto& w : words) by_len[w.size()]++;
    std::map<size_t, int> by_deg;
    for (const auto& m : monos) {
        size_t d = 0;
        for (int k = 0; k < 6; ++k) {
            auto [a, b] = letter_weight(k);
            d += static_cast<size_t>(m[k]) * (a + b);
        }
        by_deg[d]++;
    }
    CHECK(by_len == by_deg);
    CHECK(words.size() == monos.size());
}

TEST_CASE("engine products agree with oracle reduction") {
    const auto& e = eng();
    const auto& o = oracle();
    auto check_pair = [&](int hi, int lo) {
        FreePoly lhs = fp_mul(to_free_words(e, e.gen(hi)), to_free_words(e, e.gen(lo)));
        FreePoly rhs = to_free_words(e, e.mul(e.gen(hi), e.gen(lo)));
        CHECK(o.reduces_to_zero(fp_sub(lhs, rhs)));
    };
    check_pair(1, 0);
    check_pair(3, 0);
    check_pair(4, 0);
    check_pair(5, 0);
    check_pair(4, 1);
    check_pair(2, 0);
    check_pair(5, 2);

    // Exponent handling: a squared letter expands the same way as the
    // straightened product of the letter with itself.
    FreePoly sq = fp_mul(to_free_words(e, e.gen(2)), to_free_words(e, e.gen(2)));
    CHECK(o.reduces_to_zero(fp_sub(sq, to_free_words(e, e.mul(e.gen(2), e.gen(2))))));
}

TEST_CASE("bounded-degree independence of PBW expansions") {
    const auto& e = eng();
    const auto& o = oracle();
    std::vector<FreePoly> reduced;
    auto monos = pbw_monomials(4);
    for (const auto& m : monos) {
        Element<GenericField> x;
        x.add_term(gf(), m, gf().from_long(1));
        FreePoly nf = o.reduce(to_free_words(e, x));
        REQUIRE(!nf.empty());
        reduced.push_back(std::move(nf));
    }
    CHECK(fp_rank(reduced) == static_cast<int>(monos.size()));
}
