/** @file algebra.hpp
 *  The 16-letter alphabet of the engine and its combinatorial data.
 *
 *  Letters are indexed by rank, which is also the slot position in a normal
 *  monomial: ranks 0..5 are the positive root vectors in normal order
 *  E2, E12, E11212, E112, E1112, E1; ranks 6..9 are the torus generators
 *  w1, w2, w1', w2'; ranks 10..15 are the negative root vectors in normal
 *  order F1, F1112, F112, F11212, F12, F2. A normal-form monomial is the
 *  exponent vector over this alphabet; torus exponents may be negative in
 *  generic mode.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace ursg2 {

inline constexpr int kLetters = 16;

/// Exponent vector of a normal-form monomial, indexed by rank.
using Mono16 = std::array<int, kLetters>;

inline Mono16 unit_mono() {
    Mono16 m{};
    return m;
}

inline bool is_e_rank(int k) { return 0 <= k && k < 6; }
inline bool is_torus_rank(int k) { return 6 <= k && k < 10; }
inline bool is_f_rank(int k) { return 10 <= k && k < 16; }

inline const char* letter_name(int k) {
    static const char* names[kLetters] = {
        "E2", "E12", "E11212", "E112", "E1112", "E1",
        "w1", "w2", "w1'", "w2'",
        "F1", "F1112", "F112", "F11212", "F12", "F2",
    };
    if (k < 0 || k >= kLetters) throw Error(Error::Internal, "letter rank out of range");
    return names[k];
}

/// Rank for a letter name, or -1 when unknown. Lowercase generator aliases
/// e1, e2, f1, f2 are accepted on input.
inline int letter_rank(const std::string& name) {
    static const std::map<std::string, int> table = {
        {"E2", 0},  {"E12", 1},   {"E11212", 2},  {"E112", 3}, {"E1112", 4}, {"E1", 5},
        {"w1", 6},  {"w2", 7},    {"w1'", 8},     {"w2'", 9},
        {"F1", 10}, {"F1112", 11}, {"F112", 12},  {"F11212", 13}, {"F12", 14}, {"F2", 15},
        {"e1", 5},  {"e2", 0},    {"f1", 10},     {"f2", 15},
    };
    auto it = table.find(name);
    return it == table.end() ? -1 : it->second;
}

/// Root weight (m1, m2) of a letter in the simple-root basis; torus letters
/// weigh zero. The F side mirrors the E side.
inline std::pair<int, int> letter_weight(int k) {
    static const std::pair<int, int> w[kLetters] = {
        {0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 0},
        {0, 0}, {0, 0}, {0, 0}, {0, 0},
        {1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1},
    };
    if (k < 0 || k >= kLetters) throw Error(Error::Internal, "letter rank out of range");
    return w[k];
}

/// Image of a rank under the flip e_i <-> f_i, w_i <-> w_i': root-vector
/// slot k goes to 15 - k and the torus letters exchange primes.
inline int tau_rank(int k) {
    if (is_torus_rank(k)) return k < 8 ? k + 2 : k - 2;
    return 15 - k;
}

/// A run of exp copies of one letter inside a word. Root-vector runs have
/// positive exponents; torus runs may carry either sign.
struct Run {
    int rank;
    int exp;

    friend bool operator==(const Run& a, const Run& b) {
        return a.rank == b.rank && a.exp == b.exp;
    }
    friend bool operator<(const Run& a, const Run& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.exp < b.exp;
    }
};

using Word = std::vector<Run>;

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Sparse linear combination of normal monomials over the scalar field F.
template <class F>
struct Element {
    using Elem = typename F::Elem;
    std::map<Mono16, Elem> terms;

    bool empty() const { return terms.empty(); }

    void add_term(const F& f, const Mono16& m, const Elem& c) {
        if (f.is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = f.add(it->second, c);
            if (f.is_zero(it->second)) terms.erase(it);
        }
    }
};

}  // namespace ursg2
