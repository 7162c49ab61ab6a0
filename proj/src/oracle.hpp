/** @file oracle.hpp
 *  Independent consistency oracle for the positive part of the algebra: a
 *  degree-bounded two-sided Groebner completion of the quantum Serre ideal
 *  in the free algebra on the two positive generators. The oracle shares no
 *  code path with the straightening engine beyond the coefficient field,
 *  so agreement between the two is meaningful evidence.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "engine.hpp"
#include "field.hpp"

namespace ursg2 {

/// Word order for the free algebra on letters '1' (first positive
/// generator) and '2' (second): degree first, then lexicographic. ASCII
/// happens to place '2' above '1', which is the order we want.
struct DegLexLess {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sparse free-algebra polynomial, word to coefficient.
using FreePoly = std::map<std::string, RatFunc<Rat>, DegLexLess>;

void fp_add_term(FreePoly& p, const std::string& w, const RatFunc<Rat>& c);
FreePoly fp_sub(FreePoly a, const FreePoly& b);
FreePoly fp_mul(const FreePoly& a, const FreePoly& b);
std::string fp_str(const FreePoly& p);

/// Rank of a family of free-algebra polynomials over the coefficient field,
/// by exact Gaussian elimination on the words appearing in them.
int fp_rank(const std::vector<FreePoly>& rows);

/// Degree-bounded completion of the ideal generated by the two Serre
/// relations. Both generators are homogeneous in word length, so every
/// S-polynomial is homogeneous as well and the completion is exact for all
/// inputs whose words are no longer than the bound.
class SerreOracle {
public:
    explicit SerreOracle(int degree_bound = 12);

    int degree_bound() const { return bound_; }
    const std::vector<FreePoly>& basis() const { return gb_; }

    /// Normal form with respect to the completed basis, rewriting at the
    /// leftmost matching subword of the largest unprocessed term.
    FreePoly reduce(FreePoly p) const;
    bool reduces_to_zero(FreePoly p) const;

    /// All words of length at most max_degree containing no leading word of
    /// the basis, in degree-lex order. For a complete basis these represent
    /// a basis of the quotient up to that degree.
    std::vector<std::string> normal_words(int max_degree) const;

private:
    void complete();

    GenericField f_;
    int bound_;
    std::vector<FreePoly> gb_;
    std::vector<std::string> leads_;
};

/// Expansion of an element whose monomials involve only the positive-part
/// letters into free words, via the engine's recursive letter expansion.
FreePoly to_free_words(const Engine<GenericField>& eng, const Element<GenericField>& x);

}  // namespace ursg2
