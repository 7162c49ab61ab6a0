#include "oracle.hpp"

#include <set>
#include <tuple>
#include <utility>

namespace ursg2 {

namespace {

using Coef = RatFunc<Rat>;

const FreePoly::value_type& leading(const FreePoly& p) { return *std::prev(p.end()); }

void strip_zeros(FreePoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second.is_zero())
            it = p.erase(it);
        else
            ++it;
    }
}

FreePoly fp_scaled(const FreePoly& p, const Coef& c) {
    FreePoly out;
    for (const auto& [w, a] : p) out.emplace(w, a * c);
    return out;
}

/// p -= c * (l . g . r) for monic g.
void axpy_framed(FreePoly& p, const Coef& c, const std::string& l, const FreePoly& g,
                 const std::string& r) {
    for (const auto& [w, a] : g) {
        std::string word = l + w + r;
        auto it = p.find(word);
        if (it == p.end()) it = p.emplace(word, Coef()).first;
        it->second -= c * a;
        if (it->second.is_zero()) p.erase(it);
    }
}

}  // namespace

void fp_add_term(FreePoly& p, const std::string& w, const Coef& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) it = p.emplace(w, Coef()).first;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

FreePoly fp_sub(FreePoly a, const FreePoly& b) {
    for (const auto& [w, c] : b) fp_add_term(a, w, -c);
    return a;
}

FreePoly fp_mul(const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) fp_add_term(out, wa + wb, ca * cb);
    return out;
}

std::string fp_str(const FreePoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")*" + (it->first.empty() ? "1" : it->first);
    }
    return out;
}

SerreOracle::SerreOracle(int degree_bound) : bound_(degree_bound) {
    auto r = f_.R(), s = f_.S();
    auto rs = f_.mul(r, s);

    // e2^2 e1 - (r^-3 + s^-3) e2 e1 e2 + (rs)^-3 e1 e2^2 = 0, made monic at
    // its leading word.
    FreePoly g1;
    fp_add_term(g1, "221", f_.from_long(1));
    fp_add_term(g1, "212", f_.neg(f_.add(f_.pow(r, -3), f_.pow(s, -3))));
    fp_add_term(g1, "122", f_.pow(rs, -3));

    // The quartic Serre relation, divided by its leading coefficient (rs)^6
    // so the leading word 21111 carries coefficient one.
    auto c1 = f_.mul(f_.add(r, s), f_.add(f_.mul(r, r), f_.mul(s, s)));
    auto c2 = f_.mul(rs, f_.mul(f_.add(f_.mul(r, r), f_.mul(s, s)),
                                f_.add(f_.add(f_.mul(r, r), rs), f_.mul(s, s))));
    auto lead = f_.pow(rs, 6);
    FreePoly g2;
    fp_add_term(g2, "21111", f_.from_long(1));
    fp_add_term(g2, "12111", f_.neg(f_.div(f_.mul(f_.pow(rs, 3), c1), lead)));
    fp_add_term(g2, "11211", f_.div(c2, lead));
    fp_add_term(g2, "11121", f_.neg(f_.div(c1, lead)));
    fp_add_term(g2, "11112", f_.div(f_.from_long(1), lead));

    gb_.push_back(std::move(g1));
    gb_.push_back(std::move(g2));
    for (const auto& g : gb_) leads_.push_back(leading(g).first);
    complete();
}

void SerreOracle::complete() {
    std::set<std::tuple<size_t, size_t, long>> done;
    auto absorb = [&](FreePoly s) {
        s = reduce(std::move(s));
        if (s.empty()) return false;
        auto lc = leading(s).second;
        gb_.push_back(fp_scaled(s, lc.inv()));
        leads_.push_back(leading(gb_.back()).first);
        return true;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < gb_.size(); ++i) {
            for (size_t j = 0; j < gb_.size(); ++j) {
                const std::string u = leads_[i];
                const std::string v = leads_[j];
                // Edge overlaps: a proper suffix of u equals a proper prefix
                // of v. Both elements are monic, so the leading terms of the
                // two one-step rewrites of the overlap word cancel exactly.
                size_t kmax = std::min(u.size(), v.size()) - 1;
                for (size_t k = 1; k <= kmax; ++k) {
                    if (!done.insert({i, j, static_cast<long>(k)}).second) continue;
                    if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
                    if (u.size() + v.size() - k > static_cast<size_t>(bound_)) continue;
                    FreePoly s;
                    for (const auto& [w, c] : gb_[i]) fp_add_term(s, w + v.substr(k), c);
                    axpy_framed(s, f_.from_long(1), u.substr(0, u.size() - k), gb_[j], "");
                    progress |= absorb(std::move(s));
                }
                // Inclusions: v occurs strictly inside u. New leads are
                // irreducible at insertion time, so this only pairs an older
                // element with a shorter lead discovered later.
                if (i == j || v.size() >= u.size()) continue;
                for (size_t t = 0; t + v.size() <= u.size(); ++t) {
                    if (!done.insert({i, j, -static_cast<long>(t) - 1}).second) continue;
                    if (u.compare(t, v.size(), v) != 0) continue;
                    FreePoly s = gb_[i];
                    axpy_framed(s, f_.from_long(1), u.substr(0, t), gb_[j],
                                u.substr(t + v.size()));
                    progress |= absorb(std::move(s));
                }
            }
        }
    }
}

FreePoly SerreOracle::reduce(FreePoly p) const {
    strip_zeros(p);
    FreePoly normal;
    while (!p.empty()) {
        auto [word, coef] = leading(p);
        size_t gi = gb_.size(), at = std::string::npos;
        for (size_t pos = 0; pos < word.size() && at == std::string::npos; ++pos)
            for (size_t g = 0; g < gb_.size(); ++g)
                if (word.compare(pos, leads_[g].size(), leads_[g]) == 0) {
                    gi = g;
                    at = pos;
                    break;
                }
        if (at == std::string::npos) {
            normal.emplace(word, coef);
            p.erase(word);
            continue;
        }
        axpy_framed(p, coef, word.substr(0, at), gb_[gi], word.substr(at + leads_[gi].size()));
    }
    return normal;
}

bool SerreOracle::reduces_to_zero(FreePoly p) const { return reduce(std::move(p)).empty(); }

int fp_rank(const std::vector<FreePoly>& rows) {
    int rank = 0;
    std::map<std::string, FreePoly, DegLexLess> pivots;
    for (FreePoly row : rows) {
        while (!row.empty()) {
            auto [w, c] = leading(row);
            auto it = pivots.find(w);
            if (it == pivots.end()) break;
            for (const auto& [pw, pc] : it->second) fp_add_term(row, pw, -(c * pc));
        }
        if (row.empty()) continue;
        auto [w, c] = leading(row);
        pivots.emplace(w, fp_scaled(row, c.inv()));
        ++rank;
    }
    return rank;
}

std::vector<std::string> SerreOracle::normal_words(int max_degree) const {
    std::vector<std::string> out = {""};
    std::vector<std::string> layer = {""};
    auto irreducible = [&](const std::string& w) {
        for (const auto& l : leads_)
            if (w.find(l) != std::string::npos) return false;
        return true;
    };
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char c : {'1', '2'}) {
                std::string x = w + c;
                if (irreducible(x)) next.push_back(x);
            }
        // Extending an irreducible word stays irreducible unless the new
        // letter completes a leading word at the right edge, so growing
        // layer by layer enumerates exactly the irreducible words.
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

FreePoly to_free_words(const Engine<GenericField>& eng, const Element<GenericField>& x) {
    FreePoly out;
    for (const auto& [m, c] : x.terms) {
        for (int k = 0; k < kLetters; ++k)
            if (m[k] != 0 && !is_e_rank(k))
                throw Error(Error::Internal, "free-word expansion needs a positive-part element");
        for (const auto& [ce, w] : eng.expand_mono(m)) {
            std::string word;
            for (const auto& run : w)
                word.append(static_cast<size_t>(run.exp), run.rank == 0 ? '2' : '1');
            fp_add_term(out, word, c * ce);
        }
    }
    return out;
}

}  // namespace ursg2
