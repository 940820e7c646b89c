/*
   Copyright 2026 the polylaw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYLAW_FREERING_HPP
#define POLYLAW_FREERING_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace polylaw::freering {

using Label = std::string;

/// Word in the free monoid on generator labels; the empty word is the
/// identity and prints as `1`.
using Word = std::vector<Label>;

/// Length-lexicographic order (the canonical word order used for all term
/// maps and printed bases).
struct WordLenLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += w[i];
    }
    return s;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Least cyclic rotation in length-lex order. Characteristic-polynomial
/// coefficients of words are rotation invariants, so this is the canonical
/// representative used for e-symbols.
inline Word canonical_rotation(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word cur = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

/// Generator-wise degree vector with finite support (no zero entries kept).
using MultiDegree = std::map<Label, unsigned>;

inline MultiDegree multidegree(const Word& w) {
    MultiDegree d;
    for (const Label& s : w) ++d[s];
    return d;
}

inline MultiDegree mdeg_add(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (const auto& [s, k] : b)
        if (k) r[s] += k;
    return r;
}

inline MultiDegree mdeg_scale(const MultiDegree& a, unsigned k) {
    MultiDegree r;
    if (k)
        for (const auto& [s, e] : a) r[s] = e * k;
    return r;
}

/// Componentwise a <= b.
inline bool mdeg_leq(const MultiDegree& a, const MultiDegree& b) {
    for (const auto& [s, k] : a) {
        if (k == 0) continue;
        auto it = b.find(s);
        if (it == b.end() || it->second < k) return false;
    }
    return true;
}

inline MultiDegree mdeg_sub(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (const auto& [s, k] : b) {
        if (!k) continue;
        r[s] -= k;
        if (r[s] == 0) r.erase(s);
    }
    return r;
}

inline unsigned mdeg_total(const MultiDegree& d) {
    unsigned t = 0;
    for (const auto& [s, k] : d) t += k;
    return t;
}

inline std::string mdeg_str(const MultiDegree& d, const std::vector<Label>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        auto it = d.find(gens[i]);
        s += std::to_string(it == d.end() ? 0u : it->second);
    }
    return s + ")";
}

/// All words of length <= maxlen over the declared generator list, emitted
/// in length-lex order with the declared order of generators.
inline std::vector<Word> enumerate_words(const std::vector<Label>& gens, unsigned maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= maxlen; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (const Label& s : gens) {
                Word w = out[k];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

/// All words w (including the empty word) with multidegree(w) <= d.
inline std::vector<Word> enumerate_words_bounded(const std::vector<Label>& gens,
                                                 const MultiDegree& d) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    unsigned maxlen = mdeg_total(d);
    for (unsigned len = 1; len <= maxlen; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (const Label& s : gens) {
                Word w = out[k];
                w.push_back(s);
                if (mdeg_leq(multidegree(w), d)) out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

/// Element of the free ring F_S: an integer combination of words.
class FreeElem {
public:
    using TermMap = std::map<Word, Int, WordLenLex>;

    FreeElem() = default;

    static FreeElem zero() { return FreeElem(); }
    static FreeElem one() { return from_word(Word{}); }
    static FreeElem generator(const Label& s) { return from_word(Word{s}); }
    static FreeElem from_word(const Word& w, const Int& c = 1) {
        FreeElem f;
        if (c != 0) f.terms_[w] = c;
        return f;
    }
    static FreeElem constant(const Int& c) { return from_word(Word{}, c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Membership in the augmentation ideal F_S^+.
    bool is_augmentation() const {
        auto it = terms_.find(Word{});
        return it == terms_.end();
    }

    void add_term(const Word& w, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FreeElem& operator+=(const FreeElem& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    FreeElem& operator-=(const FreeElem& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, Int(-c));
        return *this;
    }
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }

    friend FreeElem operator*(const Int& c, const FreeElem& f) {
        FreeElem r;
        if (c == 0) return r;
        for (const auto& [w, k] : f.terms_) r.terms_[w] = c * k;
        return r;
    }

    /// Noncommutative product: bilinear extension of word concatenation.
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b) {
        FreeElem r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(word_concat(wa, wb), ca * cb);
        return r;
    }

    friend bool operator==(const FreeElem& a, const FreeElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FreeElem& a, const FreeElem& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (w.empty()) {
                os << a.get_str();
            } else if (a == 1) {
                os << word_str(w);
            } else {
                os << a.get_str() << "*" << word_str(w);
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const FreeElem& f) { return os << f.str(); }

    /// Parses integer-coefficient word sums, e.g. `2*x*y - 3` or `1 + x`.
    /// A bare `1` is the empty word.
    static FreeElem parse(std::string_view text) {
        detail::Cursor cur{text};
        FreeElem r;
        bool neg = false;
        if (cur.accept('-'))
            neg = true;
        else
            cur.accept('+');
        while (true) {
            Int coeff(1);
            Word w;
            bool have = false;
            char c = cur.peek();
            if (c >= '0' && c <= '9') {
                coeff = cur.integer();
                have = true;
            }
            if (!have || cur.accept('*')) {
                while (true) {
                    w.push_back(cur.ident());
                    have = true;
                    if (!cur.accept('*')) break;
                    // `*1` inside a word is tolerated as the identity.
                    if (cur.peek() == '1') {
                        cur.expect('1');
                        if (!cur.accept('*')) break;
                    }
                }
            }
            if (!have) throw ParseError("expected term", cur.pos);
            r.add_term(w, neg ? Int(-coeff) : coeff);
            if (cur.accept('+'))
                neg = false;
            else if (cur.accept('-'))
                neg = true;
            else
                break;
        }
        if (!cur.done()) throw ParseError("trailing input", cur.pos);
        return r;
    }

private:
    TermMap terms_;
};

}  // namespace polylaw::freering

#endif
