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

#ifndef POLYLAW_NUMERIC_HPP
#define POLYLAW_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace polylaw {

/// Arbitrary-precision integer. All coefficient arithmetic in the library is
/// exact; overflow cannot occur.
using Int = mpz_class;

/// Exact rational, kept canonical by gmpxx arithmetic.
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// c * v for a ring element v of any type supporting + and -, by additive
/// doubling; keeps large integer coefficients cheap.
template <class R>
R int_scale(const Int& c, const R& v) {
    R acc(0L);
    R base = v;
    Int k = c >= 0 ? c : Int(-c);
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc + base;
        base = base + base;
        k >>= 1;
    }
    if (c < 0) acc = R(0L) - acc;
    return acc;
}

/// Error raised by the expression parsers; `pos` is a 0-based character
/// offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

/// Minimal character cursor shared by the text grammars.
struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    static bool ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    std::string ident() {
        skip_ws();
        if (pos >= s.size() || !ident_start(s[pos])) throw ParseError("expected identifier", pos);
        std::size_t b = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        return std::string(s.substr(b, pos - b));
    }

    unsigned long uinteger() {
        skip_ws();
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') throw ParseError("expected integer", pos);
        unsigned long v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            ++pos;
        }
        return v;
    }

    Int integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') throw ParseError("expected integer", pos);
        std::size_t b = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        Int v(std::string(s.substr(b, pos - b)));
        return neg ? Int(-v) : v;
    }
};

}  // namespace detail
}  // namespace polylaw

#endif
