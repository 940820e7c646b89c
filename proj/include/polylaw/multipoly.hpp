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

#ifndef POLYLAW_MULTIPOLY_HPP
#define POLYLAW_MULTIPOLY_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "varid.hpp"

namespace polylaw::exact {

/// Monomial: variable -> positive exponent. The empty map is the monomial 1.
using Monomial = std::map<VarId, unsigned>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) r[v] += e;
    return r;
}

/// Sparse multivariate polynomial with exact integer coefficients.
///
/// Terms are kept in a canonical map (no zero coefficients, no zero
/// exponents), so structural equality is polynomial equality and iteration
/// order is deterministic.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Int>;

    MultiPoly() = default;
    MultiPoly(long c) { if (c != 0) terms_[Monomial{}] = c; }
    MultiPoly(const Int& c) { if (c != 0) terms_[Monomial{}] = c; }

    static MultiPoly variable(const VarId& v, unsigned exp = 1) {
        MultiPoly p;
        if (exp > 0)
            p.terms_[Monomial{{v, exp}}] = 1;
        else
            p.terms_[Monomial{}] = 1;
        return p;
    }

    static MultiPoly term(const Monomial& m, const Int& c) {
        MultiPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    /// Constant term (the coefficient of the monomial 1).
    Int constant() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, Int(-c));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    /// Integer scaling.
    friend MultiPoly operator*(const Int& c, const MultiPoly& p) {
        MultiPoly r;
        if (c == 0) return r;
        for (const auto& [m, k] : p.terms_) r.terms_[m] = c * k;
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r(1);
        for (unsigned k = 0; k < e; ++k) r *= *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ < b.terms_;  // arbitrary but deterministic; for containers
    }

    /// Ring-homomorphic substitution. Variables absent from `sigma` map to
    /// themselves.
    MultiPoly substitute(const std::map<VarId, MultiPoly>& sigma) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            MultiPoly t(c);
            for (const auto& [v, e] : m) {
                auto it = sigma.find(v);
                if (it == sigma.end()) {
                    t *= MultiPoly::variable(v, e);
                } else {
                    t *= it->second.pow(e);
                }
            }
            r += t;
        }
        return r;
    }

    /// Coefficient of the monomial prescribed by `spec` in the given formal
    /// variables: keeps the terms whose exponent in every spec variable
    /// matches exactly (0 means "absent") and strips those variables.
    /// Summing `coeff * spec-monomial` over all specs reconstructs the
    /// polynomial.
    MultiPoly coeff_extract(const std::map<VarId, unsigned>& spec) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            bool match = true;
            for (const auto& [v, e] : spec) {
                auto it = m.find(v);
                unsigned have = it == m.end() ? 0u : it->second;
                if (have != e) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            Monomial rest;
            for (const auto& [v, e] : m)
                if (spec.find(v) == spec.end()) rest.emplace(v, e);
            r.add_term(rest, c);
        }
        return r;
    }

    /// Total degree in the variables for which `pred` holds.
    template <class Pred>
    unsigned degree_where(Pred pred) const {
        unsigned deg = 0;
        for (const auto& [m, c] : terms_) {
            unsigned d = 0;
            for (const auto& [v, e] : m)
                if (pred(v)) d += e;
            if (d > deg) deg = d;
        }
        return deg;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
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
            if (m.empty()) {
                os << a.get_str();
                continue;
            }
            bool printed = false;
            if (a != 1) {
                os << a.get_str();
                printed = true;
            }
            for (const auto& [v, e] : m) {
                if (printed) os << "*";
                os << v.str();
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

    /// Parses the polynomial grammar, e.g. `x[1,1,s]^2 + 2*l0*l1 - 3`.
    static MultiPoly parse(std::string_view text) {
        detail::Cursor cur{text};
        MultiPoly r = parse_sum(cur);
        if (!cur.done()) throw ParseError("trailing input", cur.pos);
        return r;
    }

private:
    TermMap terms_;

    static VarId parse_var(detail::Cursor& cur) {
        std::size_t at = cur.pos;
        std::string id = cur.ident();
        if (id == "x" && cur.peek() == '[') {
            cur.expect('[');
            long i = cur.integer().get_si();
            cur.expect(',');
            long j = cur.integer().get_si();
            cur.expect(',');
            std::string s = cur.ident();
            cur.expect(']');
            if (i < 1 || j < 1) throw ParseError("matrix indices are 1-based", at);
            return VarId::entry(static_cast<int>(i), static_cast<int>(j), s);
        }
        // Formal variable: tag followed by optional index digits.
        std::size_t split = id.size();
        while (split > 0 && id[split - 1] >= '0' && id[split - 1] <= '9') --split;
        if (split == 0) throw ParseError("bad variable name", at);
        unsigned idx = 0;
        if (split < id.size()) idx = static_cast<unsigned>(std::stoul(id.substr(split)));
        return VarId::formal(id.substr(0, split), idx);
    }

    static MultiPoly parse_term(detail::Cursor& cur) {
        Int coeff(1);
        Monomial m;
        bool have_factor = false;
        char c = cur.peek();
        if (c == '-' || c == '+' || (c >= '0' && c <= '9')) {
            coeff = cur.integer();
            have_factor = true;
            if (!cur.accept('*')) return term(m, coeff);
        }
        while (true) {
            VarId v = parse_var(cur);
            unsigned e = 1;
            if (cur.accept('^')) e = static_cast<unsigned>(cur.uinteger());
            if (e > 0) m[v] += e;
            have_factor = true;
            if (!cur.accept('*')) break;
        }
        if (!have_factor) throw ParseError("expected term", cur.pos);
        return term(m, coeff);
    }

    static MultiPoly parse_sum(detail::Cursor& cur) {
        MultiPoly r;
        bool neg = false;
        if (cur.accept('-'))
            neg = true;
        else
            cur.accept('+');
        while (true) {
            MultiPoly t = parse_term(cur);
            r += neg ? -t : t;
            if (cur.accept('+'))
                neg = false;
            else if (cur.accept('-'))
                neg = true;
            else
                break;
        }
        return r;
    }
};

}  // namespace polylaw::exact

#endif
