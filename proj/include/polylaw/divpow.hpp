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

#ifndef POLYLAW_DIVPOW_HPP
#define POLYLAW_DIVPOW_HPP

#include <cassert>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freering.hpp"
#include "numeric.hpp"
#include "qmatrix.hpp"

namespace polylaw::divpow {

using freering::FreeElem;
using freering::Label;
using freering::MultiDegree;
using freering::Word;
using freering::WordLenLex;

/// Normal-form generating monomial of the degree-n piece of the divided
/// powers algebra of the free ring: the product of divided powers of
/// distinct non-empty words, padded implicitly by the divided power of the
/// ring identity so that the exponents total exactly n.
struct DPMonomial {
    using FactorMap = std::map<Word, unsigned, WordLenLex>;

    unsigned n = 0;
    FactorMap factors;  // non-empty words -> positive exponent, sum <= n

    DPMonomial() = default;
    DPMonomial(unsigned ambient, FactorMap f) : n(ambient), factors(std::move(f)) {
        assert(factor_degree() <= n);
    }

    static DPMonomial unit(unsigned ambient) { return DPMonomial(ambient, {}); }

    unsigned factor_degree() const {
        unsigned t = 0;
        for (const auto& [w, e] : factors) {
            assert(!w.empty() && e > 0);
            t += e;
        }
        return t;
    }

    /// Exponent of the implicit divided power of 1.
    unsigned padding() const { return n - factor_degree(); }

    MultiDegree multidegree() const {
        MultiDegree d;
        for (const auto& [w, e] : factors) d = freering::mdeg_add(d, freering::mdeg_scale(freering::multidegree(w), e));
        return d;
    }

    friend bool operator==(const DPMonomial& a, const DPMonomial& b) {
        return a.n == b.n && a.factors == b.factors;
    }
    friend bool operator!=(const DPMonomial& a, const DPMonomial& b) { return !(a == b); }

    friend bool operator<(const DPMonomial& a, const DPMonomial& b) {
        if (a.n != b.n) return a.n < b.n;
        WordLenLex less;
        auto i = a.factors.begin(), j = b.factors.begin();
        for (; i != a.factors.end() && j != b.factors.end(); ++i, ++j) {
            if (less(i->first, j->first)) return true;
            if (less(j->first, i->first)) return false;
            if (i->second != j->second) return i->second < j->second;
        }
        return i == a.factors.end() && j != b.factors.end();
    }

    std::string str() const {
        std::ostringstream os;
        bool printed = false;
        if (padding() > 0 || factors.empty()) {
            os << "d(1," << padding() << ")";
            printed = true;
        }
        for (const auto& [w, e] : factors) {
            if (printed) os << "*";
            os << "d(" << freering::word_str(w) << "," << e << ")";
            printed = true;
        }
        return os.str();
    }
};

/// Element of the degree-n piece: integer combination of normal-form
/// monomials, all with the same ambient degree n.
class DPElem {
public:
    using TermMap = std::map<DPMonomial, Int>;

    explicit DPElem(unsigned ambient = 0) : n_(ambient) {}

    static DPElem zero(unsigned ambient) { return DPElem(ambient); }
    static DPElem unit(unsigned ambient) { return monomial(DPMonomial::unit(ambient)); }
    static DPElem monomial(const DPMonomial& m, const Int& c = 1) {
        DPElem e(m.n);
        if (c != 0) e.terms_[m] = c;
        return e;
    }

    unsigned degree() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DPMonomial& m, const Int& c) {
        assert(m.n == n_);
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    DPElem& operator+=(const DPElem& o) {
        assert(n_ == o.n_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DPElem& operator-=(const DPElem& o) {
        assert(n_ == o.n_);
        for (const auto& [m, c] : o.terms_) add_term(m, Int(-c));
        return *this;
    }
    friend DPElem operator+(DPElem a, const DPElem& b) { return a += b; }
    friend DPElem operator-(DPElem a, const DPElem& b) { return a -= b; }
    friend DPElem operator*(const Int& c, const DPElem& e) {
        DPElem r(e.n_);
        if (c == 0) return r;
        for (const auto& [m, k] : e.terms_) r.terms_[m] = c * k;
        return r;
    }

    friend bool operator==(const DPElem& a, const DPElem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DPElem& a, const DPElem& b) { return !(a == b); }

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
            if (a != 1) os << a.get_str() << "*";
            os << m.str();
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const DPElem& e) { return os << e.str(); }

private:
    unsigned n_;
    TermMap terms_;
};

/// Nonnegative integer matrices with prescribed row sums `alpha` and column
/// sums `beta`, enumerated by row-major backtracking in lexicographic
/// order. Empty when the sums disagree.
inline std::vector<std::vector<std::vector<unsigned>>> contingency_tables(
    const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta) {
    std::vector<std::vector<std::vector<unsigned>>> out;
    unsigned sa = 0, sb = 0;
    for (unsigned a : alpha) sa += a;
    for (unsigned b : beta) sb += b;
    if (sa != sb) return out;

    std::size_t rows = alpha.size(), cols = beta.size();
    std::vector<std::vector<unsigned>> table(rows, std::vector<unsigned>(cols, 0));
    std::vector<unsigned> col_rem(beta);

    // When there are no columns, the unique table is the empty one provided
    // every row sum is zero (sa == 0 == sb here).
    if (cols == 0) {
        if (sa == 0) out.push_back(table);
        return out;
    }

    auto fill_row = [&](auto&& self, auto&& next_row, std::size_t i, std::size_t j,
                        unsigned row_rem) -> void {
        if (j + 1 == cols) {
            if (row_rem <= col_rem[j]) {
                table[i][j] = row_rem;
                col_rem[j] -= row_rem;
                next_row(self, next_row, i + 1);
                col_rem[j] += row_rem;
                table[i][j] = 0;
            }
            return;
        }
        unsigned maxv = std::min(row_rem, col_rem[j]);
        for (unsigned v = 0; v <= maxv; ++v) {
            table[i][j] = v;
            col_rem[j] -= v;
            self(self, next_row, i, j + 1, row_rem - v);
            col_rem[j] += v;
            table[i][j] = 0;
        }
    };
    auto next_row = [&](auto&& fill, auto&& self, std::size_t i) -> void {
        if (i == rows) {
            out.push_back(table);
            return;
        }
        fill(fill, self, i, 0, alpha[i]);
    };
    next_row(fill_row, next_row, 0);
    return out;
}

namespace detail {

/// Working representation during normalization: word -> exponent with the
/// empty word allowed as an explicit factor.
using ExplicitMono = std::map<Word, unsigned, WordLenLex>;
using ExplicitSum = std::map<ExplicitMono, Int>;

/// Merge w^(e) into the monomial, applying the binomial relation
/// m^(i) m^(j) = C(i+j, i) m^(i+j).
inline void merge_power(ExplicitMono& mono, Int& coeff, const Word& w, unsigned e) {
    if (e == 0) return;
    unsigned& cur = mono[w];
    if (cur > 0) coeff *= binomial(cur + e, e);
    cur += e;
}

/// Divided power f^(k) of a free-ring element expanded into explicit
/// monomials: sums expand over compositions, scalars come out as powers.
inline ExplicitSum expand_power(const FreeElem& f, unsigned k) {
    ExplicitSum out;
    if (k == 0) {
        out[ExplicitMono{}] = 1;
        return out;
    }
    std::vector<std::pair<Word, Int>> ts(f.terms().begin(), f.terms().end());
    std::vector<unsigned> comp(ts.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, unsigned rem) -> void {
        if (idx + 1 == ts.size()) {
            comp[idx] = rem;
            ExplicitMono mono;
            Int coeff(1);
            for (std::size_t t = 0; t < ts.size(); ++t) {
                if (comp[t] == 0) continue;
                mono[ts[t].first] = comp[t];
                coeff *= int_pow(ts[t].second, comp[t]);
            }
            auto [it, inserted] = out.emplace(std::move(mono), coeff);
            if (!inserted) it->second += coeff;
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            comp[idx] = e;
            self(self, idx + 1, rem - e);
        }
    };
    if (ts.empty()) return out;  // 0^(k) = 0 for k > 0
    rec(rec, 0, k);
    return out;
}

inline ExplicitSum mul_sums(const ExplicitSum& a, const ExplicitSum& b) {
    ExplicitSum out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            ExplicitMono mono = ma;
            Int coeff = ca * cb;
            for (const auto& [w, e] : mb) merge_power(mono, coeff, w, e);
            auto [it, inserted] = out.emplace(std::move(mono), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

}  // namespace detail

/// Normalizes a formal product of divided powers of free-ring elements into
/// the degree-n piece. Negative exponents annihilate the product; the
/// product is padded by the divided power of 1 up to total degree n; a total
/// degree above n is a degree mismatch.
inline DPElem dp_normalize(const std::vector<std::pair<FreeElem, long>>& raw, unsigned n) {
    for (const auto& [f, k] : raw)
        if (k < 0) return DPElem::zero(n);

    std::vector<std::pair<FreeElem, unsigned>> factors;
    unsigned long total = 0;
    for (const auto& [f, k] : raw) {
        if (k == 0) continue;
        factors.emplace_back(f, static_cast<unsigned>(k));
        total += static_cast<unsigned long>(k);
    }
    if (total > n)
        throw std::invalid_argument("degree mismatch: divided-power exponents total " +
                                    std::to_string(total) + " > ambient " + std::to_string(n));
    if (total < n) factors.emplace_back(FreeElem::one(), n - static_cast<unsigned>(total));

    detail::ExplicitSum acc;
    acc[detail::ExplicitMono{}] = 1;
    for (const auto& [f, k] : factors) acc = detail::mul_sums(acc, detail::expand_power(f, k));

    DPElem out(n);
    for (const auto& [mono, coeff] : acc) {
        DPMonomial::FactorMap fs;
        unsigned degree = 0;
        for (const auto& [w, e] : mono) {
            degree += e;
            if (!w.empty()) fs.emplace(w, e);
        }
        assert(degree == n);
        (void)degree;
        out.add_term(DPMonomial(n, std::move(fs)), coeff);
    }
    return out;
}

namespace detail {

/// Factor list of a normal-form monomial with the padding made explicit.
inline std::vector<std::pair<Word, unsigned>> explicit_factors(const DPMonomial& m) {
    std::vector<std::pair<Word, unsigned>> fs;
    if (m.padding() > 0) fs.emplace_back(Word{}, m.padding());
    for (const auto& [w, e] : m.factors) fs.emplace_back(w, e);
    return fs;
}

}  // namespace detail

/// The ring product on the degree-n piece: the sum over all contingency
/// tables with row sums from `u` and column sums from `v` of the product of
/// divided powers of the pairwise word concatenations.
inline DPElem tau_mul(const DPElem& u, const DPElem& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("degree mismatch in divided-power product");
    unsigned n = u.degree();
    DPElem out(n);
    for (const auto& [mu, cu] : u.terms()) {
        auto au = detail::explicit_factors(mu);
        std::vector<unsigned> alpha;
        alpha.reserve(au.size());
        for (const auto& [w, e] : au) alpha.push_back(e);
        for (const auto& [mv, cv] : v.terms()) {
            auto bv = detail::explicit_factors(mv);
            std::vector<unsigned> beta;
            beta.reserve(bv.size());
            for (const auto& [w, e] : bv) beta.push_back(e);

            for (const auto& table : contingency_tables(alpha, beta)) {
                detail::ExplicitMono mono;
                Int coeff = cu * cv;
                for (std::size_t i = 0; i < au.size(); ++i)
                    for (std::size_t j = 0; j < bv.size(); ++j) {
                        unsigned lam = table[i][j];
                        if (lam == 0) continue;
                        detail::merge_power(mono, coeff,
                                            freering::word_concat(au[i].first, bv[j].first), lam);
                    }
                DPMonomial::FactorMap fs;
                for (const auto& [w, e] : mono)
                    if (!w.empty()) fs.emplace(w, e);
                out.add_term(DPMonomial(n, std::move(fs)), coeff);
            }
        }
    }
    return out;
}

/// Coefficient of the multi-index xi in the universal degree-n law applied
/// to sum(lambda_i (x) a_i): the normalized product of the a_i^(xi_i) when
/// |xi| = n, zero otherwise.
inline DPElem gamma_coeff(const std::vector<FreeElem>& elements, const std::vector<unsigned>& xi,
                          unsigned n) {
    if (elements.size() != xi.size())
        throw std::invalid_argument("gamma_coeff: element/multi-index size mismatch");
    unsigned long total = 0;
    for (unsigned e : xi) total += e;
    if (total != n) return DPElem::zero(n);
    std::vector<std::pair<FreeElem, long>> raw;
    raw.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        raw.emplace_back(elements[i], static_cast<long>(xi[i]));
    return dp_normalize(raw, n);
}

/// Transition map to the degree-(n-1) piece: reduces the implicit padding by
/// one and kills the monomials with no padding.
inline DPElem rho(const DPElem& e) {
    if (e.degree() == 0) throw std::invalid_argument("rho: degree must be >= 1");
    DPElem out(e.degree() - 1);
    for (const auto& [m, c] : e.terms()) {
        if (m.padding() == 0) continue;
        out.add_term(DPMonomial(e.degree() - 1, m.factors), c);
    }
    return out;
}

/// Basis monomials of the multidegree-d component of the degree-n piece over
/// the generators S, in deterministic order.
inline std::vector<DPMonomial> dp_component_basis(unsigned n, const MultiDegree& d,
                                                  const std::vector<Label>& S) {
    std::vector<Word> words;
    for (const Word& w : freering::enumerate_words_bounded(S, d))
        if (!w.empty()) words.push_back(w);

    std::vector<DPMonomial> out;
    DPMonomial::FactorMap cur;
    auto rec = [&](auto&& self, std::size_t idx, const MultiDegree& rem, unsigned budget) -> void {
        if (freering::mdeg_total(rem) == 0) {
            out.push_back(DPMonomial(n, cur));
            return;
        }
        if (idx == words.size() || budget == 0) return;
        const Word& w = words[idx];
        MultiDegree wd = freering::multidegree(w);
        MultiDegree left = rem;
        unsigned e = 0;
        while (true) {
            if (e > 0) cur[w] = e;
            self(self, idx + 1, left, budget - e);
            if (e + 1 > budget || !freering::mdeg_leq(wd, left)) break;
            left = freering::mdeg_sub(left, wd);
            ++e;
        }
        cur.erase(w);
    };
    rec(rec, 0, d, n);
    return out;
}

namespace detail {

/// Enumerates all componentwise sub-multidegrees of d, in deterministic
/// order, including 0 and d itself.
inline std::vector<MultiDegree> sub_multidegrees(const MultiDegree& d) {
    std::vector<Label> labels;
    for (const auto& [s, k] : d)
        if (k) labels.push_back(s);
    std::vector<MultiDegree> out;
    MultiDegree cur;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == labels.size()) {
            out.push_back(cur);
            return;
        }
        unsigned maxk = d.at(labels[idx]);
        for (unsigned k = 0; k <= maxk; ++k) {
            if (k) cur[labels[idx]] = k;
            self(self, idx + 1);
        }
        cur.erase(labels[idx]);
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// Rank over Q of the multidegree-d component of the abelianization of the
/// degree-n piece: the basis-monomial span modulo the span of
/// z tau (u tau v - v tau u) for basis monomials z, u, v whose multidegrees
/// sum to d. The quotient ring itself is never materialized.
inline unsigned ab_component_rank(unsigned n, const MultiDegree& d, const std::vector<Label>& S) {
    std::vector<DPMonomial> basis = dp_component_basis(n, d, S);
    if (basis.empty()) return 0;
    std::map<DPMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<std::vector<Rat>> rows;
    for (const MultiDegree& du : detail::sub_multidegrees(d)) {
        if (freering::mdeg_total(du) == 0) continue;
        MultiDegree rest = freering::mdeg_sub(d, du);
        for (const MultiDegree& dv : detail::sub_multidegrees(rest)) {
            if (freering::mdeg_total(dv) == 0) continue;
            if (dv < du) continue;  // [u,v] = -[v,u]
            MultiDegree dz = freering::mdeg_sub(rest, dv);
            auto bu = dp_component_basis(n, du, S);
            auto bv = dp_component_basis(n, dv, S);
            auto bz = dp_component_basis(n, dz, S);
            for (const DPMonomial& u : bu)
                for (const DPMonomial& v : bv) {
                    DPElem comm = tau_mul(DPElem::monomial(u), DPElem::monomial(v)) -
                                  tau_mul(DPElem::monomial(v), DPElem::monomial(u));
                    if (comm.is_zero()) continue;
                    for (const DPMonomial& z : bz) {
                        DPElem g = tau_mul(DPElem::monomial(z), comm);
                        if (g.is_zero()) continue;
                        std::vector<Rat> row(basis.size(), Rat(0));
                        for (const auto& [m, c] : g.terms()) {
                            auto it = index.find(m);
                            assert(it != index.end());
                            row[it->second] = Rat(c);
                        }
                        rows.push_back(std::move(row));
                    }
                }
        }
    }
    std::size_t crank = exact::span_rank(rows, basis.size());
    return static_cast<unsigned>(basis.size() - crank);
}

/// Parses a single normal-form monomial, e.g. `d(1,1)*d(x*x,1)`. Factors
/// `d(1,k)` contribute to the padding; when explicit padding is present the
/// exponents must total exactly n, otherwise the padding is implicit.
inline DPMonomial parse_dp_monomial(std::string_view text, unsigned n) {
    polylaw::detail::Cursor cur{text};
    DPMonomial::FactorMap fs;
    unsigned long explicit_padding = 0;
    bool has_explicit_padding = false;
    unsigned long factor_total = 0;
    while (true) {
        std::string id = cur.ident();
        if (id != "d") throw ParseError("expected factor d(word,exp)", cur.pos);
        cur.expect('(');
        Word w;
        if (cur.peek() == '1') {
            cur.expect('1');
        } else {
            w.push_back(cur.ident());
            while (cur.accept('*')) w.push_back(cur.ident());
        }
        cur.expect(',');
        unsigned long e = cur.uinteger();
        cur.expect(')');
        if (w.empty()) {
            explicit_padding += e;
            has_explicit_padding = true;
        } else if (e > 0) {
            auto [it, inserted] = fs.emplace(w, static_cast<unsigned>(e));
            if (!inserted) it->second += static_cast<unsigned>(e);
            factor_total += e;
        }
        if (!cur.accept('*')) break;
    }
    if (!cur.done()) throw ParseError("trailing input", cur.pos);
    if (factor_total > n || (has_explicit_padding && factor_total + explicit_padding != n))
        throw std::invalid_argument("degree mismatch: monomial does not fit ambient degree " +
                                    std::to_string(n));
    return DPMonomial(n, std::move(fs));
}

}  // namespace polylaw::divpow

#endif
