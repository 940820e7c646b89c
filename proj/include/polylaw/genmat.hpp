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

#ifndef POLYLAW_GENMAT_HPP
#define POLYLAW_GENMAT_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "divpow.hpp"
#include "freering.hpp"
#include "multipoly.hpp"
#include "polymatrix.hpp"
#include "qmatrix.hpp"

namespace polylaw::genmat {

using divpow::DPElem;
using divpow::DPMonomial;
using exact::Monomial;
using exact::MultiPoly;
using exact::PolyMatrix;
using exact::QMatrix;
using exact::VarId;
using freering::FreeElem;
using freering::Label;
using freering::MultiDegree;
using freering::Word;

struct GenericContext {
    unsigned n = 2;
    std::vector<Label> gens{"x", "y"};

    bool has_label(const Label& s) const {
        return std::find(gens.begin(), gens.end(), s) != gens.end();
    }
};

/// The generic matrix attached to generator label s: entries are the
/// commuting indeterminates x[i,j,s].
inline PolyMatrix generic_matrix(const GenericContext& ctx, const Label& s) {
    PolyMatrix m(ctx.n);
    for (unsigned i = 0; i < ctx.n; ++i)
        for (unsigned j = 0; j < ctx.n; ++j)
            m.at(i, j) = MultiPoly::variable(VarId::entry(static_cast<int>(i) + 1,
                                                          static_cast<int>(j) + 1, s));
    return m;
}

/// The ring homomorphism from the free ring into n x n matrices of
/// polynomials, sending each generator to its generic matrix.
inline PolyMatrix embed_generic(const FreeElem& f, const GenericContext& ctx) {
    PolyMatrix acc(ctx.n);
    for (const auto& [w, c] : f.terms()) {
        PolyMatrix m = PolyMatrix::identity(ctx.n);
        for (const Label& s : w) {
            if (!ctx.has_label(s)) throw std::invalid_argument("unknown generator label: " + s);
            m = m * generic_matrix(ctx, s);
        }
        acc = acc + MultiPoly(c) * m;
    }
    return acc;
}

namespace detail {

inline PolyMatrix principal_submatrix(const PolyMatrix& b, const std::vector<unsigned>& idx) {
    PolyMatrix s(static_cast<unsigned>(idx.size()));
    for (unsigned i = 0; i < idx.size(); ++i)
        for (unsigned j = 0; j < idx.size(); ++j) s.at(i, j) = b.at(idx[i], idx[j]);
    return s;
}

}  // namespace detail

/// i-th characteristic coefficient e_i(b): the trace of the i-th exterior
/// power, computed as the sum of the principal i x i minors. e_0 = 1 and
/// e_i = 0 for i beyond the matrix size. Equivalently the coefficient of
/// t^(n-i) in det(tI + b); the test suite checks the two routes agree.
inline MultiPoly char_coeff(const PolyMatrix& b, unsigned i) {
    unsigned n = b.size();
    if (i == 0) return MultiPoly(1);
    if (i > n) return MultiPoly();
    MultiPoly sum;
    std::vector<unsigned> idx(i);
    // Enumerate i-subsets of {0..n-1} in lexicographic order.
    for (unsigned k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        sum += poly_det(detail::principal_submatrix(b, idx));
        unsigned k = i;
        while (k > 0 && idx[k - 1] == n - i + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (unsigned t = k; t < i; ++t) idx[t] = idx[t - 1] + 1;
    }
    return sum;
}

/// The determinant law: det of the generic-matrix image of f.
inline MultiPoly det_law(const FreeElem& f, const GenericContext& ctx) {
    return poly_det(embed_generic(f, ctx));
}

/// Image of a normal-form divided-power monomial under the projection onto
/// the invariant ring: the coefficient of lambda^alpha in
/// det(lambda_0 I + sum_k lambda_k j_n(w_k)), the implicit padding riding on
/// the identity summand.
inline MultiPoly pi_image(const DPMonomial& u, const GenericContext& ctx) {
    if (u.n != ctx.n)
        throw std::invalid_argument("degree mismatch: monomial degree " + std::to_string(u.n) +
                                    " vs matrix size " + std::to_string(ctx.n));
    PolyMatrix m(ctx.n);
    std::map<VarId, unsigned> spec;
    VarId pad = VarId::formal("l", 0);
    m = MultiPoly::variable(pad) * PolyMatrix::identity(ctx.n);
    spec[pad] = u.padding();
    unsigned k = 1;
    for (const auto& [w, e] : u.factors) {
        VarId lam = VarId::formal("l", k++);
        m = m + MultiPoly::variable(lam) * embed_generic(FreeElem::from_word(w), ctx);
        spec[lam] = e;
    }
    return poly_det(m).coeff_extract(spec);
}

inline MultiPoly pi_image(const DPElem& e, const GenericContext& ctx) {
    MultiPoly r;
    for (const auto& [m, c] : e.terms()) r += c * pi_image(m, ctx);
    return r;
}

namespace detail {

inline Int int_det(const std::vector<std::vector<Int>>& g) {
    std::size_t n = g.size();
    if (n == 0) return Int(1);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Int det(0);
    // Leibniz sum with explicit inversion-count sign; n is small here.
    do {
        Int t(1);
        for (std::size_t i = 0; i < n; ++i) t *= g[i][perm[i]];
        unsigned inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        det += (inv % 2 == 0) ? t : Int(-t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline std::vector<std::vector<Int>> int_minor(const std::vector<std::vector<Int>>& g,
                                               std::size_t row, std::size_t col) {
    std::size_t n = g.size();
    std::vector<std::vector<Int>> m(n - 1, std::vector<Int>(n - 1));
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
            if (j == col) continue;
            m[mi][mj] = g[i][j];
            ++mj;
        }
        ++mi;
    }
    return m;
}

}  // namespace detail

/// Simultaneous-conjugation action of a unimodular integer matrix g on the
/// polynomial ring: substitutes each x[i,j,s] by the (i,j) entry of
/// g j_n(x_s) g^{-1}. Throws unless det(g) = +-1.
inline MultiPoly conjugation_action(const MultiPoly& p, const std::vector<std::vector<Int>>& g,
                                    const GenericContext& ctx) {
    unsigned n = ctx.n;
    if (g.size() != n) throw std::invalid_argument("conjugation matrix size mismatch");
    for (const auto& row : g)
        if (row.size() != n) throw std::invalid_argument("conjugation matrix size mismatch");
    Int det = detail::int_det(g);
    if (det != 1 && det != -1)
        throw std::invalid_argument("conjugation matrix is not unimodular (det = " +
                                    det.get_str() + ")");

    // For det = +-1 the inverse is det * adjugate, an integer matrix.
    PolyMatrix gp(n), ginv(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            gp.at(i, j) = MultiPoly(g[i][j]);
            Int cof = detail::int_det(detail::int_minor(g, j, i));
            if ((i + j) % 2 == 1) cof = -cof;
            ginv.at(i, j) = MultiPoly(det * cof);
        }

    std::map<VarId, MultiPoly> sigma;
    for (const Label& s : ctx.gens) {
        PolyMatrix conj = gp * generic_matrix(ctx, s) * ginv;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                sigma[VarId::entry(static_cast<int>(i) + 1, static_cast<int>(j) + 1, s)] =
                    conj.at(i, j);
    }
    return p.substitute(sigma);
}

/// Projection onto the polynomial ring of the (n-1)-sized generic matrices:
/// kills every entry variable in the last row or column.
inline MultiPoly delta(const MultiPoly& p, const GenericContext& ctx) {
    if (ctx.n < 2) throw std::invalid_argument("delta: matrix size must be >= 2");
    std::map<VarId, MultiPoly> sigma;
    for (const Label& s : ctx.gens)
        for (unsigned k = 1; k <= ctx.n; ++k) {
            sigma[VarId::entry(static_cast<int>(ctx.n), static_cast<int>(k), s)] = MultiPoly();
            sigma[VarId::entry(static_cast<int>(k), static_cast<int>(ctx.n), s)] = MultiPoly();
        }
    return p.substitute(sigma);
}

/// Monomial basis of the multidegree-d component of the polynomial ring in
/// the generic-matrix entries: for each label s the total degree in the
/// s-entries is d(s). Deterministic order.
inline std::vector<Monomial> component_monomials(const GenericContext& ctx, const MultiDegree& d) {
    std::vector<Label> labels;
    for (const auto& [s, k] : d)
        if (k) {
            if (!ctx.has_label(s)) throw std::invalid_argument("unknown generator label: " + s);
            labels.push_back(s);
        }

    std::vector<Monomial> out;
    Monomial cur;
    // Per label, distribute degree d(s) over the n^2 entry variables.
    auto rec = [&](auto&& self, std::size_t li) -> void {
        if (li == labels.size()) {
            out.push_back(cur);
            return;
        }
        const Label& s = labels[li];
        std::vector<VarId> vars;
        for (unsigned i = 1; i <= ctx.n; ++i)
            for (unsigned j = 1; j <= ctx.n; ++j)
                vars.push_back(VarId::entry(static_cast<int>(i), static_cast<int>(j), s));
        unsigned want = d.at(s);
        auto dist = [&](auto&& dself, std::size_t vi, unsigned rem) -> void {
            if (vi + 1 == vars.size()) {
                if (rem) cur[vars[vi]] = rem;
                self(self, li + 1);
                cur.erase(vars[vi]);
                return;
            }
            for (unsigned e = 0; e <= rem; ++e) {
                if (e) cur[vars[vi]] = e;
                dself(dself, vi + 1, rem - e);
                cur.erase(vars[vi]);
            }
        };
        dist(dist, 0, want);
    };
    rec(rec, 0);
    return out;
}

namespace detail {

/// Coordinates of a multihomogeneous polynomial in the given monomial basis.
/// Every monomial of p must appear in the index.
inline std::vector<Rat> coordinates(const MultiPoly& p, const std::map<Monomial, std::size_t>& index,
                                    std::size_t dim) {
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("monomial outside component basis");
        v[it->second] = Rat(c);
    }
    return v;
}

inline std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry.
inline std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int lcm(1);
    for (const Rat& q : v)
        if (q != 0) {
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
    std::vector<Int> w(v.size());
    Int gcd(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        assert(scaled.get_den() == 1);
        w[i] = scaled.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w[i].get_mpz_t());
    }
    if (gcd == 0) return w;
    int sign = 0;
    for (const Int& c : w)
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    if (sign < 0) gcd = -gcd;
    for (Int& c : w) c /= gcd;
    return w;
}

}  // namespace detail

struct InvariantSpace {
    unsigned dim = 0;
    std::vector<MultiPoly> basis;  // primitive integer combinations
};

/// Basis of the conjugation invariants in one multidegree component,
/// obtained by solving the exact linear system that makes a general
/// coefficient vector invariant under a generating set of the integral
/// general linear group: the elementary matrices I + tE_{ij} as polynomial
/// identities in a formal t, adjacent transpositions and single-entry sign
/// matrices.
inline InvariantSpace invariant_space(const GenericContext& ctx, const MultiDegree& d) {
    std::vector<Monomial> mons = component_monomials(ctx, d);
    if (mons.empty()) return {};
    std::size_t m = mons.size();

    // Images of each basis monomial under each group generator.
    std::vector<std::vector<MultiPoly>> images;  // one vector per generator

    unsigned n = ctx.n;
    VarId t = VarId::formal("t", 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            PolyMatrix p = PolyMatrix::identity(n), pinv = PolyMatrix::identity(n);
            p.at(i, j) = MultiPoly::variable(t);
            pinv.at(i, j) = -MultiPoly::variable(t);
            std::map<VarId, MultiPoly> sigma;
            for (const Label& s : ctx.gens) {
                PolyMatrix conj = p * generic_matrix(ctx, s) * pinv;
                for (unsigned a = 0; a < n; ++a)
                    for (unsigned b = 0; b < n; ++b)
                        sigma[VarId::entry(static_cast<int>(a) + 1, static_cast<int>(b) + 1, s)] =
                            conj.at(a, b);
            }
            std::vector<MultiPoly> img(m);
            for (std::size_t k = 0; k < m; ++k)
                img[k] = MultiPoly::term(mons[k], 1).substitute(sigma);
            images.push_back(std::move(img));
        }

    auto integer_generator = [&](const std::vector<std::vector<Int>>& g) {
        std::vector<MultiPoly> img(m);
        for (std::size_t k = 0; k < m; ++k)
            img[k] = conjugation_action(MultiPoly::term(mons[k], 1), g, ctx);
        images.push_back(std::move(img));
    };
    for (unsigned p = 0; p + 1 < n; ++p) {
        std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
        for (unsigned k = 0; k < n; ++k) g[k][k] = 1;
        g[p][p] = 0;
        g[p + 1][p + 1] = 0;
        g[p][p + 1] = 1;
        g[p + 1][p] = 1;
        integer_generator(g);
    }
    for (unsigned p = 0; p < n; ++p) {
        std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
        for (unsigned k = 0; k < n; ++k) g[k][k] = 1;
        g[p][p] = -1;
        integer_generator(g);
    }

    // Rows of the condition system: for each generator, coefficients of
    // sigma(mono_k) - mono_k collected per (monomial x t-power).
    std::map<Monomial, std::size_t> rowindex;
    std::vector<std::map<std::size_t, Rat>> rows;  // sparse rows per condition monomial
    for (const auto& img : images) {
        std::map<Monomial, std::size_t> local;
        for (std::size_t k = 0; k < m; ++k) {
            MultiPoly diff = img[k] - MultiPoly::term(mons[k], 1);
            for (const auto& [mono, c] : diff.terms()) {
                auto [it, inserted] = local.emplace(mono, rows.size());
                if (inserted) rows.emplace_back();
                rows[it->second][k] = Rat(c);
            }
        }
    }

    QMatrix sys(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, c] : rows[r]) sys.at(r, k) = c;

    auto rn = rank_nullspace(sys);
    InvariantSpace out;
    out.dim = static_cast<unsigned>(rn.nullspace.size());
    for (const auto& vec : rn.nullspace) {
        std::vector<Int> w = detail::primitive_integer(vec);
        MultiPoly p;
        for (std::size_t k = 0; k < m; ++k)
            if (w[k] != 0) p.add_term(mons[k], w[k]);
        out.basis.push_back(std::move(p));
    }
    return out;
}

/// Generator of the e-subring: the i-th characteristic coefficient of the
/// generic-matrix image of a word. The word is stored as its least cyclic
/// rotation, the canonical representative among the words with the same
/// characteristic coefficients.
struct ESymbol {
    unsigned i = 1;
    Word w;

    ESymbol() = default;
    ESymbol(unsigned idx, const Word& word) : i(idx), w(freering::canonical_rotation(word)) {
        if (word.empty()) throw std::invalid_argument("e-symbol word must be non-empty");
    }

    MultiDegree multidegree() const { return freering::mdeg_scale(freering::multidegree(w), i); }

    friend bool operator==(const ESymbol& a, const ESymbol& b) { return a.i == b.i && a.w == b.w; }
    friend bool operator<(const ESymbol& a, const ESymbol& b) {
        if (a.i != b.i) return a.i < b.i;
        return freering::WordLenLex{}(a.w, b.w);
    }

    std::string str() const { return "e[" + std::to_string(i) + "](" + freering::word_str(w) + ")"; }
};

using EMonomial = std::map<ESymbol, unsigned>;

/// Commutative polynomial with integer coefficients in e-symbols: the
/// presentation layer for elements of the invariant ring.
class EExpression {
public:
    using TermMap = std::map<EMonomial, Int>;

    EExpression() = default;
    EExpression(long c) { if (c != 0) terms_[EMonomial{}] = c; }
    EExpression(const Int& c) { if (c != 0) terms_[EMonomial{}] = c; }

    static EExpression symbol(const ESymbol& s) {
        EExpression e;
        e.terms_[EMonomial{{s, 1}}] = 1;
        return e;
    }
    static EExpression term(const EMonomial& m, const Int& c) {
        EExpression e;
        if (c != 0) e.terms_[m] = c;
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const EMonomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    EExpression& operator+=(const EExpression& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    EExpression& operator-=(const EExpression& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, Int(-c));
        return *this;
    }
    friend EExpression operator+(EExpression a, const EExpression& b) { return a += b; }
    friend EExpression operator-(EExpression a, const EExpression& b) { return a -= b; }
    friend EExpression operator*(const EExpression& a, const EExpression& b) {
        EExpression r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                EMonomial m = ma;
                for (const auto& [s, e] : mb) m[s] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend EExpression operator*(const Int& c, const EExpression& e) {
        EExpression r;
        if (c == 0) return r;
        for (const auto& [m, k] : e.terms_) r.terms_[m] = c * k;
        return r;
    }

    friend bool operator==(const EExpression& a, const EExpression& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const EExpression& a, const EExpression& b) { return !(a == b); }

    /// Evaluation into the polynomial ring via e_i(j_n(w)).
    MultiPoly eval_poly(const GenericContext& ctx) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            MultiPoly t(c);
            for (const auto& [s, e] : m)
                t *= char_coeff(embed_generic(FreeElem::from_word(s.w), ctx), s.i).pow(e);
            r += t;
        }
        return r;
    }

    /// Ring-homomorphic evaluation through a symbol assignment. R must model
    /// a commutative ring with R(long) constants.
    template <class R, class SymbolMap>
    R eval(SymbolMap&& phi) const {
        R r(0L);
        for (const auto& [m, c] : terms_) {
            R t(1L);
            for (const auto& [s, e] : m) {
                R val = phi(s);
                for (unsigned k = 0; k < e; ++k) t = t * val;
            }
            r = r + int_scale(c, t);
        }
        return r;
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
            for (const auto& [s, e] : m) {
                if (printed) os << "*";
                os << s.str();
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const EExpression& e) {
        return os << e.str();
    }

private:
    TermMap terms_;

    template <class R>
    static R scale(const Int& c, const R& v);
};

template <class R>
R EExpression::scale(const Int& c, const R& v) {
    // Exponentiation-by-doubling on the additive side keeps huge integer
    // coefficients cheap.
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

/// E-symbols whose multidegree divides into d, words capped at `wordcap`
/// letters, canonical rotations only.
inline std::vector<ESymbol> enumerate_e_symbols(const GenericContext& ctx, const MultiDegree& d,
                                                unsigned wordcap) {
    std::set<ESymbol> set;
    for (const Word& w : freering::enumerate_words(ctx.gens, wordcap)) {
        if (w.empty()) continue;
        if (!freering::mdeg_leq(freering::multidegree(w), d)) continue;
        for (unsigned i = 1; i <= ctx.n; ++i) {
            ESymbol s(i, w);
            if (freering::mdeg_leq(s.multidegree(), d)) set.insert(s);
        }
    }
    return std::vector<ESymbol>(set.begin(), set.end());
}

/// Products of e-symbols of combined multidegree exactly d.
inline std::vector<EMonomial> enumerate_e_monomials(const GenericContext& ctx,
                                                    const MultiDegree& d, unsigned wordcap) {
    std::vector<ESymbol> syms = enumerate_e_symbols(ctx, d, wordcap);
    std::vector<EMonomial> out;
    EMonomial cur;
    auto rec = [&](auto&& self, std::size_t idx, const MultiDegree& rem) -> void {
        if (freering::mdeg_total(rem) == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == syms.size()) return;
        const ESymbol& s = syms[idx];
        MultiDegree sd = s.multidegree();
        MultiDegree left = rem;
        unsigned e = 0;
        while (true) {
            if (e > 0) cur[s] = e;
            self(self, idx + 1, left);
            if (!freering::mdeg_leq(sd, left)) break;
            left = freering::mdeg_sub(left, sd);
            ++e;
        }
        cur.erase(s);
    };
    rec(rec, 0, d);
    return out;
}

inline MultiPoly e_monomial_value(const GenericContext& ctx, const EMonomial& m) {
    return EExpression::term(m, 1).eval_poly(ctx);
}

/// Rank over Q of the span of the e-monomial values inside the
/// multidegree-d component of the polynomial ring.
inline unsigned e_span_rank(const GenericContext& ctx, const MultiDegree& d, unsigned wordcap) {
    std::vector<Monomial> basis = component_monomials(ctx, d);
    if (basis.empty()) return 0;
    auto index = detail::index_of(basis);
    std::vector<std::vector<Rat>> rows;
    for (const EMonomial& m : enumerate_e_monomials(ctx, d, wordcap))
        rows.push_back(detail::coordinates(e_monomial_value(ctx, m), index, basis.size()));
    return static_cast<unsigned>(exact::span_rank(rows, basis.size()));
}

/// Rank over Q of the span of the projection images of the basis
/// divided-power monomials of multidegree d.
inline unsigned pi_image_rank(const GenericContext& ctx, const MultiDegree& d) {
    std::vector<Monomial> basis = component_monomials(ctx, d);
    if (basis.empty())
        return freering::mdeg_total(d) == 0 ? 1u : 0u;  // degree-0 component is the constants
    auto index = detail::index_of(basis);
    std::vector<std::vector<Rat>> rows;
    for (const DPMonomial& u : divpow::dp_component_basis(ctx.n, d, ctx.gens))
        rows.push_back(detail::coordinates(pi_image(u, ctx), index, basis.size()));
    return static_cast<unsigned>(exact::span_rank(rows, basis.size()));
}

}  // namespace polylaw::genmat

#endif
