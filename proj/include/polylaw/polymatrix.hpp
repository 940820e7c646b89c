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

#ifndef POLYLAW_POLYMATRIX_HPP
#define POLYLAW_POLYMATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <vector>

#include "multipoly.hpp"

namespace polylaw::exact {

/// Square matrix over MultiPoly.
class PolyMatrix {
public:
    explicit PolyMatrix(unsigned n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static PolyMatrix identity(unsigned n) {
        PolyMatrix m(n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = MultiPoly(1);
        return m;
    }

    unsigned size() const { return n_; }

    MultiPoly& at(unsigned i, unsigned j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const MultiPoly& at(unsigned i, unsigned j) const {
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        assert(a.n_ == b.n_);
        PolyMatrix r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        assert(a.n_ == b.n_);
        PolyMatrix r(a.n_);
        for (unsigned i = 0; i < a.n_; ++i)
            for (unsigned j = 0; j < a.n_; ++j) {
                MultiPoly s;
                for (unsigned k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    friend PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& a) {
        PolyMatrix r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    unsigned n_;
    std::vector<MultiPoly> e_;
};

namespace detail {

// Signed Laplace expansion over the column subset `mask`, rows r..n-1 where
// r = n - popcount(mask). Minors are memoized on the mask alone.
inline MultiPoly det_minor(const PolyMatrix& m, std::uint32_t mask,
                           std::map<std::uint32_t, MultiPoly>& memo) {
    if (mask == 0) return MultiPoly(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    unsigned n = m.size();
    unsigned k = static_cast<unsigned>(__builtin_popcount(mask));
    unsigned row = n - k;

    MultiPoly result;
    int sign = 1;
    for (unsigned c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const MultiPoly& a = m.at(row, c);
        if (!a.is_zero()) {
            MultiPoly sub = det_minor(m, mask & ~(1u << c), memo);
            MultiPoly t = a * sub;
            result += sign > 0 ? t : -t;
        }
        sign = -sign;
    }
    memo.emplace(mask, result);
    return result;
}

}  // namespace detail

/// Determinant by division-free cofactor expansion with minor memoization.
inline MultiPoly poly_det(const PolyMatrix& m) {
    unsigned n = m.size();
    if (n == 0) return MultiPoly(1);
    assert(n < 32);
    std::map<std::uint32_t, MultiPoly> memo;
    return detail::det_minor(m, (1u << n) - 1, memo);
}

/// Permanent (signless Leibniz sum). Used by the non-multiplicative control
/// law; not part of the determinant pipeline.
inline MultiPoly poly_perm(const PolyMatrix& m) {
    unsigned n = m.size();
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    MultiPoly r;
    do {
        MultiPoly t(1);
        for (unsigned i = 0; i < n; ++i) t *= m.at(i, perm[i]);
        r += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

}  // namespace polylaw::exact

#endif
