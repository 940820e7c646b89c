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

#ifndef POLYLAW_QMATRIX_HPP
#define POLYLAW_QMATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "numeric.hpp"

namespace polylaw::exact {

/// Dense matrix of exact rationals.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

struct RankNullspace {
    std::size_t rank = 0;
    /// Basis of {v : M v = 0}, one vector per free column, in reduced
    /// row-echelon normal form (deterministic).
    std::vector<std::vector<Rat>> nullspace;
};

/// Exact Gauss-Jordan elimination over the rationals.
inline RankNullspace rank_nullspace(QMatrix m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t prow = r;
        while (prow < rows && m.at(prow, c) == 0) ++prow;
        if (prow == rows) continue;
        if (prow != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(prow, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    RankNullspace out;
    out.rank = pivot_col.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m.at(k, f);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

inline std::size_t rank_of(const QMatrix& m) { return rank_nullspace(m).rank; }

/// Rank of the span of `vecs` (given as rows).
inline std::size_t span_rank(const std::vector<std::vector<Rat>>& vecs, std::size_t dim) {
    QMatrix m(vecs.size(), dim);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        assert(vecs[i].size() == dim);
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vecs[i][j];
    }
    return rank_of(m);
}

}  // namespace polylaw::exact

#endif
