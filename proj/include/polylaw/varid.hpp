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

#ifndef POLYLAW_VARID_HPP
#define POLYLAW_VARID_HPP

#include <string>
#include <tuple>

#include "numeric.hpp"

namespace polylaw::exact {

/// Identifier of a commuting indeterminate.
///
/// Two kinds exist: `MatrixEntry` is the (i,j) entry of the generic matrix
/// attached to generator label `s` (1-based indices, printed `x[i,j,s]`);
/// `Formal` is an auxiliary scalar such as the lambdas used in coefficient
/// extraction (printed as tag followed by index, e.g. `l0`).
///
/// The total order is (kind, s, i, j) for matrix entries and (kind, tag,
/// index) for formals, with MatrixEntry before Formal. Everything printed by
/// the library iterates in this order, so output is deterministic.
struct VarId {
    enum class Kind : unsigned char { MatrixEntry = 0, Formal = 1 };

    Kind kind = Kind::Formal;
    std::string name;  // generator label s, or the formal tag
    int row = 0;       // MatrixEntry only, 1-based
    int col = 0;       // MatrixEntry only, 1-based
    unsigned index = 0;  // Formal only

    static VarId entry(int i, int j, std::string s) {
        VarId v;
        v.kind = Kind::MatrixEntry;
        v.name = std::move(s);
        v.row = i;
        v.col = j;
        return v;
    }

    static VarId formal(std::string tag, unsigned idx) {
        VarId v;
        v.kind = Kind::Formal;
        v.name = std::move(tag);
        v.index = idx;
        return v;
    }

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.key() == b.key();
    }
    friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
    friend bool operator<(const VarId& a, const VarId& b) { return a.key() < b.key(); }

    std::string str() const {
        if (kind == Kind::MatrixEntry) {
            return "x[" + std::to_string(row) + "," + std::to_string(col) + "," + name + "]";
        }
        return name + std::to_string(index);
    }

private:
    std::tuple<unsigned char, const std::string&, int, int, unsigned> key() const {
        return {static_cast<unsigned char>(kind), name, row, col, index};
    }
};

}  // namespace polylaw::exact

#endif
