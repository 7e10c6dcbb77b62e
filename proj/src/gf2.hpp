// Copyright 2026 The stackedcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STACKEDCODES_GF2_HPP
#define STACKEDCODES_GF2_HPP

#include <optional>
#include <vector>

#include "bitvec.hpp"

namespace stacked::gf2 {

// Row-echelon basis with remembered pivot columns.  Rows stay reduced
// against each other (RREF), which makes membership tests a single sweep.
struct Basis {
    std::vector<BitVec> rows;
    std::vector<int> pivots;

    // Reduce v against the basis; returns the residue.
    BitVec reduce(BitVec v) const {
        for (size_t r = 0; r < rows.size(); r++) {
            if (v.get(size_t(pivots[r]))) v ^= rows[r];
        }
        return v;
    }

    bool contains(const BitVec &v) const { return reduce(v).is_zero(); }

    // Try to insert v; returns true if it enlarged the basis.
    bool insert(const BitVec &v) {
        BitVec res = reduce(v);
        int p = res.lowest_set();
        if (p < 0) return false;
        for (size_t r = 0; r < rows.size(); r++) {
            if (rows[r].get(size_t(p))) rows[r] ^= res;
        }
        rows.push_back(res);
        pivots.push_back(p);
        return true;
    }

    size_t rank() const { return rows.size(); }
};

inline Basis make_basis(const std::vector<BitVec> &rows) {
    Basis b;
    for (const auto &r : rows) b.insert(r);
    return b;
}

inline size_t rank(const std::vector<BitVec> &rows) { return make_basis(rows).rank(); }

// Solve for x with <rows[i], x> = rhs[i] (mod 2) for every i, where
// <,> is the overlap parity.  Free variables are set to zero, so the
// solution is deterministic.  Returns nullopt when inconsistent.
inline std::optional<BitVec> solve(const std::vector<BitVec> &rows,
                                   const std::vector<bool> &rhs,
                                   size_t ncols) {
    size_t m = rows.size();
    std::vector<BitVec> a = rows;
    std::vector<bool> b = rhs;
    std::vector<int> pivot_col;
    std::vector<size_t> pivot_row;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m; c++) {
        size_t sel = m;
        for (size_t i = r; i < m; i++) {
            if (a[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == m) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        for (size_t i = 0; i < m; i++) {
            if (i != r && a[i].get(c)) {
                a[i] ^= a[r];
                b[i] = b[i] ^ b[r];
            }
        }
        pivot_col.push_back(int(c));
        pivot_row.push_back(r);
        r++;
    }
    for (size_t i = r; i < m; i++) {
        if (b[i]) return std::nullopt;
    }
    BitVec x(ncols);
    for (size_t k = 0; k < pivot_col.size(); k++) {
        if (b[pivot_row[k]]) x.set(size_t(pivot_col[k]), true);
    }
    return x;
}

// Basis of the right null space {x : <rows[i], x> = 0 for all i}.
inline std::vector<BitVec> nullspace(const std::vector<BitVec> &rows, size_t ncols) {
    size_t m = rows.size();
    std::vector<BitVec> a = rows;
    std::vector<int> pivot_of_col(ncols, -1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m; c++) {
        size_t sel = m;
        for (size_t i = r; i < m; i++) {
            if (a[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == m) continue;
        std::swap(a[sel], a[r]);
        for (size_t i = 0; i < m; i++) {
            if (i != r && a[i].get(c)) a[i] ^= a[r];
        }
        pivot_of_col[c] = int(r);
        r++;
    }
    std::vector<BitVec> out;
    for (size_t c = 0; c < ncols; c++) {
        if (pivot_of_col[c] >= 0) continue;
        BitVec v(ncols);
        v.set(c, true);
        for (size_t c2 = 0; c2 < ncols; c2++) {
            int pr = pivot_of_col[c2];
            if (pr >= 0 && a[size_t(pr)].get(c)) v.set(c2, true);
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace stacked::gf2

#endif
