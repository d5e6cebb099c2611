/*
 * linalg.hpp
 * ----------
 * Small exact-rational Gaussian elimination toolkit: reduced row echelon
 * form, rank, span membership, and reduction of a vector modulo a row space.
 */
#pragma once

#include <vector>

#include "rational.hpp"

namespace sktrop {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// In-place RREF; returns pivot column of each remaining row. Zero rows are
// dropped, rows end up sorted by pivot column.
inline std::vector<size_t> rref(RatMat& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    size_t w = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < w && r < rows.size(); ++col) {
        size_t sel = SIZE_MAX;
        for (size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) { sel = i; break; }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = Rat(1) / rows[r][col];
        for (size_t j = col; j < w; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (size_t j = col; j < w; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline size_t rank(RatMat rows) { return rref(rows).size(); }

// Reduce v modulo the row space of an RREF matrix (returns the residual).
inline RatVec reduce_mod(const RatMat& rrefRows, const std::vector<size_t>& pivots, RatVec v) {
    for (size_t i = 0; i < rrefRows.size(); ++i) {
        Rat f = v[pivots[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rrefRows[i][j];
    }
    return v;
}

inline bool in_span(const RatMat& rrefRows, const std::vector<size_t>& pivots, RatVec v) {
    v = reduce_mod(rrefRows, pivots, std::move(v));
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// Nullspace basis of the row space (vectors w with rows.w = 0), from RREF.
inline RatMat nullspace(const RatMat& rrefRows, const std::vector<size_t>& pivots, size_t w) {
    std::vector<bool> is_pivot(w, false);
    for (size_t p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (size_t freecol = 0; freecol < w; ++freecol) {
        if (is_pivot[freecol]) continue;
        RatVec v(w, Rat(0));
        v[freecol] = 1;
        for (size_t i = 0; i < rrefRows.size(); ++i) v[pivots[i]] = -rrefRows[i][freecol];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sktrop
