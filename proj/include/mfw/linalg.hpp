#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mfw/rational.hpp"

namespace mfw {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major, rectangular

// ---------------------------------------------------------------------------
// Dense routines (small dimensions: algebra invariants, Gram matrices, ...)
// ---------------------------------------------------------------------------

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row, in order. Deterministic: first nonzero row in column order wins.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline long rank(QMat m) { return static_cast<long>(rref(m).size()); }

// Basis of {x : M x = 0}, one vector per free column.
inline QMat nullspace(QMat m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b with free variables set to zero, or nullopt.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (const auto& x : b)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    std::size_t cols = a[0].size();
    QMat aug = a;
    for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    QVec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

inline QMat matmul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

inline QVec matvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

inline Rat det(QMat m) {
    std::size_t n = m.size();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Sparse echelon solver for the large jet-window systems.
//
// Rows are inserted one at a time and reduced against the pivot rows seen so
// far (leading-column elimination only); finalize() back-eliminates to a full
// reduced echelon form. Pivots are restricted to columns < npivotable, which
// is how augmented right-hand-side columns are carried along. Everything is
// deterministic: insertion order decides pivot selection.
// ---------------------------------------------------------------------------

using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by column index

inline void sparse_axpy(SparseVec& r, const Rat& f, const SparseVec& p) {
    // r -= f * p
    SparseVec out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(std::move(r[i++]));
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -f * p[j].second);
            ++j;
        } else {
            Rat v = r[i].second - f * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

class SparseEchelon {
public:
    SparseEchelon(int ncols, int npivotable) : ncols_(ncols), npiv_(npivotable), pivot_(ncols) {}

    explicit SparseEchelon(int ncols) : SparseEchelon(ncols, ncols) {}

    int ncols() const { return ncols_; }
    long rank() const { return rank_; }

    // Reduce a row against the current pivots; the result's leading column is
    // either unpivoted (new pivot material) or beyond the pivotable range.
    void reduce(SparseVec& r) const {
        while (!r.empty()) {
            int c = r.front().first;
            if (c >= npiv_ || pivot_[c].empty()) return;
            sparse_axpy(r, r.front().second, pivot_[c]);
        }
    }

    // Insert a row. Returns the pivot column it settled on, or -1 if it
    // vanished, or -2 if it became a constraint row (leading column past the
    // pivotable range).
    int add_row(SparseVec r) {
        reduce(r);
        if (r.empty()) return -1;
        int c = r.front().first;
        if (c >= npiv_) {
            constraints_.push_back(std::move(r));
            return -2;
        }
        Rat inv = r.front().second;
        for (auto& [col, v] : r) v /= inv;
        pivot_[c] = std::move(r);
        pivot_cols_.push_back(c);
        ++rank_;
        finalized_ = false;
        return c;
    }

    // Back-eliminate so every pivot row is supported only on its own pivot
    // column, free columns, and the non-pivotable tail.
    void finalize() {
        if (finalized_) return;
        std::sort(pivot_cols_.begin(), pivot_cols_.end());
        for (auto it = pivot_cols_.rbegin(); it != pivot_cols_.rend(); ++it) {
            SparseVec& row = pivot_[*it];
            // repeatedly clear the first interior entry that hits a pivot col
            for (std::size_t i = 1; i < row.size();) {
                int c = row[i].first;
                if (c < npiv_ && !pivot_[c].empty() && c != *it) {
                    sparse_axpy(row, row[i].second, pivot_[c]);
                    // entries before i are untouched (pivot rows lead at c)
                } else {
                    ++i;
                }
            }
        }
        for (auto& r : constraints_) {
            // constraints were fully reduced at insertion time already
            (void)r;
        }
        finalized_ = true;
    }

    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    bool is_pivot(int c) const { return c < npiv_ && !pivot_[c].empty(); }
    const SparseVec& pivot_row(int c) const { return pivot_[c]; }
    const std::vector<SparseVec>& constraint_rows() const { return constraints_; }

    // Nullspace basis (requires every column pivotable and finalize() run).
    // One sparse vector per free column, in column order.
    std::vector<SparseVec> nullspace_basis() {
        finalize();
        std::vector<SparseVec> basis;
        for (int f = 0; f < npiv_; ++f) {
            if (is_pivot(f)) continue;
            SparseVec v;
            for (int c : pivot_cols_) {
                const SparseVec& row = pivot_[c];
                auto it = std::lower_bound(row.begin(), row.end(), f,
                                           [](const auto& p, int col) { return p.first < col; });
                if (it != row.end() && it->first == f) v.emplace_back(c, -it->second);
            }
            v.emplace_back(f, Rat(1));
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // For augmented systems: is the system with right-hand side in column
    // `rhs_col` consistent?
    bool feasible(int rhs_col) const {
        for (const auto& r : constraints_)
            for (const auto& [c, v] : r)
                if (c == rhs_col) return false;
        return true;
    }

    // Particular solution (free variables zero) of the system whose negated
    // right-hand side was carried in column rhs_col; call finalize() first.
    // Augmented rows must have been inserted as [A | -b] so that pivot-row
    // entries in rhs_col directly give the solution values.
    std::optional<QVec> solution(int rhs_col) {
        finalize();
        if (!feasible(rhs_col)) return std::nullopt;
        QVec x(npiv_, Rat(0));
        for (int c : pivot_cols_) {
            const SparseVec& row = pivot_[c];
            for (const auto& [col, v] : row)
                if (col == rhs_col) x[c] = -v;
        }
        return x;
    }

private:
    int ncols_;
    int npiv_;
    std::vector<SparseVec> pivot_;  // indexed by pivot column; empty = none
    std::vector<int> pivot_cols_;
    std::vector<SparseVec> constraints_;
    long rank_ = 0;
    bool finalized_ = false;
};

}  // namespace mfw
