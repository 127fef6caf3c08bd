#pragma once

#include <residua/numeric.hpp>

#include <optional>
#include <vector>

namespace residua {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::domain_error("dot: size mismatch");
    Rat r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// Reduced row echelon form; returns rank, optionally the pivot columns.
inline int rref_in_place(QMat& m, std::vector<int>* pivot_cols = nullptr) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == Rat(0)) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == Rat(0)) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

inline int rank_of(QMat m) { return rref_in_place(m); }

// Basis of {v : M v = 0}.
inline std::vector<QVec> null_space(QMat m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<int> piv;
    rref_in_place(m, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(cols, Rat(0));
        v[fc] = Rat(1);
        for (std::size_t pr = 0; pr < piv.size(); ++pr)
            v[static_cast<std::size_t>(piv[pr])] = -m[pr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b for square A over any Rat-module T (Rat, LinForm, ...).
// Returns nullopt when A is singular.
template <class T>
std::optional<std::vector<T>> solve_square(QMat a, std::vector<T> b) {
    std::size_t n = a.size();
    if (n == 0) return std::vector<T>{};
    if (a[0].size() != n || b.size() != n) throw std::domain_error("solve_square: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == Rat(0)) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == Rat(0)) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= b[c] * f;
        }
    }
    // back substitution
    std::vector<T> x(b);
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= x[j] * a[ii][j];
        x[ii] *= Rat(1) / a[ii][ii];
    }
    return x;
}

inline QMat inverse(const QMat& a) {
    std::size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::domain_error("inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rat(1);
    }
    std::vector<int> piv;
    rref_in_place(aug, &piv);
    // invertible iff the pivots all land in the left block
    if (piv.size() < n || piv[n - 1] >= static_cast<int>(n))
        throw std::domain_error("inverse: singular matrix");
    QMat r(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

inline Rat determinant(QMat a) {
    std::size_t n = a.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == Rat(0)) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == Rat(0)) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline QVec mat_apply(const QMat& m, const QVec& v) {
    QVec r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(dot(row, v));
    return r;
}

}  // namespace residua
