#pragma once

// Exact dense linear algebra over any field with +,-,*,/ and is_zero().
// Sizes here are small (tens to a few hundred rows); plain fraction
// arithmetic with row pivoting is enough.

#include <optional>
#include <stdexcept>
#include <vector>

namespace jck {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
int rank(Matrix<F> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && std::size_t(r) < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        F inv = F(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (int(i) == r || m[i][c].is_zero()) continue;
            F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Solves A x = b when the solution exists and is unique; nullopt when the
// system is inconsistent or underdetermined.
template <typename F>
std::optional<std::vector<F>> solve_unique(Matrix<F> a, std::vector<F> b) {
    const std::size_t rows = a.size();
    if (rows == 0 || rows != b.size()) throw std::invalid_argument("solve_unique: shape");
    const std::size_t cols = a[0].size();
    std::vector<int> pivot_col;
    int r = 0;
    for (std::size_t c = 0; c < cols && std::size_t(r) < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        F inv = F(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (int(i) == r || a[i][c].is_zero()) continue;
            F f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(int(c));
        ++r;
    }
    if (std::size_t(r) < cols) return std::nullopt; // rank-deficient
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt; // inconsistent
    std::vector<F> x(cols, F(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace jck
