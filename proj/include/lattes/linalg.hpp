#pragma once

// Small exact linear algebra kernels shared by the lattice, classifier and
// polynomial modules: Gaussian elimination over a field (Rational or
// Cyclo), nullspace computation, and Smith normal form over the integers
// with affine congruence solving mod Z^n.

#include <optional>
#include <vector>

#include "lattes/cyclo.hpp"

namespace lattes {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const Cyclo& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline Cyclo field_inverse(const Cyclo& x) { return *x.inverse(); }
inline Rational field_one(const Rational&) { return Rational(1); }
inline Cyclo field_one(const Cyclo&) { return Cyclo::one(); }

// Row-reduce [A | b]; returns the unique solution of A x = b when the
// system is consistent and A has full column rank, otherwise nullopt.
template <class K>
std::optional<std::vector<K>> solve_unique(std::vector<std::vector<K>> a,
                                           std::vector<K> b) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    std::vector<int> pivot_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && field_is_zero(a[piv][col])) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        K inv = field_inverse(a[row][col]);
        for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || field_is_zero(a[r][col])) continue;
            K f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    // full column rank required
    for (size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] < 0) return std::nullopt;
    // consistency of the remaining rows
    for (size_t r = row; r < m; ++r)
        if (!field_is_zero(b[r])) return std::nullopt;
    std::vector<K> x(n);
    for (size_t col = 0; col < n; ++col) x[col] = b[static_cast<size_t>(pivot_of_col[col])];
    return x;
}

// Basis of the nullspace of A (m x n) over the field K.
template <class K>
std::vector<std::vector<K>> nullspace(std::vector<std::vector<K>> a) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(n, false);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && field_is_zero(a[piv][col])) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        K inv = field_inverse(a[row][col]);
        for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || field_is_zero(a[r][col])) continue;
            K f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot_col[col] = true;
        ++row;
    }
    std::vector<std::vector<K>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<K> v(n, K());
        v[free_col] = field_one(K());
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<size_t>(pivot_col_of_row[r])] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// --- integer Smith normal form ---

using IntMat = std::vector<std::vector<BigInt>>;

struct SmithForm {
    IntMat d;  // diagonal (m x n)
    IntMat u;  // m x m unimodular, u * a * v = d
    IntMat v;  // n x n unimodular
};

SmithForm smith_normal_form(IntMat a);

// Solutions c in Q^n / Z^n of  A c = b (mod Z^m), A integral, b rational.
struct CongruenceSolutions {
    bool consistent = false;
    bool finite = false;
    std::vector<std::vector<Rational>> solutions;  // reps in [0,1)^n
};

CongruenceSolutions solve_congruences_mod_one(const IntMat& a,
                                              const std::vector<Rational>& b);

}  // namespace lattes
