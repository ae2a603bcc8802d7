#include "lattes/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lattes {

namespace {

IntMat identity_mat(size_t n) {
    IntMat m(n, std::vector<BigInt>(n, 0));
    for (size_t k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

void swap_rows(IntMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMat& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row[a] += f * row[b]
void add_row(IntMat& m, size_t a, size_t b, const BigInt& f) {
    for (size_t j = 0; j < m[a].size(); ++j) m[a][j] += f * m[b][j];
}

void add_col(IntMat& m, size_t a, size_t b, const BigInt& f) {
    for (auto& row : m) row[a] += f * row[b];
}

void negate_row(IntMat& m, size_t a) {
    for (auto& x : m[a]) x = -x;
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    SmithForm out{a, identity_mat(m), identity_mat(n)};
    IntMat& d = out.d;

    size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot in the remaining block
        size_t pr = t, pc = t;
        bool found = false;
        for (size_t r = t; r < m && !found; ++r)
            for (size_t c = t; c < n && !found; ++c)
                if (d[r][c] != 0) {
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        swap_rows(d, t, pr);
        swap_rows(out.u, t, pr);
        swap_cols(d, t, pc);
        swap_cols(out.v, t, pc);

        // clear row and column t by repeated division
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t r = t + 1; r < m; ++r) {
                if (d[r][t] == 0) continue;
                BigInt q = d[r][t] / d[t][t];
                add_row(d, r, t, -q);
                add_row(out.u, r, t, -q);
                if (d[r][t] != 0) {  // remainder: swap to shrink pivot
                    swap_rows(d, t, r);
                    swap_rows(out.u, t, r);
                    dirty = true;
                }
            }
            for (size_t c = t + 1; c < n; ++c) {
                if (d[t][c] == 0) continue;
                BigInt q = d[t][c] / d[t][t];
                add_col(d, c, t, -q);
                add_col(out.v, c, t, -q);
                if (d[t][c] != 0) {
                    swap_cols(d, t, c);
                    swap_cols(out.v, t, c);
                    dirty = true;
                }
            }
        }
        if (d[t][t] < 0) {
            negate_row(d, t);
            negate_row(out.u, t);
        }
        ++t;
    }
    // Diagonal entries are not normalized to the divisibility chain; the
    // congruence solver below only needs a diagonal form with unimodular
    // transforms on both sides.
    return out;
}

CongruenceSolutions solve_congruences_mod_one(const IntMat& a,
                                              const std::vector<Rational>& b) {
    CongruenceSolutions out;
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("congruences: size mismatch");
    if (n == 0) {
        out.consistent = true;
        out.finite = true;
        return out;
    }
    SmithForm s = smith_normal_form(a);
    // A c = b (mod Z^m)  <=>  D y = U b (mod Z^m), c = V y
    std::vector<Rational> ub(m, 0);
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < m; ++k)
            if (s.u[r][k] != 0) ub[r] += Rational(s.u[r][k]) * b[k];

    auto is_integer = [](const Rational& q) { return denominator(q) == 1; };

    std::vector<BigInt> diag(n, 0);
    for (size_t k = 0; k < n && k < m; ++k) diag[k] = s.d[k][k];
    // rows past the rank must be integral
    for (size_t r = 0; r < m; ++r) {
        if (r < n && diag[r] != 0) continue;
        if (!is_integer(ub[r])) return out;  // inconsistent
    }
    out.consistent = true;
    for (size_t k = 0; k < n; ++k)
        if (diag[k] == 0) return out;  // infinite family: finite stays false
    out.finite = true;

    // enumerate y_k = (ub_k + j) / d_k, j = 0..d_k-1, then c = V y mod 1
    std::vector<size_t> radix(n);
    size_t total = 1;
    for (size_t k = 0; k < n; ++k) {
        radix[k] = static_cast<size_t>(diag[k]);
        total *= radix[k];
    }
    auto frac = [](Rational q) {
        BigInt fl = numerator(q) / denominator(q);
        if (q < 0 && fl * denominator(q) != numerator(q)) fl -= 1;
        return q - Rational(fl);
    };
    std::vector<size_t> idx(n, 0);
    for (size_t count = 0; count < total; ++count) {
        std::vector<Rational> y(n);
        for (size_t k = 0; k < n; ++k)
            y[k] = (ub[k] + Rational(BigInt(idx[k]))) / Rational(diag[k]);
        std::vector<Rational> c(n, 0);
        for (size_t r = 0; r < n; ++r) {
            for (size_t k = 0; k < n; ++k)
                if (s.v[r][k] != 0) c[r] += Rational(s.v[r][k]) * y[k];
            c[r] = frac(c[r]);
        }
        out.solutions.push_back(std::move(c));
        for (size_t k = 0; k < n; ++k) {
            if (++idx[k] < radix[k]) break;
            idx[k] = 0;
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                        out.solutions.end());
    return out;
}

}  // namespace lattes
