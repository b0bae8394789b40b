#pragma once

#include "wsr/matrix.hpp"

#include <cstddef>

namespace wsr {

namespace detail {

// Replace rows (r, i) of a by the unimodular combination
//   new_r = s*row_r + t*row_i
//   new_i = u*row_r + v*row_i
// mirroring the operation on the transform matrix w.
inline void combine_rows(IntMatrix& a, IntMatrix& w, std::size_t r, std::size_t i,
                         const BigInt& s, const BigInt& t,
                         const BigInt& u, const BigInt& v) {
    for (IntMatrix* m : {&a, &w}) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
            BigInt x = (*m)(r, j), y = (*m)(i, j);
            (*m)(r, j) = s * x + t * y;
            (*m)(i, j) = u * x + v * y;
        }
    }
}

inline void combine_cols(IntMatrix& a, IntMatrix& w, std::size_t c, std::size_t j,
                         const BigInt& s, const BigInt& t,
                         const BigInt& u, const BigInt& v) {
    for (IntMatrix* m : {&a, &w}) {
        for (std::size_t i = 0; i < m->rows(); ++i) {
            BigInt x = (*m)(i, c), y = (*m)(i, j);
            (*m)(i, c) = s * x + t * y;
            (*m)(i, j) = u * x + v * y;
        }
    }
}

} // namespace detail

struct HnfResult {
    IntMatrix h; // row Hermite normal form, same shape as the input
    IntMatrix u; // unimodular, u * input == h
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows collected at the bottom.  This is the
// canonical representative used for lattice bases throughout.
inline HnfResult hnf_rows(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < a.cols() && r0 < a.rows(); ++j) {
        std::size_t p = r0;
        while (p < a.rows() && a(p, j) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(r0, p);
        u.swap_rows(r0, p);
        for (std::size_t i = r0 + 1; i < a.rows(); ++i) {
            if (a(i, j) == 0)
                continue;
            BigInt x = a(r0, j), y = a(i, j);
            if (y % x == 0) {
                BigInt q = -(y / x);
                a.add_row_multiple(i, r0, q);
                u.add_row_multiple(i, r0, q);
            } else {
                auto [g, s, t] = xgcd(x, y);
                detail::combine_rows(a, u, r0, i, s, t, -(y / g), x / g);
            }
        }
        if (a(r0, j) < 0) {
            a.negate_row(r0);
            u.negate_row(r0);
        }
        for (std::size_t i = 0; i < r0; ++i) {
            BigInt q = floor_div(a(i, j), a(r0, j));
            if (q != 0) {
                a.add_row_multiple(i, r0, -q);
                u.add_row_multiple(i, r0, -q);
            }
        }
        ++r0;
    }
    return {a, u};
}

struct SnfResult {
    IntMatrix s; // diagonal, nonnegative, each entry divides the next
    IntMatrix u; // unimodular row transform
    IntMatrix v; // unimodular column transform, u * input * v == s
    IntVec diagonal() const {
        std::size_t n = std::min(s.rows(), s.cols());
        IntVec d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = s(i, i);
        return d;
    }
    std::size_t rank() const {
        std::size_t n = std::min(s.rows(), s.cols()), r = 0;
        while (r < n && s(r, r) != 0)
            ++r;
        return r;
    }
};

inline SnfResult snf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        // smallest nonzero entry of the trailing submatrix makes a good pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0)
                    continue;
                if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found)
            break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                BigInt x = a(t, t), y = a(i, t);
                if (y % x == 0) {
                    BigInt q = -(y / x);
                    a.add_row_multiple(i, t, q);
                    u.add_row_multiple(i, t, q);
                } else {
                    auto [g, s, tt] = xgcd(x, y);
                    detail::combine_rows(a, u, t, i, s, tt, -(y / g), x / g);
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                BigInt x = a(t, t), y = a(t, j);
                if (y % x == 0) {
                    BigInt q = -(y / x);
                    a.add_col_multiple(j, t, q);
                    v.add_col_multiple(j, t, q);
                } else {
                    auto [g, s, tt] = xgcd(x, y);
                    detail::combine_cols(a, v, t, j, s, tt, -(y / g), x / g);
                    dirty = true; // column mixing can refill column t
                }
            }
        }
    }

    std::size_t n2 = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n2; ++t)
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }

    // enforce the divisibility chain d1 | d2 | ... on the diagonal
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < n2; ++t) {
            if (a(t, t) == 0 || a(t + 1, t + 1) % a(t, t) == 0)
                continue;
            a.add_col_multiple(t, t + 1, 1);
            v.add_col_multiple(t, t + 1, 1);
            BigInt x = a(t, t), y = a(t + 1, t);
            auto [g, s, tt] = xgcd(x, y);
            detail::combine_rows(a, u, t, t + 1, s, tt, -(y / g), x / g);
            BigInt q = a(t, t + 1) / a(t, t); // exact: both are multiples of g
            a.add_col_multiple(t + 1, t, -q);
            v.add_col_multiple(t + 1, t, -q);
            changed = true;
        }
    }
    return {a, u, v};
}

// Basis (as rows, in Hermite normal form) of the sublattice
// { x in Z^c : m * x = 0 }.  Kernels of integer maps are saturated, so this
// is also the saturation of any spanning set of the rational null space.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult d = snf(m);
    std::size_t r = d.rank();
    std::size_t c = m.cols();
    IntMatrix gens(c - r, c);
    for (std::size_t k = r; k < c; ++k)
        for (std::size_t i = 0; i < c; ++i)
            gens(k - r, i) = d.v(i, k);
    HnfResult h = hnf_rows(gens);
    return h.h; // full row rank by construction: no zero rows to trim
}

} // namespace wsr
