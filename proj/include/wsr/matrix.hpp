#pragma once

#include "wsr/numeric.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <vector>

namespace wsr {

using IntVec = std::vector<BigInt>;

// A degree-two class sum(c_i * x_i) is stored as its coefficient vector.
using LinearForm = IntVec;

inline BigInt dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("dot: length " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
    BigInt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("vector add: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("vector sub: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline IntVec operator*(const BigInt& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

// Dense row-major integer matrix.  Kept deliberately small: just what the
// normal-form and lattice routines need.
class IntMatrix {
  public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw dimension_mismatch("ragged initializer");
            for (long long v : row)
                data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw dimension_mismatch("row " + std::to_string(i) +
                                         " has length " + std::to_string(rows[i].size()) +
                                         ", expected " + std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const BigInt& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    IntVec row(std::size_t i) const {
        IntVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            r[j] = (*this)(i, j);
        return r;
    }

    std::vector<IntVec> row_list() const {
        std::vector<IntVec> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row(i));
        return out;
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }

    // row[i] += c * row[k]
    void add_row_multiple(std::size_t i, std::size_t k, const BigInt& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) += c * (*this)(k, j);
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, j), (*this)(i, k));
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }

    // col[j] += c * col[k]
    void add_col_multiple(std::size_t j, std::size_t k, const BigInt& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) += c * (*this)(i, k);
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        if (cols_ != other.rows_)
            throw dimension_mismatch("matrix product: inner dimensions differ");
        IntMatrix p(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const BigInt& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    p(i, j) += a * other(k, j);
            }
        return p;
    }

    // M * x for a column vector x.
    IntVec apply(const IntVec& x) const {
        if (x.size() != cols_)
            throw dimension_mismatch("apply: vector length mismatch");
        IntVec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            BigInt acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    bool operator==(const IntMatrix&) const = default;

    // Bareiss fraction-free elimination; exact for integer matrices and only
    // performs divisions known to be exact.
    BigInt determinant() const {
        if (rows_ != cols_)
            throw dimension_mismatch("determinant of non-square matrix");
        std::size_t n = rows_;
        if (n == 0)
            return 1;
        IntMatrix a(*this);
        BigInt prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0)
                    ++p;
                if (p == n)
                    return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

inline std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

using FracMat2 = std::array<std::array<Fraction, 2>, 2>;

// Exact inverse of an integer 2x2 matrix; throws if singular.
inline FracMat2 invert_2x2(const IntMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw dimension_mismatch("invert_2x2 requires a 2x2 matrix");
    BigInt det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (det == 0)
        throw degenerate_matrix("singular 2x2 matrix");
    FracMat2 inv;
    inv[0][0] = make_fraction(a(1, 1), det);
    inv[0][1] = make_fraction(-a(0, 1), det);
    inv[1][0] = make_fraction(-a(1, 0), det);
    inv[1][1] = make_fraction(a(0, 0), det);
    return inv;
}

} // namespace wsr
