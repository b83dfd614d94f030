#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/rational.hpp"

namespace apolar {

// Element hooks used by the generic elimination routines. Field types
// declared later (Scalar) provide their own overloads, found by ADL.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill), zero_(zero_like(fill)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// The zero element of the coefficient field.
    const T& zero() const noexcept { return zero_; }

    std::vector<T> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ArityMismatch("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
    T zero_;
};

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& sample) {
    Matrix<T> m(n, n, zero_like(sample));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(sample);
    return m;
}

template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Pivots are taken as the first row (top-down)
/// with a nonzero entry in the current column.
template <class T>
RowEchelon<T> row_reduce(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const T inv = one_like(m(r, c)) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return row_reduce(m).pivot_columns.size();
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column,
/// with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    auto [reduced, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), m.zero());
        v[free] = one_like(m.zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw ArityMismatch("determinant of a non-square matrix");
    T det = one_like(m.zero());
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return m.zero();
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        const T inv = one_like(m.zero()) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const T factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw ArityMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n, m.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one_like(m.zero());
    }
    auto [reduced, pivots] = row_reduce(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is not invertible");
    Matrix<T> inv(n, n, m.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

}  // namespace apolar
