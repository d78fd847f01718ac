#pragma once

#include "arrcrit/error.hpp"
#include "arrcrit/scalar.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace arrcrit {

inline bool is_zero(const mpq_class& q) { return q == 0; }
inline bool is_zero(const mpz_class& z) { return z == 0; }

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    explicit Matrix(const std::vector<std::vector<T>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/*
 * Fraction-free (Bareiss) elimination. Works over any integral domain with
 * exact division: mpz_class, and also fields. Returns the rank; the matrix
 * is consumed.
 */
template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                T v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = T(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

/// Determinant of a square matrix by Bareiss elimination.
template <class T>
T determinant(Matrix<T> m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(m(piv, k))) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = v / prev;
            }
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(-d) : d;
}

/// Reduced row echelon form over a field. Pivot columns are returned in order.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, r);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<T> out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return {std::move(out), std::move(pivots)};
}

/// Basis of {v : m v = 0}, one vector per free column, in column order.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
    auto [r, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows of the reduced echelon basis (pivots leftmost) of the row space spanned by `vectors`.
template <class T>
std::vector<std::vector<T>> echelon_basis(const std::vector<std::vector<T>>& vectors, std::size_t length) {
    if (vectors.empty()) return {};
    Matrix<T> m(0, length);
    for (const auto& v : vectors) m.append_row(v);
    return rref(std::move(m)).first.to_rows();
}

/// Reduced echelon basis of {b : b^T m = 0}.
template <class T>
std::vector<std::vector<T>> left_kernel(const Matrix<T>& m) {
    return echelon_basis(nullspace(m.transpose()), m.rows());
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return bareiss_rank(m);
}

/// True when the two families span the same subspace of T^length.
template <class T>
bool same_span(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b, std::size_t length) {
    return echelon_basis(a, length) == echelon_basis(b, length);
}

} // namespace arrcrit
