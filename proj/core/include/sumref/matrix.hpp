#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sumref/errors.hpp"
#include "sumref/field.hpp"

namespace sumref {

/// Dense row-major matrix over an exact field. Vectors are rows
/// throughout; a subspace is the row space of its basis matrix.
template <FieldType F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows) {
        for (const auto& r : rows)
            if (r.size() != cols) throw InvalidInput("row length mismatch: expected " + std::to_string(cols));
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<F> row(std::size_t r) const {
        return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void set_row(std::size_t r, const Vec<F>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void scale_row(std::size_t r, const Element& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), c);
    }
    /// row[dst] += c * row[src]
    void add_scaled_row(std::size_t dst, std::size_t src, const Element& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) = field_.add((*this)(dst, j), field_.mul(c, (*this)(src, j)));
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (!(field_ == o.field_)) throw InvalidInput("matrix product across different fields");
        if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
        Matrix p(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p(i, j) = field_.add(p(i, j), field_.mul(a, o(k, j)));
            }
        return p;
    }

    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        if (!(top.field_ == bottom.field_)) throw InvalidInput("vstack across different fields");
        if (top.cols_ != bottom.cols_) throw InvalidInput("vstack column mismatch");
        Matrix s(top.field_, top.rows_ + bottom.rows_, top.cols_);
        for (std::size_t i = 0; i < top.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j) s(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j) s(top.rows_ + i, j) = bottom(i, j);
        return s;
    }

    bool operator==(const Matrix& o) const {
        if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!field_.eq(data_[i], o.data_[i])) return false;
        return true;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

/// In-place reduction to reduced row echelon form. Returns the rank and,
/// if requested, the pivot columns in increasing order.
template <FieldType F>
std::size_t rref(Matrix<F>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    const F& f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && f.is_zero(m(pivot, c))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        m.scale_row(r, f.inv(m(r, c)));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            m.add_scaled_row(i, r, f.neg(m(i, c)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <FieldType F>
std::size_t rank_of(Matrix<F> m) {
    return rref(m);
}

/// Inverse via Gauss-Jordan on [m | I]; nullopt when singular.
template <FieldType F>
std::optional<Matrix<F>> inverted(const Matrix<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix<F> aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    if (rref(aug) != n) return std::nullopt;
    Matrix<F> inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Canonical (RREF) basis of { x : m · xᵀ = 0 }, one solution per row.
template <FieldType F>
Matrix<F> right_kernel(const Matrix<F>& m) {
    const F& f = m.field();
    Matrix<F> red = m;
    std::vector<std::size_t> pivots;
    std::size_t rank = rref(red, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix<F> ker(f, m.cols() - rank, m.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker(k, c) = f.one();
        for (std::size_t i = 0; i < rank; ++i) ker(k, pivots[i]) = f.neg(red(i, c));
        ++k;
    }
    rref(ker);
    return ker;
}

/// Canonical basis of { x : x · m = 0 }.
template <FieldType F>
Matrix<F> left_kernel(const Matrix<F>& m) {
    return right_kernel(m.transposed());
}

template <FieldType F>
Vec<F> row_times_matrix(const Vec<F>& v, const Matrix<F>& m) {
    if (v.size() != m.rows()) throw InvalidInput("row-vector/matrix shape mismatch");
    const F& f = m.field();
    Vec<F> out(m.cols(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (f.is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
    }
    return out;
}

template <FieldType F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
    for (const auto& e : v)
        if (!f.is_zero(e)) return false;
    return true;
}

} // namespace sumref
