#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sumref/matrix.hpp"

namespace sumref {

/// A subspace of k^n held as its unique reduced row echelon basis
/// (pivots 1, pivot columns otherwise zero, no zero rows). Two values
/// represent the same subspace iff their bases are entry-wise equal,
/// so equality is a plain comparison.
template <FieldType F>
class Subspace {
public:
    static Subspace zero(F field, std::size_t ambient) {
        return Subspace(Matrix<F>(std::move(field), 0, ambient));
    }

    static Subspace full(F field, std::size_t ambient) {
        return Subspace(Matrix<F>::identity(std::move(field), ambient));
    }

    /// Canonical span of the rows of `generators`; zero rows drop out.
    static Subspace span_of(Matrix<F> generators) {
        std::size_t rank = rref(generators);
        Matrix<F> basis(generators.field(), rank, generators.cols());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = generators(i, j);
        return Subspace(std::move(basis));
    }

    static Subspace span_of(F field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
        return span_of(Matrix<F>::from_rows(std::move(field), ambient, vectors));
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const F& field() const { return basis_.field(); }
    const Matrix<F>& basis() const { return basis_; }
    bool is_zero() const { return basis_.rows() == 0; }
    bool is_full() const { return basis_.rows() == basis_.cols(); }

    /// Remainder of v after elimination against the basis rows; v lies in
    /// the subspace iff the remainder is zero.
    Vec<F> reduce(Vec<F> v) const {
        const F& f = field();
        if (v.size() != ambient_dim()) throw InvalidInput("vector/subspace ambient mismatch");
        std::size_t row = 0;
        for (std::size_t c = 0; c < ambient_dim() && row < dim(); ++c) {
            if (f.is_zero(basis_(row, c))) continue; // not this row's pivot column
            if (!f.is_zero(v[c])) {
                const auto coeff = f.neg(v[c]);
                for (std::size_t j = c; j < ambient_dim(); ++j)
                    v[j] = f.add(v[j], f.mul(coeff, basis_(row, j)));
            }
            ++row;
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec(field(), reduce(v)); }

    bool contains(const Subspace& other) const {
        check_compatible(other, "contains");
        if (other.dim() > dim()) return false;
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

    void check_compatible(const Subspace& o, const std::string& what) const {
        if (!(field() == o.field())) throw InvalidInput(what + ": operands over different fields");
        if (ambient_dim() != o.ambient_dim())
            throw InvalidInput(what + ": ambient dimension mismatch (" + std::to_string(ambient_dim()) +
                               " vs " + std::to_string(o.ambient_dim()) + ")");
    }

private:
    explicit Subspace(Matrix<F> rref_basis) : basis_(std::move(rref_basis)) {}
    Matrix<F> basis_;
};

template <FieldType F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& w) {
    u.check_compatible(w, "sum");
    return Subspace<F>::span_of(Matrix<F>::vstack(u.basis(), w.basis()));
}

/// Intersection by the Zassenhaus block trick: reduce [U U; W 0] and read
/// the intersection off the right halves of the rows whose left half died.
template <FieldType F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& w) {
    u.check_compatible(w, "intersect");
    const F& f = u.field();
    const std::size_t n = u.ambient_dim();
    Matrix<F> z(f, u.dim() + w.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z(i, j) = u.basis()(i, j);
            z(i, n + j) = u.basis()(i, j);
        }
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) z(u.dim() + i, j) = w.basis()(i, j);
    std::size_t rank = rref(z);

    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = f.is_zero(z(i, j));
        if (!left_zero) continue;
        Vec<F> right(n);
        for (std::size_t j = 0; j < n; ++j) right[j] = z(i, n + j);
        rows.push_back(std::move(right));
    }
    return Subspace<F>::span_of(f, n, rows);
}

/// Deterministic direct complement of u inside w (u ⊆ w required):
/// scan w's canonical basis rows in order and keep those that grow the
/// span of u, so u ⊕ result = w.
template <FieldType F>
Subspace<F> complement_in(const Subspace<F>& u, const Subspace<F>& w) {
    u.check_compatible(w, "complement_in");
    if (!w.contains(u)) throw InvalidInput("complement_in: first operand is not contained in the second");
    const F& f = u.field();
    const std::size_t n = u.ambient_dim();

    Subspace<F> running = u;
    std::vector<Vec<F>> picked;
    for (std::size_t i = 0; i < w.dim() && running.dim() < w.dim(); ++i) {
        Vec<F> candidate = w.basis().row(i);
        if (running.contains(candidate)) continue;
        running = sum(running, Subspace<F>::span_of(f, n, {candidate}));
        picked.push_back(std::move(candidate));
    }
    return Subspace<F>::span_of(f, n, picked);
}

} // namespace sumref
