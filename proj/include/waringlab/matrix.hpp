#pragma once

// Dense exact matrices over Q(i).

#include <optional>
#include <span>
#include <vector>

#include "waringlab/scalar.hpp"

namespace waringlab {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    bool is_real() const;
    Matrix transpose() const;
    Vector operator*(std::span<const Scalar> v) const;

    /// Rank by fraction-free (Bareiss) elimination over the Gaussian integers,
    /// after clearing denominators row by row. Pivot columns are taken left to right.
    std::size_t rank() const;

    /// Gauss-Jordan over Q(i); independent of rank().
    struct Echelon rref() const;

    /// Basis of the right kernel; each vector has a 1 in its free column.
    std::vector<Vector> kernel() const;
    /// One solution of A x = b (free variables set to zero), or nullopt if inconsistent.
    std::optional<Vector> solve(std::span<const Scalar> b) const;
    /// Inverse of a square nonsingular matrix; nullopt when singular.
    std::optional<Matrix> inverse() const;
    Scalar determinant() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Rank of the span of the given vectors (all of the same length).
std::size_t span_rank(std::span<const Vector> vectors);

/// True when u and v are nonzero multiples of each other.
bool proportional(std::span<const Scalar> u, std::span<const Scalar> v);

}  // namespace waringlab
