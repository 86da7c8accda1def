#ifndef QUIVERHOM_MATRIX_HPP
#define QUIVERHOM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiverhom/field.hpp"

namespace qh {

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, const Scalar& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<const Matrix*>& blocks);

struct RowEchelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const Field& F, Matrix m);
std::size_t rank(const Field& F, const Matrix& m);

/// Columns form a basis of the right kernel. For each free column f of the
/// RREF the basis vector has 1 at f and 0 at every other free column.
struct Kernel {
    Matrix basis;                      // cols x nullity
    std::vector<std::size_t> free_columns;
};
Kernel kernel(const Field& F, const Matrix& m);

/// Solves m * x = b; nullopt when inconsistent.
std::optional<Matrix> solve(const Field& F, const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& m);

/// Indices j such that the standard vectors e_j complete the column space of
/// `m` to a basis of the ambient space (greedy, smallest indices first).
std::vector<std::size_t> complement_indices(const Field& F, const Matrix& m);

/// Sorted sparse vector.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental sparse Gaussian elimination. Rows are reduced against pivots
/// as they arrive; `finalize` back-substitutes into reduced echelon form.
class SparseEchelon {
public:
    SparseEchelon(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    /// Returns true when the row was independent of the rows seen so far.
    bool add_row(const SparseVec& row);
    /// Reduces a vector against the current pivots without inserting it.
    SparseVec reduce(const SparseVec& row) const;

    void finalize();

    std::size_t rank() const noexcept { return pivot_rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nullity() const noexcept { return cols_ - rank(); }

    std::vector<std::uint32_t> pivot_columns() const;
    std::vector<std::uint32_t> free_columns() const;

    /// Kernel element with the given values on the free columns (requires finalize).
    std::vector<Scalar> kernel_point(const std::vector<Scalar>& free_values) const;
    std::vector<Scalar> kernel_basis_vector(std::size_t free_index) const;
    /// Row whose leading entry (1) sits at `col`, or nullptr.
    const SparseVec* pivot_row(std::uint32_t col) const;

    const Field& field() const noexcept { return field_; }

private:
    using Acc = std::map<std::uint32_t, Scalar>;
    void reduce_into(Acc& acc) const;

    Field field_;
    std::size_t cols_;
    std::map<std::uint32_t, SparseVec> pivot_rows_;  // leading column -> row with leading 1
    bool finalized_ = false;
    mutable std::vector<std::uint32_t> free_cache_;
};

}  // namespace qh

#endif
