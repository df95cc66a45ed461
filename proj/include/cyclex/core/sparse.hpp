#pragma once

#include "cyclex/core/rational.hpp"

#include <cstddef>
#include <vector>

namespace cyclex {

struct SparseEntry {
    std::size_t index;
    Rational value;

    bool operator==(const SparseEntry& other) const = default;
};

/// Sparse vector over Q. Entries are sorted by index and never hold zeros.
class SparseVector {
public:
    SparseVector() = default;

    /// Sorts, merges duplicate indices and drops zeros.
    static SparseVector from_unsorted(std::vector<SparseEntry> entries);
    static SparseVector unit(std::size_t index, const Rational& value = 1);
    static SparseVector from_dense(const std::vector<Rational>& dense);

    const std::vector<SparseEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    /// Largest index + 1, or 0 for the zero vector.
    std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().index + 1; }
    std::size_t leading_index() const { return entries_.front().index; }

    Rational at(std::size_t index) const;

    /// this += alpha * x
    void axpy(const Rational& alpha, const SparseVector& x);
    SparseVector scaled(const Rational& alpha) const;

    /// Appends an entry whose index exceeds every stored index. Zero values are skipped.
    void push_back(std::size_t index, const Rational& value);

    std::vector<Rational> to_dense(std::size_t length) const;

    bool operator==(const SparseVector& other) const = default;

private:
    std::vector<SparseEntry> entries_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);

/// Column-major sparse matrix over Q; column j is the image of the j-th basis vector.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    /// Throws ShapeError if a column refers to a row index out of range.
    SparseMatrix(std::size_t rows, std::vector<SparseVector> columns);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix zero(std::size_t rows, std::size_t cols) { return SparseMatrix(rows, cols); }
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const SparseVector& column(std::size_t j) const { return columns_[j]; }
    const std::vector<SparseVector>& columns() const { return columns_; }
    void set_column(std::size_t j, SparseVector v);

    Rational at(std::size_t i, std::size_t j) const { return columns_[j].at(i); }
    std::size_t nnz() const;
    bool is_zero() const;

    SparseMatrix transpose() const;
    SparseMatrix scaled(const Rational& alpha) const;
    SparseVector apply(const SparseVector& v) const;
    std::vector<std::vector<Rational>> to_dense() const;

    /// Keeps the listed columns, in order.
    SparseMatrix select_columns(const std::vector<std::size_t>& which) const;

    bool operator==(const SparseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a);

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);
/// Columns of a followed by columns of b.
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

/// Assembles a matrix from a grid of blocks with the given row/column block sizes.
/// Unset blocks are zero.
class BlockMatrix {
public:
    BlockMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);

    void set(std::size_t block_row, std::size_t block_col, const SparseMatrix& block);
    SparseMatrix assemble() const;

private:
    std::vector<std::size_t> row_sizes_, col_sizes_;
    std::vector<std::size_t> row_offsets_, col_offsets_;
    std::vector<std::vector<SparseMatrix>> blocks_;
    std::vector<std::vector<bool>> present_;
};

} // namespace cyclex
