#pragma once

#include "cyclex/core/sparse.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cyclex {

/// Rank over Q. OpenMP kernel: fraction-free right-looking elimination that
/// picks the sparsest remaining vector as pivot and updates every vector
/// touching the pivot coordinate in parallel. The result does not depend on
/// the thread count.
std::size_t rank(const SparseMatrix& m);

/// Serial reference for rank(): left-looking column reduction against a pivot
/// table keyed by the last nonzero row, fraction-free with content removal.
std::size_t rank_serial(const SparseMatrix& m);

struct RankKernel {
    std::size_t rank = 0;
    /// Basis of {v : M v = 0}, one vector per free column of the row-reduced form.
    std::vector<SparseVector> kernel;
};

RankKernel rank_kernel(const SparseMatrix& m);

/// A linear subspace of Q^n kept in reduced row-echelon form: every basis
/// vector has a 1 at its pivot and 0 at every other basis vector's pivot.
/// Basis vectors are ordered by pivot.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
    static Subspace column_span(const SparseMatrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    /// Returns true if v was independent of the current basis.
    bool add(const SparseVector& v);

    /// v minus its projection along pivots; zero iff v lies in the subspace.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Coordinates with respect to basis(); throws if v is not in the subspace.
    SparseVector coordinates(const SparseVector& v) const;

    const std::vector<SparseVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// ambient_dim x dim matrix whose columns are the basis vectors.
    SparseMatrix basis_matrix() const;

    /// Sum of two subspaces of the same ambient space.
    Subspace operator+(const Subspace& other) const;

private:
    std::size_t ambient_;
    std::vector<SparseVector> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<long> slot_of_pivot_;
};

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

} // namespace cyclex
