#pragma once

#include "cyclex/core/sparse.hpp"

#include <cstddef>
#include <vector>

namespace cyclex {

/// d^p, with d^0 = 1.
std::size_t ipow(std::size_t d, int p);

/// Mixed-radix coordinates for a tensor product V_1 (x) ... (x) V_k.
/// The first factor is the most significant digit.
class TensorIndex {
public:
    explicit TensorIndex(std::vector<std::size_t> radix);
    /// k copies of a space of dimension d.
    static TensorIndex power(std::size_t d, int k);
    /// One factor of dimension head followed by k copies of dimension d.
    static TensorIndex headed(std::size_t head, std::size_t d, int k);

    std::size_t size() const { return size_; }
    std::size_t factors() const { return radix_.size(); }

    void decode(std::size_t index, std::vector<std::size_t>& digits) const;
    std::size_t encode(const std::vector<std::size_t>& digits) const;

private:
    std::vector<std::size_t> radix_;
    std::size_t size_ = 1;
};

/// Matrix with the given number of rows whose column j is column(j).
/// Columns are computed in parallel; fn must be safe to call concurrently.
template <class Fn>
SparseMatrix assemble_columns(std::size_t rows, std::size_t cols, Fn&& column)
{
    std::vector<SparseVector> out(cols);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(cols); ++j)
        out[static_cast<std::size_t>(j)] = column(static_cast<std::size_t>(j));
    return SparseMatrix(rows, std::move(out));
}

/// f (x) ... (x) f, k factors; the 1 x 1 identity when k = 0.
SparseMatrix kron_power(const SparseMatrix& f, int k);

} // namespace cyclex
