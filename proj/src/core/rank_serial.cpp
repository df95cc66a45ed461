// Serial reference elimination. Kept deliberately simple: it is the yardstick
// the OpenMP kernel in rank_parallel.cpp is tested and benchmarked against.

#include "cyclex/core/elimination.hpp"

#include "int_vector.hpp"

#include <vector>

namespace cyclex {

std::size_t rank_serial(const SparseMatrix& m)
{
    using detail::IntVector;
    std::vector<IntVector> pivots;
    std::vector<long> pivot_at_low(m.rows(), -1);

    for (std::size_t j = 0; j < m.cols(); ++j) {
        IntVector col = detail::to_primitive(m.column(j));
        while (!col.empty()) {
            const std::uint32_t low = col.back().index;
            const long p = pivot_at_low[low];
            if (p < 0)
                break;
            col = detail::eliminate(col, pivots[p], low);
        }
        if (!col.empty()) {
            pivot_at_low[col.back().index] = static_cast<long>(pivots.size());
            pivots.push_back(std::move(col));
        }
    }
    return pivots.size();
}

} // namespace cyclex
