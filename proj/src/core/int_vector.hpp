#pragma once

// Integer sparse vectors used by the fraction-free elimination kernels.

#include "cyclex/core/sparse.hpp"

#include <cstdint>
#include <vector>

namespace cyclex::detail {

struct IntEntry {
    std::uint32_t index;
    Integer value;
};

using IntVector = std::vector<IntEntry>;

/// Clears denominators and divides by the content; the result spans the same line.
IntVector to_primitive(const SparseVector& v);

void make_primitive(IntVector& v);

/// Position of `index` in v, or -1.
long find_index(const IntVector& v, std::uint32_t index);

/// Eliminates coordinate `index` from v using pivot p (both must contain it):
/// returns a primitive multiple of (p_c * v - v_c * p) / gcd.
IntVector eliminate(const IntVector& v, const IntVector& p, std::uint32_t index);

} // namespace cyclex::detail
