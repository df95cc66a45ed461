#pragma once

#include "cyclex/algebra/algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cyclex {

// Preset catalog. Unital presets with a residue field Q carry their augmentation.

Algebra ground_field();
/// Q[e]/e^2, basis (1, e).
Algebra dual_numbers();
/// Q[t]/t^k, basis (1, t, ..., t^{k-1}), k >= 1.
Algebra truncated_poly(std::size_t k);
/// Q (+) V with V^2 = 0, dim V = k.
Algebra square_zero(std::size_t k);
/// k-dimensional algebra with zero multiplication (non-unital).
Algebra zero_mult(std::size_t k);
/// Q[x,y]/(x,y)^2, basis (1, x, y).
Algebra fat_point();
/// Upper-triangular n x n matrices over base, basis (i<=j, a) in lexicographic order.
Algebra upper_triangular(std::size_t n, const Algebra& base);

/// Resolves a preset expression: `name`, `name(arg, ...)` or `name:arg:arg`.
/// Arguments are integers or nested preset expressions. Names:
/// ground | Q, dual_numbers | dual, truncated_poly(k) | trunc(k), square_zero(k),
/// zero_mult(k), fat_point, matrix(r, base), product(A, B), upper_triangular(n[, base]),
/// aug(P) (augmentation ideal of P as a non-unital algebra), unitalization(P).
/// Throws ConfigError on unknown names or bad arguments.
AlgebraPtr preset(std::string_view expression);

std::vector<std::string> preset_names();

/// Same algebra in the basis given by the columns of an invertible matrix p.
Algebra change_basis(const Algebra& a, const SparseMatrix& p);

} // namespace cyclex
