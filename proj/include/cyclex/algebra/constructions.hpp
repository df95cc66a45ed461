#pragma once

#include "cyclex/algebra/algebra.hpp"

namespace cyclex {

struct Unitalization {
    AlgebraPtr algebra;       ///< A+ = Q.1 (+) A, basis (1, e_1, ..., e_n), augmented by the 1-coordinate
    AlgebraMorphism inclusion; ///< A -> A+
};

Unitalization unitalization(const AlgebraPtr& a);

/// A (x) B with basis index a*dim(B) + b.
Algebra tensor(const Algebra& a, const Algebra& b);

/// M_r(A) with basis index (i*r + j)*dim(A) + a for E_ij (x) a.
Algebra matrix_algebra(const Algebra& a, std::size_t r);

/// A x B; augmented through the first factor when A is.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// Kernel of the augmentation. Throws NotAugmented without one and
/// IdealNotNilpotent when the kernel is not nilpotent.
Ideal augmentation_ideal(const AlgebraPtr& b);

struct Quotient {
    AlgebraPtr algebra;        ///< B = A/I, basis = ambient basis vectors off the ideal pivots
    AlgebraMorphism projection; ///< A -> B
    SparseMatrix section;      ///< linear splitting B -> A with projection * section = id
};

/// A/I. The ideal must belong to a.
Quotient quotient(const Ideal& ideal);

/// Span of all e_i e_j - e_j e_i.
Subspace commutator_subspace(const Algebra& a);

} // namespace cyclex
