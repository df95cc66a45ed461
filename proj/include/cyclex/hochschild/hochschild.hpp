#pragma once

#include "cyclex/algebra/algebra.hpp"
#include "cyclex/core/chain_complex.hpp"

namespace cyclex {

// Degree p of the Bar and Hochschild complexes is M (x) A^{(x)p}, index
// m*dim(A)^p + (a_1 ... a_p) in base dim(A). With M = A this is A^{(x)p+1}.
//
//   b'(m, a_1..a_p) = m.a_1 (x) a_2..a_p + sum_{0<i<p} (-1)^i m (x) .. a_i a_{i+1} ..
//   b               = b' + (-1)^p (a_p.m) (x) a_1..a_{p-1}
//   t(a_0..a_p)     = (-1)^p a_p (x) a_0..a_{p-1},  N = sum_{i<=p} t^i
//
// Identities used by the cyclic bicomplex: b(1-t) = (1-t)b' and b'N = Nb.

/// b' : M (x) A^p -> M (x) A^{p-1}, p >= 1.
SparseMatrix b_prime(const Bimodule& m, int p);

/// b : M (x) A^p -> M (x) A^{p-1}, p >= 1.
SparseMatrix hoch_b(const Bimodule& m, int p);

/// Bar complex with differential -b', degrees 0..D, certified [0, D-1].
ComplexPtr bar_complex(const Bimodule& m, int degree_bound);

/// Hochschild complex with differential b, degrees 0..D, certified [0, D-1].
ComplexPtr hoch_complex(const Bimodule& m, int degree_bound);

/// t and N on A^{(x)p+1}.
SparseMatrix cyclic_t(const Algebra& a, int p);
SparseMatrix cyclic_N(const Algebra& a, int p);

/// s_p(x) = (-1)^p x (x) 1 : M (x) A^p -> M (x) A^{p+1}. Satisfies
/// b' s + s b' = id whenever A is unital and 1 acts as the identity on the
/// right of M. Throws UnitError when A has no unit.
SparseMatrix contracting_homotopy(const Bimodule& m, int p);

} // namespace cyclex
