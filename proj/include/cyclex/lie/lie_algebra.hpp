#pragma once

#include "cyclex/algebra/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cyclex {

/// Finite-dimensional Lie algebra over Q with bracket(i, j) = [e_i, e_j].
/// Antisymmetry and the Jacobi identity are checked on construction.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> brackets,
               std::string provenance = "custom");

    const std::string& name() const { return name_; }
    const std::string& provenance() const { return provenance_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    const SparseVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
    bool is_abelian() const;

private:
    std::string name_;
    std::string provenance_;
    std::vector<std::string> labels_;
    std::vector<SparseVector> brackets_;
};

/// [x, y] = xy - yx.
LieAlgebra lie_from_assoc(const Algebra& a);

/// gl_r(A) = M_r(A) with the commutator bracket; basis index (i*r + j)*dim(A) + a.
LieAlgebra gl(const Algebra& a, std::size_t r);

/// The subspace as a Lie algebra in its echelon basis; throws LieError if not closed.
LieAlgebra lie_subalgebra(const LieAlgebra& g, const Subspace& s, std::string name, std::string provenance);

/// [g, g] as a Lie algebra.
LieAlgebra derived_subalgebra(const LieAlgebra& g);

/// Dimensions of g = g^1, g^2 = [g, g], g^{k+1} = [g, g^k], ... until the sequence stabilizes.
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// t^sigma_n(A, I): matrices in gl_n(A) whose (i, j) entry lies in A when i < j
/// for the partial order generated by `relations` (1-based pairs), and in I
/// otherwise. Throws ConfigError on a cyclic relation, IdealNotNilpotent if I
/// is not nilpotent and NotNilpotent if the result fails the lower central
/// series test.
LieAlgebra triangular_lie(const Ideal& ideal, std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& relations);

} // namespace cyclex
