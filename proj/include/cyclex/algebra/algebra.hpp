#pragma once

#include "cyclex/core/elimination.hpp"
#include "cyclex/core/sparse.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cyclex {

class Ideal;

/// Finite-dimensional associative algebra over Q, possibly non-unital.
///
/// Structure constants: product(i, j) = e_i e_j. Associativity is checked on
/// every basis triple at construction; the unit and augmentation, when given,
/// are validated too. An augmentation is a multiplicative linear functional
/// A -> Q stored as its coefficient vector.
class Algebra {
public:
    Algebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> products,
            std::optional<SparseVector> unit = std::nullopt, std::optional<SparseVector> augmentation = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

    /// dim x dim^2 matrix of A (x) A -> A; column i*dim + j is e_i e_j.
    const SparseMatrix& mul_matrix() const { return mul_; }
    /// Matrices of x -> a x and x -> x a.
    SparseMatrix left_mult(const SparseVector& a) const;
    SparseMatrix right_mult(const SparseVector& a) const;

    bool is_unital() const { return unit_.has_value(); }
    const std::optional<SparseVector>& unit() const { return unit_; }
    const std::optional<SparseVector>& augmentation() const { return augmentation_; }
    bool is_commutative() const { return commutative_; }
    /// Least N with every product of N elements zero; empty if not nilpotent.
    std::optional<int> nilpotency_order() const { return nilpotency_; }

    /// Same algebra with the augmentation replaced.
    Algebra with_augmentation(std::optional<SparseVector> augmentation) const;
    Algebra renamed(std::string name) const;

    const std::vector<SparseVector>& products() const { return products_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<SparseVector> products_;
    SparseMatrix mul_;
    std::optional<SparseVector> unit_;
    std::optional<SparseVector> augmentation_;
    bool commutative_ = true;
    std::optional<int> nilpotency_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Unit of A if one exists (solved from the linear conditions u e_i = e_i = e_i u).
std::optional<SparseVector> find_unit(const Algebra& a);

/// Least N such that all N-fold products of elements of the span vanish.
std::optional<int> nilpotency_order(const Algebra& a);

/// Algebra homomorphism given by a dim(target) x dim(source) matrix.
class AlgebraMorphism {
public:
    /// Checks f(xy) = f(x) f(y) on basis pairs, and f(1) = 1 when require_unital.
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, SparseMatrix matrix, bool require_unital = false);

    const Algebra& source() const { return *source_; }
    const Algebra& target() const { return *target_; }
    AlgebraPtr source_ptr() const { return source_; }
    AlgebraPtr target_ptr() const { return target_; }
    const SparseMatrix& matrix() const { return matrix_; }

    bool is_surjective() const { return rank(matrix_) == target_->dim(); }

private:
    AlgebraPtr source_, target_;
    SparseMatrix matrix_;
};

/// Bimodule over an algebra. left: A (x) M -> M with column a*dim + m;
/// right: M (x) A -> M with column m*dimA + a. Both actions and their
/// compatibility are checked at construction.
class Bimodule {
public:
    Bimodule(AlgebraPtr algebra, std::string name, std::size_t dim, SparseMatrix left, SparseMatrix right);

    /// A acting on itself.
    static Bimodule regular(AlgebraPtr a);
    /// The target of f as a bimodule over the source.
    static Bimodule restricted(const AlgebraMorphism& f);
    /// A with its left action and the zero right action.
    static Bimodule zero_right(AlgebraPtr a);
    /// N (x) A with N = Q^n: zero left action, right action on the A factor.
    static Bimodule free_right(AlgebraPtr a, std::size_t n);
    /// N (x) I for the left B-module N = B (regular), as an A-bimodule:
    /// a.(x (x) i) = f(a)x (x) i and (x (x) i).a = x (x) ia.
    static Bimodule module_tensor_ideal(const AlgebraMorphism& f, const Ideal& ideal);
    /// M with the actions of the source pulled back along f : S -> A.
    static Bimodule pullback(const Bimodule& m, const AlgebraMorphism& f);

    const Algebra& algebra() const { return *algebra_; }
    AlgebraPtr algebra_ptr() const { return algebra_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const SparseMatrix& left() const { return left_; }
    const SparseMatrix& right() const { return right_; }

private:
    AlgebraPtr algebra_;
    std::string name_;
    std::size_t dim_;
    SparseMatrix left_, right_;
};

/// Two-sided ideal, kept as a reduced echelon basis of a subspace of the ambient algebra.
class Ideal {
public:
    /// Throws NotAnIdeal unless the span is closed under both multiplications.
    Ideal(AlgebraPtr ambient, const std::vector<SparseVector>& generators_of_subspace);

    const Algebra& ambient() const { return *ambient_; }
    AlgebraPtr ambient_ptr() const { return ambient_; }
    const Subspace& subspace() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    /// ambient_dim x dim, columns = basis.
    SparseMatrix basis_matrix() const { return space_.basis_matrix(); }

    /// The ideal with the induced multiplication, in the echelon basis.
    AlgebraPtr as_algebra() const { return algebra_; }
    /// Inclusion as a morphism of (non-unital) algebras.
    AlgebraMorphism inclusion() const;

private:
    AlgebraPtr ambient_;
    Subspace space_;
    AlgebraPtr algebra_;
};

} // namespace cyclex
