#include "cyclex/algebra/algebra.hpp"

#include "cyclex/core/error.hpp"

#include <climits>

namespace cyclex {

namespace {

struct Triple {
    std::size_t i = SIZE_MAX, j = 0, k = 0;
};

// First violating triple in lexicographic order, if any.
std::optional<Triple> first_nonassociative(const Algebra& a)
{
    const std::size_t n = a.dim();
    std::vector<Triple> first(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = 0; j < n && first[i].i == SIZE_MAX; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                SparseVector lhs, rhs;
                for (const auto& e : a.product(i, j).entries())
                    lhs.axpy(e.value, a.product(e.index, k));
                for (const auto& e : a.product(j, k).entries())
                    rhs.axpy(e.value, a.product(i, e.index));
                if (lhs != rhs) {
                    first[i] = {i, j, k};
                    break;
                }
            }
    }
    for (const auto& t : first)
        if (t.i != SIZE_MAX)
            return t;
    return std::nullopt;
}

Rational apply_functional(const SparseVector& f, const SparseVector& v)
{
    Rational s = 0;
    for (const auto& e : v.entries())
        s += e.value * f.at(e.index);
    return s;
}

} // namespace

Algebra::Algebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> products,
                 std::optional<SparseVector> unit, std::optional<SparseVector> augmentation)
    : name_(std::move(name)), labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)),
      augmentation_(std::move(augmentation))
{
    const std::size_t n = dim();
    if (products_.size() != n * n)
        throw ShapeError("Algebra " + name_ + ": expected " + std::to_string(n * n) + " structure constants");
    mul_ = SparseMatrix(n, products_);

    if (auto t = first_nonassociative(*this))
        throw AssociativityError(static_cast<int>(t->i + 1), static_cast<int>(t->j + 1), static_cast<int>(t->k + 1));

    for (std::size_t i = 0; i < n && commutative_; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (product(i, j) != product(j, i)) {
                commutative_ = false;
                break;
            }

    if (unit_) {
        if (unit_->extent() > n)
            throw UnitError("Algebra " + name_ + ": unit has too many coordinates");
        for (std::size_t i = 0; i < n; ++i) {
            const auto ei = SparseVector::unit(i);
            if (multiply(*unit_, ei) != ei || multiply(ei, *unit_) != ei)
                throw UnitError("Algebra " + name_ + ": declared unit does not act as identity on basis element " +
                                std::to_string(i + 1));
        }
    }

    if (augmentation_) {
        if (augmentation_->extent() > n)
            throw NotAugmented("Algebra " + name_ + ": augmentation has too many coordinates");
        const auto& eps = *augmentation_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (apply_functional(eps, product(i, j)) != eps.at(i) * eps.at(j))
                    throw NotAugmented("Algebra " + name_ + ": augmentation is not multiplicative");
        if (unit_ && apply_functional(eps, *unit_) != 1)
            throw NotAugmented("Algebra " + name_ + ": augmentation does not send 1 to 1");
    }

    nilpotency_ = cyclex::nilpotency_order(*this);
}

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const
{
    SparseVector out;
    for (const auto& x : a.entries())
        for (const auto& y : b.entries())
            out.axpy(x.value * y.value, product(x.index, y.index));
    return out;
}

SparseMatrix Algebra::left_mult(const SparseVector& a) const
{
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < dim(); ++j)
        cols.push_back(multiply(a, SparseVector::unit(j)));
    return SparseMatrix(dim(), std::move(cols));
}

SparseMatrix Algebra::right_mult(const SparseVector& a) const
{
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < dim(); ++j)
        cols.push_back(multiply(SparseVector::unit(j), a));
    return SparseMatrix(dim(), std::move(cols));
}

Algebra Algebra::with_augmentation(std::optional<SparseVector> augmentation) const
{
    return Algebra(name_, labels_, products_, unit_, std::move(augmentation));
}

Algebra Algebra::renamed(std::string name) const
{
    Algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

std::optional<int> nilpotency_order(const Algebra& a)
{
    const std::size_t n = a.dim();
    if (a.is_unital() && n > 0)
        return std::nullopt;
    Subspace power = Subspace::column_span(SparseMatrix::identity(n));
    for (int order = 1;; ++order) {
        if (power.dim() == 0)
            return order;
        Subspace next(n);
        for (const auto& v : power.basis())
            for (std::size_t j = 0; j < n; ++j)
                next.add(a.multiply(v, SparseVector::unit(j)));
        if (next.dim() == power.dim())
            return std::nullopt;
        power = std::move(next);
    }
}

std::optional<SparseVector> find_unit(const Algebra& a)
{
    const std::size_t n = a.dim();
    std::vector<SparseVector> cols;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<SparseEntry> e;
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& x : a.product(k, i).entries())
                e.push_back({i * n + x.index, x.value});
            for (const auto& x : a.product(i, k).entries())
                e.push_back({n * n + i * n + x.index, x.value});
        }
        cols.push_back(SparseVector::from_unsorted(std::move(e)));
    }
    std::vector<SparseEntry> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        rhs.push_back({i * n + i, Rational(1)});
        rhs.push_back({n * n + i * n + i, Rational(1)});
    }
    return solve(SparseMatrix(2 * n * n, std::move(cols)), SparseVector::from_unsorted(std::move(rhs)));
}

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, SparseMatrix matrix, bool require_unital)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    const auto& s = *source_;
    const auto& t = *target_;
    if (matrix_.rows() != t.dim() || matrix_.cols() != s.dim())
        throw MorphismError("morphism " + s.name() + " -> " + t.name() + ": matrix has the wrong shape");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (matrix_.apply(s.product(i, j)) != t.multiply(matrix_.column(i), matrix_.column(j)))
                throw MorphismError("morphism " + s.name() + " -> " + t.name() + " is not multiplicative on (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (require_unital && s.is_unital() && t.is_unital() && matrix_.apply(*s.unit()) != *t.unit())
        throw MorphismError("morphism " + s.name() + " -> " + t.name() + " does not preserve the unit");
}

Bimodule::Bimodule(AlgebraPtr algebra, std::string name, std::size_t dim, SparseMatrix left, SparseMatrix right)
    : algebra_(std::move(algebra)), name_(std::move(name)), dim_(dim), left_(std::move(left)), right_(std::move(right))
{
    const std::size_t da = algebra_->dim();
    if (left_.rows() != dim_ || left_.cols() != da * dim_ || right_.rows() != dim_ || right_.cols() != dim_ * da)
        throw ShapeError("Bimodule " + name_ + ": action matrices have the wrong shape");
    const SparseMatrix& mu = algebra_->mul_matrix();
    const auto id_a = SparseMatrix::identity(da);
    const auto id_m = SparseMatrix::identity(dim_);
    if (left_ * kronecker(mu, id_m) != left_ * kronecker(id_a, left_))
        throw Error("Bimodule " + name_ + ": left action is not associative");
    if (right_ * kronecker(id_m, mu) != right_ * kronecker(right_, id_a))
        throw Error("Bimodule " + name_ + ": right action is not associative");
    if (right_ * kronecker(left_, id_a) != left_ * kronecker(id_a, right_))
        throw Error("Bimodule " + name_ + ": left and right actions do not commute");
}

Bimodule Bimodule::regular(AlgebraPtr a)
{
    const auto& mu = a->mul_matrix();
    const std::size_t n = a->dim();
    const std::string name = a->name();
    return Bimodule(std::move(a), name, n, mu, mu);
}

Bimodule Bimodule::restricted(const AlgebraMorphism& f)
{
    return pullback(regular(f.target_ptr()), f);
}

Bimodule Bimodule::zero_right(AlgebraPtr a)
{
    const std::size_t n = a->dim();
    const auto mu = a->mul_matrix();
    const std::string name = a->name() + "[zero right]";
    return Bimodule(std::move(a), name, n, mu, SparseMatrix(n, n * n));
}

Bimodule Bimodule::free_right(AlgebraPtr a, std::size_t n)
{
    const std::size_t da = a->dim();
    const auto right = kronecker(SparseMatrix::identity(n), a->mul_matrix());
    const std::string name = "Q^" + std::to_string(n) + "(x)" + a->name();
    return Bimodule(std::move(a), name, n * da, SparseMatrix(n * da, da * n * da), right);
}

Bimodule Bimodule::module_tensor_ideal(const AlgebraMorphism& f, const Ideal& ideal)
{
    const Algebra& a = f.source();
    const Algebra& b = f.target();
    const std::size_t da = a.dim(), db = b.dim(), di = ideal.dim();
    const SparseMatrix left =
        kronecker(b.mul_matrix() * kronecker(f.matrix(), SparseMatrix::identity(db)), SparseMatrix::identity(di));

    // I (x) A -> I in ideal coordinates.
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < di; ++i)
        for (std::size_t x = 0; x < da; ++x)
            cols.push_back(ideal.subspace().coordinates(a.multiply(ideal.subspace().basis()[i], SparseVector::unit(x))));
    const SparseMatrix rho(di, std::move(cols));
    const SparseMatrix right = kronecker(SparseMatrix::identity(db), rho);
    return Bimodule(f.source_ptr(), b.name() + "(x)I", db * di, left, right);
}

Bimodule Bimodule::pullback(const Bimodule& m, const AlgebraMorphism& f)
{
    if (f.target().dim() != m.algebra().dim())
        throw MorphismError("pullback: morphism target is not the bimodule's algebra");
    const auto id_m = SparseMatrix::identity(m.dim());
    return Bimodule(f.source_ptr(), m.name(), m.dim(), m.left() * kronecker(f.matrix(), id_m),
                    m.right() * kronecker(id_m, f.matrix()));
}

Ideal::Ideal(AlgebraPtr ambient, const std::vector<SparseVector>& generators)
    : ambient_(std::move(ambient)), space_(Subspace::span(ambient_->dim(), generators))
{
    const auto& a = *ambient_;
    const auto& basis = space_.basis();
    for (const auto& v : basis)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto ej = SparseVector::unit(j);
            if (!space_.contains(a.multiply(v, ej)) || !space_.contains(a.multiply(ej, v)))
                throw NotAnIdeal("subspace of " + a.name() + " is not a two-sided ideal");
        }

    std::vector<std::string> labels;
    for (const auto& v : basis)
        labels.push_back(v.nnz() == 1 && v.entries()[0].value == 1 ? a.labels()[v.leading_index()]
                                                                    : "i" + std::to_string(labels.size() + 1));
    std::vector<SparseVector> products;
    for (const auto& x : basis)
        for (const auto& y : basis)
            products.push_back(space_.coordinates(a.multiply(x, y)));
    Algebra sub(a.name() + "_ideal", std::move(labels), std::move(products));
    if (auto u = find_unit(sub))
        sub = Algebra(sub.name(), sub.labels(), sub.products(), std::move(u));
    algebra_ = std::make_shared<const Algebra>(std::move(sub));
}

AlgebraMorphism Ideal::inclusion() const { return AlgebraMorphism(algebra_, ambient_, basis_matrix()); }

} // namespace cyclex
