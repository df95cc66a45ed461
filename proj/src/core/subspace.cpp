#include "cyclex/core/elimination.hpp"

#include "cyclex/core/error.hpp"

#include <algorithm>

namespace cyclex {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), slot_of_pivot_(ambient_dim, -1) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors)
{
    Subspace s(ambient_dim);
    for (const auto& v : vectors)
        s.add(v);
    return s;
}

Subspace Subspace::column_span(const SparseMatrix& m) { return span(m.rows(), m.columns()); }

SparseVector Subspace::reduce(const SparseVector& v) const
{
    if (v.extent() > ambient_)
        throw ShapeError("Subspace::reduce: vector outside ambient space");
    std::vector<std::pair<long, Rational>> hits;
    for (const auto& e : v.entries()) {
        const long slot = slot_of_pivot_[e.index];
        if (slot >= 0)
            hits.emplace_back(slot, e.value);
    }
    SparseVector r = v;
    for (const auto& [slot, coef] : hits)
        r.axpy(-coef, basis_[slot]);
    return r;
}

bool Subspace::add(const SparseVector& v)
{
    SparseVector r = reduce(v);
    if (r.empty())
        return false;
    const std::size_t pivot = r.leading_index();
    r = r.scaled(1 / Rational(r.entries().front().value));
    for (auto& b : basis_) {
        const Rational c = b.at(pivot);
        if (!is_zero(c))
            b.axpy(-c, r);
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(r));
    for (std::size_t k = pos; k < pivots_.size(); ++k)
        slot_of_pivot_[pivots_[k]] = static_cast<long>(k);
    return true;
}

SparseVector Subspace::coordinates(const SparseVector& v) const
{
    if (!contains(v))
        throw Error("Subspace::coordinates: vector is not in the subspace");
    SparseVector c;
    for (const auto& e : v.entries()) {
        const long slot = slot_of_pivot_[e.index];
        if (slot >= 0)
            c.push_back(static_cast<std::size_t>(slot), e.value);
    }
    return c;
}

SparseMatrix Subspace::basis_matrix() const { return SparseMatrix(ambient_, basis_); }

Subspace Subspace::operator+(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw ShapeError("Subspace sum: ambient dimensions differ");
    Subspace s = *this;
    for (const auto& b : other.basis_)
        s.add(b);
    return s;
}

RankKernel rank_kernel(const SparseMatrix& m)
{
    const SparseMatrix rows = m.transpose();
    Subspace row_space(m.cols());
    for (const auto& r : rows.columns())
        row_space.add(r);

    RankKernel out;
    out.rank = row_space.dim();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : row_space.pivots())
        is_pivot[p] = true;

    // Column index -> list of (basis slot, coefficient) for non-pivot columns.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> hits(m.cols());
    const auto& basis = row_space.basis();
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& e : basis[k].entries())
            if (!is_pivot[e.index])
                hits[e.index].emplace_back(k, e.value);

    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<SparseEntry> entries;
        entries.push_back({f, Rational(1)});
        for (const auto& [k, c] : hits[f])
            entries.push_back({row_space.pivots()[k], -c});
        out.kernel.push_back(SparseVector::from_unsorted(std::move(entries)));
    }
    return out;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b)
{
    if (b.extent() > m.rows())
        throw ShapeError("solve: right-hand side longer than matrix height");
    SparseMatrix augmented = hstack(m, SparseMatrix(m.rows(), std::vector<SparseVector>{b}));
    const SparseMatrix rows = augmented.transpose();
    Subspace row_space(augmented.cols());
    for (const auto& r : rows.columns())
        row_space.add(r);
    const std::size_t rhs = m.cols();
    std::vector<SparseEntry> x;
    for (std::size_t k = 0; k < row_space.dim(); ++k) {
        const std::size_t p = row_space.pivots()[k];
        if (p == rhs)
            return std::nullopt;
        const Rational v = row_space.basis()[k].at(rhs);
        if (!is_zero(v))
            x.push_back({p, v});
    }
    return SparseVector::from_unsorted(std::move(x));
}

} // namespace cyclex
