#include "cyclex/lie/lie_algebra.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/core/error.hpp"

#include <climits>

namespace cyclex {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> brackets,
                       std::string provenance)
    : name_(std::move(name)), provenance_(std::move(provenance)), labels_(std::move(labels)),
      brackets_(std::move(brackets))
{
    const std::size_t n = dim();
    if (brackets_.size() != n * n)
        throw ShapeError("LieAlgebra " + name_ + ": expected " + std::to_string(n * n) + " brackets");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (bracket(i, j) != bracket(j, i).scaled(-1))
                throw LieError("LieAlgebra " + name_ + ": bracket is not antisymmetric on (" +
                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

    std::vector<std::size_t> bad(n, SIZE_MAX);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
        const auto i = static_cast<std::size_t>(si);
        const auto ei = SparseVector::unit(i);
        for (std::size_t j = i + 1; j < n && bad[i] == SIZE_MAX; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto ej = SparseVector::unit(j), ek = SparseVector::unit(k);
                SparseVector s = bracket(ei, bracket(j, k));
                s = s + bracket(ej, bracket(k, i));
                s = s + bracket(ek, bracket(i, j));
                if (!s.empty()) {
                    bad[i] = j * n + k;
                    break;
                }
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bad[i] != SIZE_MAX)
            throw LieError("LieAlgebra " + name_ + ": Jacobi identity fails on (" + std::to_string(i + 1) + "," +
                           std::to_string(bad[i] / n + 1) + "," + std::to_string(bad[i] % n + 1) + ")");
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const
{
    SparseVector out;
    for (const auto& a : x.entries())
        for (const auto& b : y.entries())
            out.axpy(a.value * b.value, bracket(a.index, b.index));
    return out;
}

bool LieAlgebra::is_abelian() const
{
    for (const auto& b : brackets_)
        if (!b.empty())
            return false;
    return true;
}

LieAlgebra lie_from_assoc(const Algebra& a)
{
    std::vector<SparseVector> brackets;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            brackets.push_back(a.product(i, j) - a.product(j, i));
    return LieAlgebra("Lie(" + a.name() + ")", a.labels(), std::move(brackets), "from_assoc");
}

LieAlgebra gl(const Algebra& a, std::size_t r)
{
    const LieAlgebra g = lie_from_assoc(matrix_algebra(a, r));
    std::vector<SparseVector> brackets;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            brackets.push_back(g.bracket(i, j));
    return LieAlgebra("gl" + std::to_string(r) + "(" + a.name() + ")", g.labels(), std::move(brackets), "gl_r(A)");
}

LieAlgebra lie_subalgebra(const LieAlgebra& g, const Subspace& s, std::string name, std::string provenance)
{
    std::vector<std::string> labels;
    for (const auto& v : s.basis())
        labels.push_back(v.nnz() == 1 && v.entries()[0].value == 1 ? g.labels()[v.leading_index()]
                                                                    : "x" + std::to_string(labels.size() + 1));
    std::vector<SparseVector> brackets;
    for (const auto& x : s.basis())
        for (const auto& y : s.basis()) {
            const auto z = g.bracket(x, y);
            if (!s.contains(z))
                throw LieError("subspace of " + g.name() + " is not closed under the bracket");
            brackets.push_back(s.coordinates(z));
        }
    return LieAlgebra(std::move(name), std::move(labels), std::move(brackets), std::move(provenance));
}

LieAlgebra derived_subalgebra(const LieAlgebra& g)
{
    Subspace s(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            s.add(g.bracket(i, j));
    return lie_subalgebra(g, s, "[" + g.name() + "," + g.name() + "]", g.provenance());
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g)
{
    Subspace current = Subspace::column_span(SparseMatrix::identity(g.dim()));
    std::vector<std::size_t> dims{current.dim()};
    while (current.dim() > 0) {
        Subspace next(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (const auto& v : current.basis())
                next.add(g.bracket(SparseVector::unit(i), v));
        if (next.dim() == current.dim())
            break;
        dims.push_back(next.dim());
        current = std::move(next);
    }
    return dims;
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back() == 0; }

LieAlgebra triangular_lie(const Ideal& ideal, std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    if (!ideal.as_algebra()->nilpotency_order())
        throw IdealNotNilpotent("triangular_lie: the ideal is not nilpotent");
    // Strict order: transitive closure of the relations.
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (auto [i, j] : relations) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw ConfigError("triangular_lie: relation index out of range");
        less[i - 1][j - 1] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (less[i][k] && less[k][j])
                    less[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (less[i][i])
            throw ConfigError("triangular_lie: relations contain a cycle");

    const Algebra& a = ideal.ambient();
    const std::size_t da = a.dim();
    const LieAlgebra g = gl(a, n);
    Subspace s(g.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t offset = (i * n + j) * da;
            if (less[i][j]) {
                for (std::size_t x = 0; x < da; ++x)
                    s.add(SparseVector::unit(offset + x));
            } else {
                for (const auto& v : ideal.subspace().basis()) {
                    SparseVector w;
                    for (const auto& e : v.entries())
                        w.push_back(offset + e.index, e.value);
                    s.add(w);
                }
            }
        }
    LieAlgebra t = lie_subalgebra(g, s, "t" + std::to_string(n) + "(" + a.name() + ",I)", "t^sigma_n");
    if (!is_nilpotent(t))
        throw NotNilpotent("triangular_lie: result is not nilpotent");
    return t;
}

} // namespace cyclex
