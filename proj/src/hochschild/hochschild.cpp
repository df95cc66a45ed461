#include "cyclex/hochschild/hochschild.hpp"

#include "cyclex/core/error.hpp"
#include "cyclex/core/tensor_index.hpp"

namespace cyclex {

namespace {

// Shared body of b' and b; the wrap-around term is included when `wrap`.
SparseMatrix bar_like(const Bimodule& m, int p, bool wrap)
{
    if (p < 1)
        throw DegreeMismatch("b' and b are defined from degree 1");
    const Algebra& a = m.algebra();
    const std::size_t da = a.dim(), dm = m.dim();
    const TensorIndex src = TensorIndex::headed(dm, da, p);
    const TensorIndex dst = TensorIndex::headed(dm, da, p - 1);
    const SparseMatrix& mu = a.mul_matrix();

    return assemble_columns(dst.size(), src.size(), [&](std::size_t col) {
        std::vector<std::size_t> x, y;
        src.decode(col, x);
        std::vector<SparseEntry> terms;
        // x[0] = m, x[k] = a_k
        y.assign(x.begin() + 1, x.end());
        for (const auto& e : m.right().column(x[0] * da + x[1]).entries()) {
            y[0] = e.index;
            terms.push_back({dst.encode(y), e.value});
        }
        for (int i = 1; i < p; ++i) {
            y.assign(x.begin(), x.end());
            y.erase(y.begin() + i + 1);
            const Rational sign = i % 2 ? -1 : 1;
            for (const auto& e : mu.column(x[i] * da + x[i + 1]).entries()) {
                y[i] = e.index;
                terms.push_back({dst.encode(y), sign * e.value});
            }
        }
        if (wrap) {
            y.assign(x.begin(), x.end() - 1);
            const Rational sign = p % 2 ? -1 : 1;
            for (const auto& e : m.left().column(x[p] * dm + x[0]).entries()) {
                y[0] = e.index;
                terms.push_back({dst.encode(y), sign * e.value});
            }
        }
        return SparseVector::from_unsorted(std::move(terms));
    });
}

ComplexPtr build(const Bimodule& m, int degree_bound, bool hoch)
{
    if (degree_bound < 1)
        throw ConfigError("degree bound must be at least 1");
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> diffs;
    for (int p = 0; p <= degree_bound; ++p)
        dims.push_back(m.dim() * ipow(m.algebra().dim(), p));
    for (int p = 1; p <= degree_bound; ++p)
        diffs.push_back(hoch ? hoch_b(m, p) : -b_prime(m, p));
    return std::make_shared<const ChainComplex>(0, std::move(dims), std::move(diffs));
}

} // namespace

SparseMatrix b_prime(const Bimodule& m, int p) { return bar_like(m, p, false); }

SparseMatrix hoch_b(const Bimodule& m, int p) { return bar_like(m, p, true); }

ComplexPtr bar_complex(const Bimodule& m, int degree_bound) { return build(m, degree_bound, false); }

ComplexPtr hoch_complex(const Bimodule& m, int degree_bound) { return build(m, degree_bound, true); }

SparseMatrix cyclic_t(const Algebra& a, int p)
{
    const TensorIndex idx = TensorIndex::power(a.dim(), p + 1);
    const Rational sign = p % 2 ? -1 : 1;
    return assemble_columns(idx.size(), idx.size(), [&](std::size_t col) {
        std::vector<std::size_t> x, y;
        idx.decode(col, x);
        y.assign(x.size(), 0);
        y[0] = x[static_cast<std::size_t>(p)];
        for (int k = 0; k < p; ++k)
            y[static_cast<std::size_t>(k) + 1] = x[static_cast<std::size_t>(k)];
        return SparseVector::unit(idx.encode(y), sign);
    });
}

SparseMatrix cyclic_N(const Algebra& a, int p)
{
    const SparseMatrix t = cyclic_t(a, p);
    SparseMatrix power = SparseMatrix::identity(t.cols());
    SparseMatrix sum = power;
    for (int i = 1; i <= p; ++i) {
        power = t * power;
        sum = sum + power;
    }
    return sum;
}

SparseMatrix contracting_homotopy(const Bimodule& m, int p)
{
    const Algebra& a = m.algebra();
    if (!a.unit())
        throw UnitError("contracting homotopy needs a unital algebra, " + a.name() + " has no unit");
    const std::size_t da = a.dim();
    const TensorIndex src = TensorIndex::headed(m.dim(), da, p);
    const TensorIndex dst = TensorIndex::headed(m.dim(), da, p + 1);
    const Rational sign = p % 2 ? -1 : 1;
    const SparseVector& unit = *a.unit();
    return assemble_columns(dst.size(), src.size(), [&](std::size_t col) {
        SparseVector v;
        for (const auto& e : unit.entries())
            v.push_back(col * da + e.index, sign * e.value);
        return v;
    });
}

} // namespace cyclex
