#include "cyclex/lie/ce.hpp"

#include "cyclex/core/error.hpp"
#include "cyclex/core/tensor_index.hpp"

#include <limits>

namespace cyclex {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at every step; saturate on overflow.
        const std::size_t f = n - k + i;
        if (r > cap / f)
            return cap;
        r = r * f / i;
    }
    return r;
}

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t p) : n_(n), p_(p), count_(binomial(n, p)) {}

std::vector<std::size_t> ExteriorBasis::tuple(std::size_t index) const
{
    std::vector<std::size_t> t;
    t.reserve(p_);
    std::size_t v = 0;
    for (std::size_t k = 0; k < p_; ++k) {
        // Tuples with position k equal to v number C(n-1-v, p-1-k).
        for (;; ++v) {
            const std::size_t block = binomial(n_ - 1 - v, p_ - 1 - k);
            if (index < block)
                break;
            index -= block;
        }
        t.push_back(v++);
    }
    return t;
}

std::size_t ExteriorBasis::rank(const std::vector<std::size_t>& tuple) const
{
    std::size_t r = 0, v = 0;
    for (std::size_t k = 0; k < p_; ++k) {
        for (; v < tuple[k]; ++v)
            r += binomial(n_ - 1 - v, p_ - 1 - k);
        ++v;
    }
    return r;
}

int sort_sign(std::vector<std::size_t>& values)
{
    int sign = 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
            if (values[j - 1] == values[j])
                return 0;
            std::swap(values[j - 1], values[j]);
            sign = -sign;
        }
    return sign;
}

SparseMatrix ce_differential(const LieAlgebra& g, int p)
{
    const auto up = static_cast<std::size_t>(p);
    const ExteriorBasis src(g.dim(), up);
    if (p <= 1)
        return SparseMatrix(p == 1 ? 1 : 0, src.size());
    const ExteriorBasis tgt(g.dim(), up - 1);
    return assemble_columns(tgt.size(), src.size(), [&](std::size_t col) {
        const auto t = src.tuple(col);
        std::vector<SparseEntry> acc;
        std::vector<std::size_t> rest, out;
        for (std::size_t i = 0; i < up; ++i)
            for (std::size_t j = i + 1; j < up; ++j) {
                const auto& br = g.bracket(t[i], t[j]);
                if (br.empty())
                    continue;
                rest.clear();
                for (std::size_t k = 0; k < up; ++k)
                    if (k != i && k != j)
                        rest.push_back(t[k]);
                const int sij = (i + j) % 2 ? -1 : 1;
                for (const auto& e : br.entries()) {
                    out.assign(1, e.index);
                    out.insert(out.end(), rest.begin(), rest.end());
                    const int s = sort_sign(out);
                    if (s != 0)
                        acc.push_back({tgt.rank(out), e.value * (s * sij)});
                }
            }
        return SparseVector::from_unsorted(std::move(acc));
    });
}

ComplexPtr ce_complex(const LieAlgebra& g, int degree_bound, const CEOptions& options)
{
    if (degree_bound < 1)
        throw ConfigError("ce: degree bound D must be at least 1, got " + std::to_string(degree_bound));
    const int lo = options.reduced ? 1 : 0;
    for (int p = lo; p <= degree_bound; ++p)
        if (binomial(g.dim(), static_cast<std::size_t>(p)) > options.size_limit)
            throw SizeLimit("ce: Lambda^" + std::to_string(p) + " of " + g.name() + " has dimension " +
                            std::to_string(binomial(g.dim(), static_cast<std::size_t>(p))) + " > size limit " +
                            std::to_string(options.size_limit));
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> diffs;
    for (int p = lo; p <= degree_bound; ++p) {
        dims.push_back(binomial(g.dim(), static_cast<std::size_t>(p)));
        if (p > lo)
            diffs.push_back(ce_differential(g, p));
    }
    const bool bounded = static_cast<std::size_t>(degree_bound) >= g.dim();
    return std::make_shared<const ChainComplex>(lo, std::move(dims), std::move(diffs), bounded);
}

HomologyReport ce_homology(const LieAlgebra& g, int degree_bound, const CEOptions& options)
{
    return homology(*ce_complex(g, degree_bound, options));
}

} // namespace cyclex
