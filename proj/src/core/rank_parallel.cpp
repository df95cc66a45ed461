#include "cyclex/core/elimination.hpp"

#include "int_vector.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace cyclex {

namespace {

struct PivotChoice {
    std::size_t nnz = std::numeric_limits<std::size_t>::max();
    std::uint32_t id = std::numeric_limits<std::uint32_t>::max();

    bool better_than(const PivotChoice& o) const { return nnz < o.nnz || (nnz == o.nnz && id < o.id); }
};

// Entry of the pivot vector with the smallest magnitude, first on ties:
// a unit pivot leaves the other vectors unscaled.
std::uint32_t pivot_coordinate(const detail::IntVector& p)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (mpz_cmpabs(p[i].value.get_mpz_t(), p[best].value.get_mpz_t()) < 0)
            best = i;
    return p[best].index;
}

} // namespace

std::size_t rank(const SparseMatrix& m)
{
    using detail::IntVector;

    std::vector<IntVector> vectors;
    vectors.reserve(m.cols());
    for (const auto& c : m.columns())
        if (!c.empty())
            vectors.push_back(detail::to_primitive(c));

    std::vector<std::uint32_t> active(vectors.size());
    for (std::uint32_t i = 0; i < active.size(); ++i)
        active[i] = i;

    std::size_t r = 0;
    while (!active.empty()) {
        PivotChoice best;
        const auto n_active = static_cast<std::ptrdiff_t>(active.size());
#pragma omp parallel
        {
            PivotChoice local;
#pragma omp for nowait
            for (std::ptrdiff_t k = 0; k < n_active; ++k) {
                const PivotChoice c{vectors[active[k]].size(), active[k]};
                if (c.better_than(local))
                    local = c;
            }
#pragma omp critical(cyclex_rank_pivot)
            if (local.better_than(best))
                best = local;
        }

        IntVector pivot = std::move(vectors[best.id]);
        vectors[best.id].clear();
        ++r;
        const std::uint32_t coord = pivot_coordinate(pivot);

#pragma omp parallel for schedule(dynamic, 32)
        for (std::ptrdiff_t k = 0; k < n_active; ++k) {
            IntVector& v = vectors[active[k]];
            if (v.empty() || detail::find_index(v, coord) < 0)
                continue;
            v = detail::eliminate(v, pivot, coord);
        }

        std::size_t out = 0;
        for (std::size_t k = 0; k < active.size(); ++k)
            if (!vectors[active[k]].empty())
                active[out++] = active[k];
        active.resize(out);
    }
    return r;
}

} // namespace cyclex
