#pragma once

// Chevalley-Eilenberg homology from bracket structure constants, with
// exterior monomials encoded as bitmasks and dense elimination.

#include "dense_oracle.hpp"

#include "cyclex/lie/lie_algebra.hpp"

#include <bit>
#include <map>

namespace oracle {

inline std::vector<std::size_t> ce_betti(const cyclex::LieAlgebra& g, std::size_t top)
{
    const std::size_t n = g.dim();
    std::vector<std::vector<unsigned>> basis(top + 2);
    std::vector<std::map<unsigned, std::size_t>> index(top + 2);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const auto p = static_cast<std::size_t>(std::popcount(mask));
        if (p <= top + 1) {
            index[p][mask] = basis[p].size();
            basis[p].push_back(mask);
        }
    }
    std::vector<std::size_t> dims;
    std::vector<Dense> d(top + 2);
    for (std::size_t p = 0; p <= top + 1; ++p)
        dims.push_back(basis[p].size());
    for (std::size_t p = 2; p <= top + 1; ++p) {
        d[p] = zeros(dims[p - 1], dims[p]);
        for (std::size_t col = 0; col < dims[p]; ++col) {
            const unsigned mask = basis[p][col];
            std::vector<unsigned> xs;
            for (unsigned b = 0; b < n; ++b)
                if (mask >> b & 1u)
                    xs.push_back(b);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = i + 1; j < p; ++j) {
                    const unsigned rest = mask & ~(1u << xs[i]) & ~(1u << xs[j]);
                    for (const auto& e : g.bracket(xs[i], xs[j]).entries()) {
                        const auto k = static_cast<unsigned>(e.index);
                        if (rest >> k & 1u)
                            continue;
                        const int below = std::popcount(rest & ((1u << k) - 1u));
                        const int sign = ((i + j) % 2 ? -1 : 1) * (below % 2 ? -1 : 1);
                        d[p][index[p - 1][rest | 1u << k]][col] += e.value * sign;
                    }
                }
        }
    }
    d[1] = zeros(dims[0], dims[1]);
    return betti(dims, d, top + 1);
}

} // namespace oracle
