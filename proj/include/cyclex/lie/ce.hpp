#pragma once

#include "cyclex/core/chain_complex.hpp"
#include "cyclex/lie/lie_algebra.hpp"

#include <cstddef>
#include <vector>

namespace cyclex {

/// Default cap on dim Lambda^p g for any materialized p.
inline constexpr std::size_t kDefaultSizeLimit = 250000;

std::size_t binomial(std::size_t n, std::size_t k);

/// Basis of Lambda^p V for dim V = n: strictly increasing tuples in lexicographic order.
class ExteriorBasis {
public:
    ExteriorBasis(std::size_t n, std::size_t p);

    std::size_t size() const { return count_; }
    std::size_t degree() const { return p_; }
    std::vector<std::size_t> tuple(std::size_t index) const;
    /// Position of a strictly increasing tuple.
    std::size_t rank(const std::vector<std::size_t>& tuple) const;

private:
    std::size_t n_, p_, count_;
};

/// Sign of the permutation sorting `values` (distinct), or 0 if two coincide.
int sort_sign(std::vector<std::size_t>& values);

struct CEOptions {
    /// Drop Lambda^0; the complex then starts in degree 1.
    bool reduced = false;
    std::size_t size_limit = kDefaultSizeLimit;
};

/// Lambda^p g for p = 0..D with
/// d(x_1 ^ ... ^ x_p) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ x_1 ^ ..^x_i^..^x_j^.. ^ x_p.
/// Certified on [lo, D-1], or through D when D >= dim g. Throws SizeLimit when
/// some Lambda^p exceeds options.size_limit and ConfigError when D < 1.
ComplexPtr ce_complex(const LieAlgebra& g, int degree_bound, const CEOptions& options = {});

/// d : Lambda^p -> Lambda^{p-1}.
SparseMatrix ce_differential(const LieAlgebra& g, int p);

/// Betti numbers on the certified range.
HomologyReport ce_homology(const LieAlgebra& g, int degree_bound, const CEOptions& options = {});

} // namespace cyclex
