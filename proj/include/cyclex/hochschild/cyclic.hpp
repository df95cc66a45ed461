#pragma once

#include "cyclex/algebra/algebra.hpp"
#include "cyclex/core/chain_complex.hpp"

#include <optional>
#include <vector>

namespace cyclex {

/// ⊕-total complex of the cyclic bicomplex, truncated to a number of columns.
///
/// Column c, row p holds A^{(x)p+1}. Even columns carry b, odd columns -b'.
/// Horizontal maps: odd c -> c-1 is 1-t, even c >= 2 -> c-1 is N. The
/// squares anticommute, so the total differential is the plain sum. Blocks
/// of total degree n are ordered by column.
struct CyclicTotal {
    ComplexPtr complex;
    /// Number of columns kept; 2 gives HH, 0 keeps every column (HC).
    int columns = 0;
    /// offsets[n][c] = first coordinate of block (c, n-c) in total degree n.
    std::vector<std::vector<std::size_t>> offsets;
    std::size_t dim_a = 0;

    int column_count(int n) const { return columns == 0 ? n + 1 : std::min(columns, n + 1); }
    std::size_t block_size(int n, int c) const;
};

/// Total degrees 0..D-1; homology certified on [0, D-2].
CyclicTotal hh_total(const Algebra& a, int degree_bound);
CyclicTotal hc_total(const Algebra& a, int degree_bound);

/// Betti numbers on [0, D-2]. Throws ConfigError when D < 2.
HomologyReport hh_homology(const Algebra& a, int degree_bound, bool representatives = false);
HomologyReport hc_homology(const Algebra& a, int degree_bound, bool representatives = false);

/// Map of total complexes induced by an algebra morphism, f^{(x)p+1} on each block.
/// Both totals must have the same column truncation.
ChainMap total_map(const AlgebraMorphism& f, const CyclicTotal& source, const CyclicTotal& target);

/// Ranks around HH_n -i-> HC_n -pi-> HC_{n-2} -delta-> HH_{n-1}, obtained from
/// the short exact sequence HH -> HC -> HC[2] that drops columns 0 and 1.
struct ConnesDegree {
    int n = 0;
    std::size_t hh = 0, hc = 0, hc_shift = 0;
    std::size_t rank_i = 0, rank_pi = 0, rank_delta_in = 0, rank_delta_out = 0;
    /// exact at HH_n, HC_n and HC_{n-2}
    bool exact = true;
};

struct ConnesReport {
    Interval checked;
    std::vector<ConnesDegree> degrees;
    bool exact = true;
    std::optional<int> failing_degree;
};

/// Needs D >= 3; checks every n in [0, D-2].
ConnesReport connes_check(const Algebra& a, int degree_bound);

/// Connes complex: degree n is A^{(x)n+1}/(1-t) with the differential induced by b.
struct LambdaComplex {
    ComplexPtr complex;
    /// projection[n] : A^{(x)n+1} -> degree n
    std::vector<SparseMatrix> projection;
    /// representatives[n][k] = index of the tensor whose class is basis vector k
    std::vector<std::vector<std::size_t>> representatives;
};

/// Degrees 0..D; certified [0, D-1].
LambdaComplex connes_lambda_complex(const Algebra& a, int degree_bound);

/// Projection A^{(x)n+1} -> coker(1-t) in the orbit basis used by connes_lambda_complex.
SparseMatrix lambda_projection(const Algebra& a, int n, std::vector<std::size_t>* representatives = nullptr);

} // namespace cyclex
