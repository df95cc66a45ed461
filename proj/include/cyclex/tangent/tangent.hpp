#pragma once

#include "cyclex/algebra/algebra.hpp"
#include "cyclex/core/chain_complex.hpp"
#include "cyclex/excision/excision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclex {

// A unipotent 1 + x is stored as its nil part x, so the unit may be formal.

/// log(1 + x) = sum_{m>=1} (-1)^{m+1} x^m / m. Throws NotNilpotent unless x^m = 0 for some m <= dim + 1.
SparseVector log_unipotent(const Algebra& a, const SparseVector& x);
/// exp(y) - 1 = sum_{m>=1} y^m / m!, same nilpotency requirement.
SparseVector exp_nilpotent(const Algebra& a, const SparseVector& y);
/// Nil part of (1 + x)(1 + y).
SparseVector unipotent_product(const Algebra& a, const SparseVector& x, const SparseVector& y);
/// Nil part of (1 + x)^{-1}.
SparseVector unipotent_inverse(const Algebra& a, const SparseVector& x);

/// sum_i X_ii for X in M_r(A), basis index (i*r + j)*dim(A) + a.
SparseVector matrix_trace(const SparseVector& x, std::size_t r, std::size_t dim_a);

struct Chern1Report {
    std::string extension;
    std::size_t r = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Failures among the seeded samples; all checks are exact membership in [A, A].
    std::size_t homomorphism_failures = 0, commutator_failures = 0, conjugation_failures = 0;
    /// False when A has no unit, so M_r(A) has no invertible conjugators.
    bool conjugation_checked = false;
    /// dim of the span of c over generators and samples, inside ker(A/[A,A] -> B/[B,B]).
    std::size_t image_dim = 0;
    bool image_in_kernel = true;
    std::size_t rel_hc0 = 0;
    bool surjective = false;
    bool pass = false;
};

/// c : (1 + M_r(I))^x -> rel HC_0(f), u -> class of trace(log u) mod [A, A].
/// Throws NotNilpotent if I is not nilpotent.
Chern1Report chern1(const Extension& ext, std::size_t r, std::size_t samples, std::uint64_t seed);

struct K1Probe {
    std::size_t generators = 0;
    std::size_t span_dim = 0, rel_hc0 = 0;
    bool contained = true;
    bool equal = false;
};

/// Span of trace(log u) in I/(I n [A, A]) over u = 1 + i E_jk and seeded random unipotents.
K1Probe k1_rel_probe(const Extension& ext, std::size_t r, std::size_t samples, std::uint64_t seed);

struct TangentRow {
    std::string base;
    /// Degrees 0..D-2.
    std::vector<std::size_t> rel_hc, ideal_hc;
    /// dim I / [A, I].
    std::size_t ideal_mod_commutators = 0;
    /// eta_HC : HC(C (x) Aug B) -> rel HC(C (x) B -> C).
    QuasiIsoVerdict alpha;
    int alpha_iso_through = 0;
};

struct TangentTable {
    std::string coefficient;
    int degree_bound = 0;
    Interval range;
    std::vector<TangentRow> rows;
};

/// Cap on dim (C (x) B)^{(x) D+3}, the largest tensor power the comparison map materializes.
inline constexpr std::size_t kTangentSizeLimit = 4000000;

/// One row per Artinian base B, for the extension C (x) Aug B -> C (x) B -> C.
/// C and B are preset expressions. Throws SizeLimit before any row is computed
/// if some base exceeds size_limit.
TangentTable tangent_table(const std::string& coefficient, const std::vector<std::string>& bases, int degree_bound,
                           std::size_t size_limit = kTangentSizeLimit);

} // namespace cyclex
