#pragma once

#include "cyclex/algebra/algebra.hpp"
#include "cyclex/lie/ce.hpp"

#include <optional>
#include <vector>

namespace cyclex {

/// Lambda^{n+1} gl_r(A) -> degree n of the Connes complex of A:
/// (a_0 M_0) ^ ... ^ (a_n M_n) maps to the class of
/// sum over sigma fixing 0 of sgn(sigma) tr(M_0 M_s1 ... M_sn) a_0 (x) a_s1 (x) ... (x) a_sn.
SparseMatrix generalized_trace(const Algebra& a, std::size_t r, int n);

struct TraceChainCheck {
    int n = 0;
    /// Tr_{n-1} d_CE = sign * b_lambda Tr_n on Lambda^{n+1}; 0 when neither sign works.
    int sign = 0;
    bool holds = false;
    /// Both sides vanish, so the sign is not determined.
    bool vacuous = false;
};

/// Checks the chain-map identity for n = 1..top.
std::vector<TraceChainCheck> trace_chain_check(const Algebra& a, std::size_t r, int top);

/// Betti numbers of the graded-commutative algebra freely generated by
/// generators[k] classes in degree k + 1 (odd degrees exterior, even
/// polynomial), in degrees 0..top.
std::vector<std::size_t> free_graded_commutative_betti(const std::vector<std::size_t>& generators, int top);

struct LQTReport {
    std::size_t r = 0;
    int top = 0;
    /// Degrees 0..top.
    std::vector<std::size_t> ce_betti, sym_betti;
    /// HC_0..HC_{top-1}, the generators of the Sym model.
    std::vector<std::size_t> hc_betti;
    /// r >= top.
    bool stable_range = false;
    bool match = false;
    std::optional<int> first_mismatch;
};

/// Compares H_n(gl_r(A)) with Sym(HC_{.-1}(A)) in degrees 0..D. Requires A
/// unital; D >= 1. A mismatch outside the stable range is reported, never thrown.
LQTReport lqt_verify(const Algebra& a, std::size_t r, int degree_bound, std::size_t size_limit = kDefaultSizeLimit);

struct H2Report {
    std::size_t r = 0;
    std::size_t h2_gl = 0, hc0 = 0, hc1 = 0;
    bool equal = false;
    /// H_2 of [gl_r(A), gl_r(A)].
    std::size_t h2_derived = 0;
    /// Degree-2 part of the Sym model: C(hc0, 2) + hc1.
    std::size_t sym_prediction = 0;
};

H2Report h2_vs_hc1(const Algebra& a, std::size_t r, std::size_t size_limit = kDefaultSizeLimit);

} // namespace cyclex
