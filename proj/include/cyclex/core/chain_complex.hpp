#pragma once

#include "cyclex/core/elimination.hpp"
#include "cyclex/core/sparse.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cyclex {

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    bool contains(int n) const { return lo <= n && n <= hi; }
    bool contains(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
    Interval intersect(const Interval& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    std::string to_string() const;

    bool operator==(const Interval&) const = default;
};

/// Homological chain complex C_lo <- ... <- C_hi with d_n : C_n -> C_{n-1}.
///
/// Degrees lo..hi are materialized. Homology at n needs d_{n+1}, so the
/// certified range is [lo, hi-1]; a complex flagged bounded_above is known to
/// vanish above hi and is certified on [lo, hi]. Below lo every space is 0.
/// d_{n-1} d_n = 0 is verified on construction.
class ChainComplex {
public:
    ChainComplex() = default;

    /// dims[k] = dim C_{lo+k}; diffs[k] = d_{lo+k+1} (dims[k] x dims[k+1]).
    ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<SparseMatrix> diffs, bool bounded_above = false);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool bounded_above() const { return bounded_; }
    Interval materialized() const { return {lo(), hi()}; }
    Interval certified() const { return {lo(), bounded_ ? hi() : hi() - 1}; }

    /// 0 below lo and, for bounded complexes, above hi.
    std::size_t dim(int n) const;

    /// d_n : C_n -> C_{n-1}. Throws RangeNotCertified when d_n is not materialized.
    SparseMatrix d(int n) const;
    std::size_t rank_d(int n) const;

    /// Euler characteristic of the spaces over the materialized range.
    long euler_characteristic() const;

    /// Complex with degree n equal to degree n+k of this one; differentials unchanged.
    ChainComplex shifted(int k) const;

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> diffs_;
    bool bounded_ = true;

    struct RankCache;
    std::shared_ptr<RankCache> cache_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// Degreewise maps f_n : X_n -> Y_n; unspecified degrees are zero.
/// Commutation d f = f d is verified wherever both sides are materialized.
class ChainMap {
public:
    ChainMap(ComplexPtr source, ComplexPtr target, int lo, std::vector<SparseMatrix> components);

    const ChainComplex& source() const { return *source_; }
    const ChainComplex& target() const { return *target_; }
    ComplexPtr source_ptr() const { return source_; }
    ComplexPtr target_ptr() const { return target_; }

    /// f_n, or a zero matrix of the right shape.
    SparseMatrix at(int n) const;

    /// Degrees where both complexes are certified.
    Interval certified() const { return source_->certified().intersect(target_->certified()); }

private:
    ComplexPtr source_, target_;
    int lo_;
    std::vector<SparseMatrix> components_;
};

struct HomologyReport {
    Interval range;
    /// betti[k] is the Betti number in degree range.lo + k.
    std::vector<std::size_t> betti;
    /// Optional cycles whose classes form a basis of H_n, per degree.
    std::vector<std::vector<SparseVector>> representatives;

    std::size_t betti_at(int n) const { return betti.at(static_cast<std::size_t>(n - range.lo)); }
    long euler_characteristic() const;
};

/// betti_n = dim ker d_n - rank d_{n+1} for n in range.
HomologyReport homology(const ChainComplex& c, Interval range, bool representatives = false);
/// Over the whole certified range.
HomologyReport homology(const ChainComplex& c, bool representatives = false);

/// cone(f)_n = Y_n (+) X_{n-1} with d(y, x) = (dy + f x, -dx).
ChainComplex cone(const ChainMap& f);

/// Homotopy fiber: hofib(f)_n = cone(f)_{n+1}.
ChainComplex hofib(const ChainMap& f);

struct QuasiIsoVerdict {
    bool holds = true;
    Interval checked;
    std::optional<int> failing_degree;
    /// betti of the cone at the failing degree
    std::size_t defect = 0;
    /// cone betti over the checked range
    std::vector<std::size_t> cone_betti;
};

/// Holds iff the cone of f has vanishing homology on range (cone degrees).
QuasiIsoVerdict is_quasi_iso(const ChainMap& f, Interval range);

/// Rank of H_n(f) : H_n(X) -> H_n(Y).
std::size_t induced_rank(const ChainMap& f, int n);

/// Basis of the cycles of c in degree n.
std::vector<SparseVector> cycles(const ChainComplex& c, int n);

} // namespace cyclex
