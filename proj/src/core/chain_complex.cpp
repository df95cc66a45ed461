#include "cyclex/core/chain_complex.hpp"

#include "cyclex/core/error.hpp"

#include <climits>
#include <mutex>

namespace cyclex {

std::string Interval::to_string() const
{
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

struct ChainComplex::RankCache {
    std::mutex mutex;
    std::vector<std::optional<std::size_t>> ranks;
};

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<SparseMatrix> diffs, bool bounded_above)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)), bounded_(bounded_above),
      cache_(std::make_shared<RankCache>())
{
    if (diffs_.size() + 1 != std::max<std::size_t>(dims_.size(), 1))
        throw ShapeError("ChainComplex: expected one differential per pair of adjacent degrees");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const auto& m = diffs_[k];
        if (m.rows() != dims_[k] || m.cols() != dims_[k + 1])
            throw ShapeError("ChainComplex: d_" + std::to_string(lo_ + static_cast<int>(k) + 1) + " has shape " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                             std::to_string(dims_[k]) + "x" + std::to_string(dims_[k + 1]));
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw Error("ChainComplex: d_" + std::to_string(lo_ + static_cast<int>(k) + 1) + " d_" +
                        std::to_string(lo_ + static_cast<int>(k) + 2) + " != 0");
    cache_->ranks.resize(diffs_.size());
}

std::size_t ChainComplex::dim(int n) const
{
    if (n < lo_)
        return 0;
    if (n > hi()) {
        if (bounded_)
            return 0;
        throw RangeNotCertified("degree " + std::to_string(n) + " is above the materialized range " +
                                materialized().to_string());
    }
    return dims_[static_cast<std::size_t>(n - lo_)];
}

SparseMatrix ChainComplex::d(int n) const
{
    if (n > lo_ && n <= hi())
        return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
    if (n > hi() && !bounded_)
        throw RangeNotCertified("d_" + std::to_string(n) + " is not materialized (range " +
                                materialized().to_string() + ")");
    return SparseMatrix(dim(n - 1), dim(n));
}

std::size_t ChainComplex::rank_d(int n) const
{
    if (n <= lo_ || n > hi()) {
        d(n); // throws outside the known range
        return 0;
    }
    const auto k = static_cast<std::size_t>(n - lo_ - 1);
    {
        std::lock_guard lock(cache_->mutex);
        if (cache_->ranks[k])
            return *cache_->ranks[k];
    }
    const std::size_t r = rank(diffs_[k]);
    std::lock_guard lock(cache_->mutex);
    cache_->ranks[k] = r;
    return r;
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int n = lo(); n <= hi(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dim(n));
    return chi;
}

ChainComplex ChainComplex::shifted(int k) const { return ChainComplex(lo_ - k, dims_, diffs_, bounded_); }

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int lo, std::vector<SparseMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), components_(std::move(components))
{
    const auto& x = *source_;
    const auto& y = *target_;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const int n = lo_ + static_cast<int>(k);
        if (components_[k].rows() != y.dim(n) || components_[k].cols() != x.dim(n))
            throw DegreeMismatch("ChainMap: component in degree " + std::to_string(n) + " has the wrong shape");
    }
    const int top = std::min(x.bounded_above() ? INT_MAX : x.hi(), y.bounded_above() ? INT_MAX : y.hi());
    const int stop = top == INT_MAX ? std::max(x.hi(), y.hi()) + 1 : top;
    for (int n = std::min(x.lo(), y.lo()) + 1; n <= stop; ++n)
        if (y.d(n) * at(n) != at(n - 1) * x.d(n))
            throw Error("ChainMap: d f != f d in degree " + std::to_string(n));
}

SparseMatrix ChainMap::at(int n) const
{
    if (n >= lo_ && n < lo_ + static_cast<int>(components_.size()))
        return components_[static_cast<std::size_t>(n - lo_)];
    return SparseMatrix(target_->dim(n), source_->dim(n));
}

long HomologyReport::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k)
        chi += ((range.lo + static_cast<int>(k)) % 2 == 0 ? 1 : -1) * static_cast<long>(betti[k]);
    return chi;
}

std::vector<SparseVector> cycles(const ChainComplex& c, int n) { return rank_kernel(c.d(n)).kernel; }

HomologyReport homology(const ChainComplex& c, Interval range, bool representatives)
{
    if (!c.certified().contains(range))
        throw RangeNotCertified("requested degrees " + range.to_string() + " exceed the certified range " +
                                c.certified().to_string());
    HomologyReport report;
    report.range = range;
    for (int n = range.lo; n <= range.hi; ++n) {
        report.betti.push_back(c.dim(n) - c.rank_d(n) - c.rank_d(n + 1));
        if (!representatives)
            continue;
        Subspace classes = Subspace::column_span(c.d(n + 1));
        std::vector<SparseVector> reps;
        for (auto& z : cycles(c, n))
            if (classes.add(z))
                reps.push_back(std::move(z));
        report.representatives.push_back(std::move(reps));
    }
    return report;
}

HomologyReport homology(const ChainComplex& c, bool representatives)
{
    return homology(c, c.certified(), representatives);
}

ChainComplex cone(const ChainMap& f)
{
    const auto& x = f.source();
    const auto& y = f.target();
    const long top_y = y.bounded_above() ? LONG_MAX : y.hi();
    const long top_x = x.bounded_above() ? LONG_MAX : static_cast<long>(x.hi()) + 1;
    const bool bounded = top_y == LONG_MAX && top_x == LONG_MAX;
    const int hi = bounded ? std::max(y.hi(), x.hi() + 1) : static_cast<int>(std::min(top_y, top_x));
    const int lo = std::min(y.lo(), x.lo() + 1);
    if (hi < lo - 1)
        throw DegreeMismatch("cone: source and target ranges do not overlap");

    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(y.dim(n) + x.dim(n - 1));
    std::vector<SparseMatrix> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        BlockMatrix m({y.dim(n - 1), x.dim(n - 2)}, {y.dim(n), x.dim(n - 1)});
        m.set(0, 0, y.d(n));
        m.set(0, 1, f.at(n - 1));
        m.set(1, 1, -x.d(n - 1));
        diffs.push_back(m.assemble());
    }
    return ChainComplex(lo, std::move(dims), std::move(diffs), bounded);
}

ChainComplex hofib(const ChainMap& f) { return cone(f).shifted(1); }

QuasiIsoVerdict is_quasi_iso(const ChainMap& f, Interval range)
{
    const ChainComplex c = cone(f);
    if (!c.certified().contains(range))
        throw DegreeMismatch("is_quasi_iso: cone is certified on " + c.certified().to_string() + ", requested " +
                             range.to_string());
    QuasiIsoVerdict v;
    v.checked = range;
    v.cone_betti = homology(c, range).betti;
    for (std::size_t k = 0; k < v.cone_betti.size(); ++k)
        if (v.cone_betti[k] != 0) {
            v.holds = false;
            v.failing_degree = range.lo + static_cast<int>(k);
            v.defect = v.cone_betti[k];
            break;
        }
    return v;
}

std::size_t induced_rank(const ChainMap& f, int n)
{
    const auto& y = f.target();
    const SparseMatrix boundaries = y.d(n + 1);
    const auto z = cycles(f.source(), n);
    const SparseMatrix images = f.at(n) * SparseMatrix(f.source().dim(n), z);
    return rank(hstack(boundaries, images)) - y.rank_d(n + 1);
}

} // namespace cyclex
