#include "cyclex/hochschild/cyclic.hpp"

#include "cyclex/core/error.hpp"
#include "cyclex/core/tensor_index.hpp"
#include "cyclex/hochschild/hochschild.hpp"

#include <map>

namespace cyclex {

std::size_t CyclicTotal::block_size(int n, int c) const { return ipow(dim_a, n - c + 1); }

namespace {

// Operators on A^{(x)p+1}, computed once per p.
struct Operators {
    explicit Operators(const Algebra& a) : alg(std::make_shared<const Algebra>(a)), reg(Bimodule::regular(alg)) {}

    const SparseMatrix& b(int p) { return get(b_, p, [&] { return hoch_b(reg, p); }); }
    const SparseMatrix& minus_bp(int p) { return get(bp_, p, [&] { return -b_prime(reg, p); }); }
    const SparseMatrix& one_minus_t(int p)
    {
        return get(omt_, p, [&] { return SparseMatrix::identity(ipow(alg->dim(), p + 1)) - cyclic_t(*alg, p); });
    }
    const SparseMatrix& norm(int p) { return get(n_, p, [&] { return cyclic_N(*alg, p); }); }

    AlgebraPtr alg;
    Bimodule reg;

private:
    template <class F>
    const SparseMatrix& get(std::map<int, SparseMatrix>& cache, int p, F make)
    {
        auto it = cache.find(p);
        if (it == cache.end())
            it = cache.emplace(p, make()).first;
        return it->second;
    }
    std::map<int, SparseMatrix> b_, bp_, omt_, n_;
};

CyclicTotal build_total(const Algebra& a, int degree_bound, int columns)
{
    if (degree_bound < 1)
        throw ConfigError("degree bound must be at least 1");
    CyclicTotal t;
    t.columns = columns;
    t.dim_a = a.dim();
    Operators ops(a);

    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> sizes;
    for (int n = 0; n < degree_bound; ++n) {
        std::vector<std::size_t> off, sz;
        std::size_t total = 0;
        for (int c = 0; c < t.column_count(n); ++c) {
            off.push_back(total);
            sz.push_back(t.block_size(n, c));
            total += sz.back();
        }
        t.offsets.push_back(std::move(off));
        sizes.push_back(std::move(sz));
        dims.push_back(total);
    }

    std::vector<SparseMatrix> diffs;
    for (int n = 1; n < degree_bound; ++n) {
        BlockMatrix m(sizes[static_cast<std::size_t>(n - 1)], sizes[static_cast<std::size_t>(n)]);
        const int below = t.column_count(n - 1);
        for (int c = 0; c < t.column_count(n); ++c) {
            const int p = n - c;
            if (p >= 1 && c < below)
                m.set(static_cast<std::size_t>(c), static_cast<std::size_t>(c), c % 2 ? ops.minus_bp(p) : ops.b(p));
            if (c >= 1)
                m.set(static_cast<std::size_t>(c - 1), static_cast<std::size_t>(c),
                      c % 2 ? ops.one_minus_t(p) : ops.norm(p));
        }
        diffs.push_back(m.assemble());
    }
    t.complex = std::make_shared<const ChainComplex>(0, std::move(dims), std::move(diffs));
    return t;
}

HomologyReport total_homology(const CyclicTotal& t, int degree_bound, bool reps)
{
    return homology(*t.complex, Interval{0, degree_bound - 2}, reps);
}

void require_bound(int degree_bound, int least)
{
    if (degree_bound < least)
        throw ConfigError("degree bound D must be at least " + std::to_string(least) + ", got " +
                          std::to_string(degree_bound));
}

// Rank of the image of `images` in H(c) at degree n: rank[B | images] - rank B.
std::size_t rank_mod_boundaries(const ChainComplex& c, int n, const std::vector<SparseVector>& images)
{
    const SparseMatrix boundaries = c.d(n + 1);
    const SparseMatrix im(c.dim(n), images);
    return rank(hstack(boundaries, im)) - c.rank_d(n + 1);
}

} // namespace

CyclicTotal hh_total(const Algebra& a, int degree_bound) { return build_total(a, degree_bound, 2); }

CyclicTotal hc_total(const Algebra& a, int degree_bound) { return build_total(a, degree_bound, 0); }

HomologyReport hh_homology(const Algebra& a, int degree_bound, bool representatives)
{
    require_bound(degree_bound, 2);
    return total_homology(hh_total(a, degree_bound), degree_bound, representatives);
}

HomologyReport hc_homology(const Algebra& a, int degree_bound, bool representatives)
{
    require_bound(degree_bound, 2);
    return total_homology(hc_total(a, degree_bound), degree_bound, representatives);
}

ChainMap total_map(const AlgebraMorphism& f, const CyclicTotal& source, const CyclicTotal& target)
{
    if (source.columns != target.columns)
        throw DegreeMismatch("total_map: column truncations differ");
    const int top = std::min(source.complex->hi(), target.complex->hi());
    std::vector<SparseMatrix> comps;
    std::vector<SparseMatrix> powers;
    for (int n = 0; n <= top; ++n) {
        while (static_cast<int>(powers.size()) <= n + 1)
            powers.push_back(kron_power(f.matrix(), static_cast<int>(powers.size())));
        std::vector<std::size_t> rows, cols;
        for (int c = 0; c < source.column_count(n); ++c) {
            rows.push_back(target.block_size(n, c));
            cols.push_back(source.block_size(n, c));
        }
        BlockMatrix m(rows, cols);
        for (int c = 0; c < source.column_count(n); ++c)
            m.set(static_cast<std::size_t>(c), static_cast<std::size_t>(c), powers[static_cast<std::size_t>(n - c + 1)]);
        comps.push_back(m.assemble());
    }
    return ChainMap(source.complex, target.complex, 0, std::move(comps));
}

ConnesReport connes_check(const Algebra& a, int degree_bound)
{
    require_bound(degree_bound, 3);
    const CyclicTotal hh = hh_total(a, degree_bound);
    const CyclicTotal hc = hc_total(a, degree_bound);
    const ChainComplex& H = *hh.complex;
    const ChainComplex& C = *hc.complex;
    const int top = degree_bound - 2;

    // i : HH -> HC is the inclusion of the first two columns.
    std::vector<SparseMatrix> inc;
    for (int n = 0; n <= H.hi(); ++n) {
        std::vector<SparseVector> cols;
        for (std::size_t k = 0; k < H.dim(n); ++k)
            cols.push_back(SparseVector::unit(k));
        inc.emplace_back(C.dim(n), std::move(cols));
    }
    const ChainMap i(hh.complex, hc.complex, 0, std::move(inc));

    // pi : HC_n -> HC_{n-2} sends block (c, p) to block (c-2, p).
    auto shifted = std::make_shared<const ChainComplex>(C.shifted(-2));
    auto pi_matrix = [&](int n) {
        std::vector<SparseVector> cols(C.dim(n));
        for (int c = 2; c < hc.column_count(n); ++c) {
            const std::size_t from = hc.offsets[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            const std::size_t to = hc.offsets[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(c - 2)];
            for (std::size_t k = 0; k < hc.block_size(n, c); ++k)
                cols[from + k] = SparseVector::unit(to + k);
        }
        return SparseMatrix(C.dim(n - 2), std::move(cols));
    };
    std::vector<SparseMatrix> pis;
    for (int n = 0; n <= C.hi(); ++n)
        pis.push_back(n < 2 ? SparseMatrix(0, C.dim(n)) : pi_matrix(n));
    const ChainMap pi(hc.complex, shifted, 0, std::move(pis));

    // delta : HC_{n-2} -> HH_{n-1}: lift a cycle two columns right, apply d_n.
    auto delta_rank = [&](int n) -> std::size_t {
        if (n < 2)
            return 0;
        const auto z = cycles(C, n - 2);
        std::vector<SparseVector> images;
        const SparseMatrix dn = C.d(n);
        const std::size_t hh_dim = H.dim(n - 1);
        for (const auto& v : z) {
            SparseVector lifted;
            for (const auto& e : v.entries()) {
                int c = 0;
                while (c + 1 < hc.column_count(n - 2) &&
                       hc.offsets[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(c + 1)] <= e.index)
                    ++c;
                const std::size_t local = e.index - hc.offsets[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(c)];
                lifted.push_back(hc.offsets[static_cast<std::size_t>(n)][static_cast<std::size_t>(c + 2)] + local, e.value);
            }
            const SparseVector image = dn.apply(lifted);
            SparseVector head;
            for (const auto& e : image.entries()) {
                if (e.index >= hh_dim)
                    throw Error("connes_check: lifted cycle leaves columns 0 and 1");
                head.push_back(e.index, e.value);
            }
            images.push_back(std::move(head));
        }
        return rank_mod_boundaries(H, n - 1, images);
    };

    const HomologyReport hh_r = homology(H, Interval{0, top});
    const HomologyReport hc_r = homology(C, Interval{0, top});

    ConnesReport report;
    report.checked = {0, top};
    for (int n = 0; n <= top; ++n) {
        ConnesDegree d;
        d.n = n;
        d.hh = hh_r.betti_at(n);
        d.hc = hc_r.betti_at(n);
        d.hc_shift = n >= 2 ? hc_r.betti_at(n - 2) : 0;
        d.rank_i = induced_rank(i, n);
        d.rank_pi = n >= 2 ? induced_rank(pi, n) : 0;
        d.rank_delta_in = delta_rank(n + 1);
        d.rank_delta_out = delta_rank(n);
        d.exact = d.hh == d.rank_i + d.rank_delta_in && d.hc == d.rank_i + d.rank_pi &&
                  d.hc_shift == d.rank_pi + d.rank_delta_out;
        if (!d.exact && report.exact) {
            report.exact = false;
            report.failing_degree = n;
        }
        report.degrees.push_back(d);
    }
    return report;
}

SparseMatrix lambda_projection(const Algebra& a, int n, std::vector<std::size_t>* representatives)
{
    const TensorIndex idx = TensorIndex::power(a.dim(), n + 1);
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    // For each tensor: (representative index, sign) or null when its class is 0.
    std::vector<long> rep(idx.size(), -1);
    std::vector<int> sign(idx.size(), 0);
    std::vector<std::size_t> reps;
    std::vector<std::size_t> x, y;
    for (std::size_t col = 0; col < idx.size(); ++col) {
        idx.decode(col, x);
        // rotations rot^j x = (x_{n-j+1}, ..., x_n, x_0, ...); [x] = (-1)^{nj} [rot^j x]
        std::size_t best = col;
        int best_j = 0;
        bool null = false;
        for (std::size_t j = 1; j < len; ++j) {
            y.resize(len);
            for (std::size_t k = 0; k < len; ++k)
                y[(k + j) % len] = x[k];
            const std::size_t r = idx.encode(y);
            if (r == col && (static_cast<std::size_t>(n) * j) % 2 == 1)
                null = true;
            if (r < best) {
                best = r;
                best_j = static_cast<int>(j);
            }
        }
        if (null)
            continue;
        rep[col] = static_cast<long>(best);
        sign[col] = (n * best_j) % 2 ? -1 : 1;
        if (best == col)
            reps.push_back(col);
    }
    std::vector<std::size_t> position(idx.size(), 0);
    for (std::size_t k = 0; k < reps.size(); ++k)
        position[reps[k]] = k;
    std::vector<SparseVector> cols(idx.size());
    for (std::size_t col = 0; col < idx.size(); ++col)
        if (rep[col] >= 0)
            cols[col] = SparseVector::unit(position[static_cast<std::size_t>(rep[col])], sign[col]);
    if (representatives)
        *representatives = reps;
    return SparseMatrix(reps.size(), std::move(cols));
}

LambdaComplex connes_lambda_complex(const Algebra& a, int degree_bound)
{
    if (degree_bound < 1)
        throw ConfigError("degree bound must be at least 1");
    LambdaComplex out;
    const Bimodule reg = Bimodule::regular(std::make_shared<const Algebra>(a));
    std::vector<std::size_t> dims;
    for (int n = 0; n <= degree_bound; ++n) {
        std::vector<std::size_t> reps;
        out.projection.push_back(lambda_projection(a, n, &reps));
        dims.push_back(reps.size());
        out.representatives.push_back(std::move(reps));
    }
    std::vector<SparseMatrix> diffs;
    for (int n = 1; n <= degree_bound; ++n) {
        const SparseMatrix lift = SparseMatrix(ipow(a.dim(), n + 1), [&] {
            std::vector<SparseVector> cols;
            for (auto r : out.representatives[static_cast<std::size_t>(n)])
                cols.push_back(SparseVector::unit(r));
            return cols;
        }());
        diffs.push_back(out.projection[static_cast<std::size_t>(n - 1)] * (hoch_b(reg, n) * lift));
    }
    out.complex = std::make_shared<const ChainComplex>(0, std::move(dims), std::move(diffs));
    return out;
}

} // namespace cyclex
