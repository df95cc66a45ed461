#include "cyclex/excision/excision.hpp"

#include "cyclex/core/error.hpp"
#include "cyclex/core/tensor_index.hpp"
#include "cyclex/hochschild/hochschild.hpp"

#include <algorithm>

namespace cyclex {

namespace {

void require_bound(int degree_bound)
{
    if (degree_bound < 2)
        throw ConfigError("degree bound D must be at least 2, got " + std::to_string(degree_bound));
}

HUnitalVerdict acyclicity(const ChainComplex& c, int degree_bound)
{
    HUnitalVerdict v;
    v.certified = {0, degree_bound - 1};
    v.betti = homology(c, v.certified).betti;
    for (std::size_t k = 0; k < v.betti.size(); ++k)
        if (v.betti[k] != 0) {
            v.pass = false;
            v.failing_degree = static_cast<int>(k);
            break;
        }
    return v;
}

// S : A -> I reading ideal coordinates off the pivots (the basis is reduced echelon).
SparseMatrix pivot_selector(const Ideal& ideal)
{
    std::vector<SparseVector> cols(ideal.ambient().dim());
    const auto& piv = ideal.subspace().pivots();
    for (std::size_t k = 0; k < piv.size(); ++k)
        cols[piv[k]] = SparseVector::unit(k);
    return SparseMatrix(ideal.dim(), std::move(cols));
}

std::vector<std::size_t> non_pivots(const Ideal& ideal)
{
    std::vector<bool> is_pivot(ideal.ambient().dim(), false);
    for (auto p : ideal.subspace().pivots())
        is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < is_pivot.size(); ++k)
        if (!is_pivot[k])
            out.push_back(k);
    return out;
}

SparseMatrix kron3(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c)
{
    return kronecker(kronecker(a, b), c);
}

SparseMatrix eye(std::size_t n) { return SparseMatrix::identity(n); }

} // namespace

const char* to_string(FiltrationKind k)
{
    switch (k) {
    case FiltrationKind::FBar: return "F-of-Bar";
    case FiltrationKind::FHoch: return "F-of-Hoch";
    case FiltrationKind::QBar: return "Q-of-Bar";
    case FiltrationKind::QHoch: return "Q-of-Hoch";
    }
    return "?";
}

HUnitalVerdict h_unitality_check(const AlgebraPtr& a, int degree_bound)
{
    return h_unitary_check(Bimodule::regular(a), degree_bound);
}

HUnitalVerdict h_unitary_check(const Bimodule& m, int degree_bound)
{
    require_bound(degree_bound);
    return acyclicity(*bar_complex(m, degree_bound), degree_bound);
}

FiltrationStage filtration_F(const Extension& ext, const Bimodule& m, int n, int degree_bound, bool hoch)
{
    if (n < 0)
        throw ConfigError("filtration level must be non-negative");
    if (m.algebra().dim() != ext.ambient().dim())
        throw MorphismError("filtration_F: bimodule is not over the ambient algebra");
    const std::size_t da = ext.ambient().dim(), di = ext.ideal().dim(), dm = m.dim();
    const SparseMatrix iota = ext.ideal().basis_matrix();
    const SparseMatrix select = pivot_selector(ext.ideal());

    FiltrationStage st;
    st.n = n;
    st.kind = hoch ? FiltrationKind::FHoch : FiltrationKind::FBar;
    st.ambient = hoch ? hoch_complex(m, degree_bound) : bar_complex(m, degree_bound);

    std::vector<SparseMatrix> restrict_to;
    std::vector<std::size_t> dims;
    for (int p = 0; p <= degree_bound; ++p) {
        const int full = std::min(n, p), tail = std::max(p - n, 0);
        const SparseMatrix head = eye(dm * ipow(da, full));
        st.structure_map.push_back(kronecker(head, kron_power(iota, tail)));
        restrict_to.push_back(kronecker(head, kron_power(select, tail)));
        dims.push_back(dm * ipow(da, full) * ipow(di, tail));
    }
    std::vector<SparseMatrix> diffs;
    for (int p = 1; p <= degree_bound; ++p) {
        const auto up = static_cast<std::size_t>(p);
        const SparseMatrix image = st.ambient->d(p) * st.structure_map[up];
        SparseMatrix d = restrict_to[up - 1] * image;
        if (st.structure_map[up - 1] * d != image)
            throw Error("filtration_F: stage " + std::to_string(n) + " is not a subcomplex in degree " +
                        std::to_string(p));
        diffs.push_back(std::move(d));
    }
    st.complex = std::make_shared<const ChainComplex>(0, std::move(dims), std::move(diffs));
    return st;
}

FiltrationStage filtration_Q(const Extension& ext, int n, int degree_bound, bool hoch)
{
    if (n < 0)
        throw ConfigError("filtration level must be non-negative");
    const std::size_t da = ext.ambient().dim(), db = ext.quotient().dim();
    const Bimodule bm = Bimodule::restricted(ext.projection());
    const SparseMatrix& f = ext.projection().matrix();

    FiltrationStage st;
    st.n = n;
    st.kind = hoch ? FiltrationKind::QHoch : FiltrationKind::QBar;
    st.ambient = hoch ? hoch_complex(bm, degree_bound) : bar_complex(bm, degree_bound);

    std::vector<SparseMatrix> lift;
    std::vector<std::size_t> dims;
    for (int p = 0; p <= degree_bound; ++p) {
        const int reduced = std::min(n, p), tail = std::max(p - n, 0);
        const SparseMatrix rest = eye(ipow(da, tail));
        st.structure_map.push_back(kron3(eye(db), kron_power(f, reduced), rest));
        lift.push_back(kron3(eye(db), kron_power(ext.section(), reduced), rest));
        dims.push_back(db * ipow(db, reduced) * ipow(da, tail));
    }
    std::vector<SparseMatrix> diffs;
    for (int p = 1; p <= degree_bound; ++p) {
        const auto up = static_cast<std::size_t>(p);
        const SparseMatrix pd = st.structure_map[up - 1] * st.ambient->d(p);
        SparseMatrix d = pd * lift[up];
        if (d * st.structure_map[up] != pd)
            throw Error("filtration_Q: stage " + std::to_string(n) + " is not a quotient complex in degree " +
                        std::to_string(p));
        diffs.push_back(std::move(d));
    }
    st.complex = std::make_shared<const ChainComplex>(0, std::move(dims), std::move(diffs));
    return st;
}

std::vector<std::size_t> filtration_Q_kernel_dims(const Extension& ext, int n, int degree_bound)
{
    const std::size_t da = ext.ambient().dim(), db = ext.quotient().dim();
    std::vector<std::size_t> out;
    for (int p = 0; p <= degree_bound; ++p) {
        if (p <= n) {
            out.push_back(0);
            continue;
        }
        const SparseMatrix t =
            kron3(eye(ipow(db, n + 1)), ext.projection().matrix(), eye(ipow(da, p - n - 1)));
        out.push_back(t.cols() - rank(t));
    }
    return out;
}

GradedPieceVerdict graded_piece_F_check(const Extension& ext, const Bimodule& m, int n, int degree_bound, bool hoch)
{
    GradedPieceVerdict v;
    if (n + 1 > degree_bound) {
        v.checked = {n + 1, degree_bound};
        return v;
    }
    const Algebra& a = ext.ambient();
    const std::size_t da = a.dim(), di = ext.ideal().dim(), db = ext.quotient().dim(), dm = m.dim();
    const FiltrationStage upper = filtration_F(ext, m, n + 1, degree_bound, hoch);

    // A -> A/I in the classes of the non-pivot basis vectors, and back.
    const auto comp = non_pivots(ext.ideal());
    const SparseMatrix reduce = eye(da) - ext.ideal().basis_matrix() * pivot_selector(ext.ideal());
    std::vector<SparseVector> c_cols, l_cols;
    for (std::size_t x = 0; x < da; ++x) {
        SparseVector col;
        for (const auto& e : reduce.column(x).entries()) {
            const auto it = std::lower_bound(comp.begin(), comp.end(), e.index);
            col.push_back(static_cast<std::size_t>(it - comp.begin()), e.value);
        }
        c_cols.push_back(std::move(col));
    }
    for (auto k : comp)
        l_cols.push_back(SparseVector::unit(k));
    const SparseMatrix to_class(comp.size(), std::move(c_cols));
    const SparseMatrix from_class(da, std::move(l_cols));

    auto qdim = [&](int p) { return dm * ipow(da, n) * comp.size() * ipow(di, p - n - 1); };
    auto around = [&](const SparseMatrix& mid, int p) {
        return kron3(eye(dm * ipow(da, n)), mid, eye(ipow(di, p - n - 1)));
    };

    // Model differential on I^q (x) M.
    const Bimodule mi = Bimodule::pullback(m, ext.ideal_inclusion());
    const Algebra& ia = *ext.ideal_algebra();
    auto delta = [&](int q) {
        const TensorIndex src = TensorIndex(std::vector<std::size_t>(static_cast<std::size_t>(q), di)),
                          dst = TensorIndex(std::vector<std::size_t>(static_cast<std::size_t>(q - 1), di));
        return assemble_columns(dst.size() * dm, src.size() * dm, [&](std::size_t col) {
            std::vector<std::size_t> x, y;
            src.decode(col / dm, x);
            const std::size_t mm = col % dm;
            std::vector<SparseEntry> terms;
            const Rational outer = hoch ? 1 : -1;
            for (int j = 1; j < q; ++j) {
                y = x;
                y.erase(y.begin() + j);
                const Rational sign = outer * (j % 2 ? -1 : 1);
                for (const auto& e : ia.product(x[static_cast<std::size_t>(j - 1)], x[static_cast<std::size_t>(j)]).entries()) {
                    y[static_cast<std::size_t>(j - 1)] = e.index;
                    terms.push_back({dst.encode(y) * dm + mm, sign * e.value});
                }
            }
            if (hoch) {
                y.assign(x.begin(), x.end() - 1);
                const Rational sign = q % 2 ? -1 : 1;
                for (const auto& e : mi.left().column(x.back() * dm + mm).entries())
                    terms.push_back({dst.encode(y) * dm + e.index, sign * e.value});
            }
            return SparseVector::from_unsorted(std::move(terms));
        });
    };

    // phi_p: (m, a_1..a_n, k, i_1..i_q) -> (a_1..a_n, f(e_k), i_1..i_q, m) without sign.
    auto phi = [&](int p) {
        const int q = p - n - 1;
        const TensorIndex src = TensorIndex(std::vector<std::size_t>{dm, ipow(da, n), comp.size(), ipow(di, q)});
        const TensorIndex dst = TensorIndex(std::vector<std::size_t>{ipow(da, n), db, ipow(di, q), dm});
        return assemble_columns(dst.size(), src.size(), [&](std::size_t col) {
            std::vector<std::size_t> x;
            src.decode(col, x);
            SparseVector out;
            for (const auto& e : ext.projection().matrix().column(comp[x[2]]).entries())
                out.push_back(dst.encode({x[1], e.index, x[3], x[0]}), e.value);
            return out;
        });
    };

    v.checked = {n + 1, degree_bound};
    std::vector<std::size_t> qdims, gdims;
    std::vector<SparseMatrix> qdiffs, gdiffs;
    int sign = 1;
    SparseMatrix phi_prev = phi(n + 1);
    if (rank(phi_prev) != qdim(n + 1) || qdim(n + 1) != ipow(da, n) * db * dm)
        throw Error("graded_piece_F_check: identification is not invertible");
    v.signs.push_back(sign);
    qdims.push_back(qdim(n + 1));
    gdims.push_back(qdim(n + 1));
    for (int p = n + 2; p <= degree_bound; ++p) {
        const SparseMatrix dF = upper.complex->d(p);
        const SparseMatrix dq = around(to_class, p - 1) * dF * around(from_class, p);
        if (dq * around(to_class, p) != around(to_class, p - 1) * dF)
            throw Error("graded_piece_F_check: F^n is not a subcomplex of F^{n+1}");
        const SparseMatrix dg = kronecker(eye(ipow(da, n) * db), delta(p - n - 1));
        const SparseMatrix phi_p = phi(p);
        const SparseMatrix lhs = phi_prev * dq, rhs = dg * phi_p;
        if (lhs == rhs) {
        } else if (lhs == -rhs) {
            sign = -sign;
        } else {
            v.pass = false;
            v.failing_degree = p;
            break;
        }
        v.signs.push_back(sign);
        qdims.push_back(qdim(p));
        gdims.push_back(dg.cols());
        qdiffs.push_back(dq);
        gdiffs.push_back(dg);
        phi_prev = phi_p;
    }
    // Both sides are complexes (d^2 = 0 checked on construction).
    ChainComplex(n + 1, qdims, std::move(qdiffs));
    ChainComplex(n + 1, gdims, std::move(gdiffs));
    v.dims = qdims;
    return v;
}

CorollaryReport corollary_hiha(const Extension& ext, const Bimodule& m, int degree_bound)
{
    require_bound(degree_bound);
    CorollaryReport r;
    r.name = "HIHA";
    const Bimodule mi = Bimodule::pullback(m, ext.ideal_inclusion());
    r.hypothesis = h_unitary_check(mi, degree_bound).pass;
    const bool bar_acyclic = acyclicity(*bar_complex(m, degree_bound), degree_bound).pass;
    const FiltrationStage f0 = filtration_F(ext, m, 0, degree_bound, true);
    const ChainMap inc(f0.complex, f0.ambient, 0, f0.structure_map);
    const auto q = is_quasi_iso(inc, {0, degree_bound - 1});
    r.conclusion = bar_acyclic && q.holds;
    r.detail = std::string("Bar(A,M) ") + (bar_acyclic ? "acyclic" : "not acyclic") + " on [0," +
               std::to_string(degree_bound - 1) + "]; Hoch(I,M) -> Hoch(A,M) " +
               (q.holds ? "quasi-iso" : "fails at cone degree " + std::to_string(*q.failing_degree));
    return r;
}

CorollaryReport corollary_bmod_hunital(const Extension& ext, int degree_bound)
{
    require_bound(degree_bound);
    CorollaryReport r;
    r.name = "BmodHunital";
    r.hypothesis = h_unitality_check(ext.ideal_algebra(), degree_bound).pass;
    const Bimodule ni = Bimodule::module_tensor_ideal(ext.projection(), ext.ideal());
    const auto v = acyclicity(*hoch_complex(ni, degree_bound), degree_bound);
    r.conclusion = v.pass;
    r.detail = v.pass ? "Hoch(A, B(x)I) acyclic" : "Hoch(A, B(x)I) has homology in degree " + std::to_string(*v.failing_degree);
    return r;
}

CorollaryReport corollary_hahb(const Extension& ext, int degree_bound)
{
    require_bound(degree_bound);
    CorollaryReport r;
    r.name = "HAHB";
    r.hypothesis = h_unitality_check(ext.ideal_algebra(), degree_bound).pass;
    const Bimodule bb = Bimodule::regular(ext.quotient_ptr());
    r.conclusion = true;
    for (bool hoch : {false, true}) {
        const FiltrationStage top = filtration_Q(ext, degree_bound, degree_bound, hoch);
        const ComplexPtr target = hoch ? hoch_complex(bb, degree_bound) : bar_complex(bb, degree_bound);
        const ChainMap proj(top.ambient, target, 0, top.structure_map);
        const auto q = is_quasi_iso(proj, {0, degree_bound - 1});
        r.conclusion = r.conclusion && q.holds;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + (hoch ? "Hoch" : "Bar") + "(A,B) -> " +
                    (hoch ? "Hoch" : "Bar") + "(B) " +
                    (q.holds ? "quasi-iso" : "fails at cone degree " + std::to_string(*q.failing_degree));
    }
    return r;
}

} // namespace cyclex
