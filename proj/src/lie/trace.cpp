#include "cyclex/lie/trace.hpp"

#include "cyclex/core/error.hpp"
#include "cyclex/core/tensor_index.hpp"
#include "cyclex/hochschild/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace cyclex {

namespace {

struct MatrixUnit {
    std::size_t i, j, a;
};

MatrixUnit decode_gl(std::size_t index, std::size_t r, std::size_t da)
{
    const std::size_t a = index % da, ij = index / da;
    return {ij / r, ij % r, a};
}

int permutation_sign(const std::vector<std::size_t>& perm)
{
    std::vector<std::size_t> copy = perm;
    return sort_sign(copy);
}

} // namespace

SparseMatrix generalized_trace(const Algebra& a, std::size_t r, int n)
{
    if (n < 0)
        throw ConfigError("generalized_trace: n must be non-negative");
    const std::size_t da = a.dim(), un = static_cast<std::size_t>(n);
    const ExteriorBasis src(r * r * da, un + 1);
    const SparseMatrix proj = lambda_projection(a, n);
    const TensorIndex tensors = TensorIndex::power(da, n + 1);

    const SparseMatrix words = assemble_columns(tensors.size(), src.size(), [&](std::size_t col) {
        const auto t = src.tuple(col);
        std::vector<MatrixUnit> x;
        for (std::size_t k : t)
            x.push_back(decode_gl(k, r, da));
        std::vector<std::size_t> perm(un);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<SparseEntry> acc;
        std::vector<std::size_t> digits(un + 1);
        do {
            // tr(E_{i0 j0} E_{i1 j1} ... ) = 1 iff the indices chain and close up.
            std::size_t row = x[0].j;
            bool closes = true;
            for (std::size_t k : perm) {
                if (x[k].i != row) {
                    closes = false;
                    break;
                }
                row = x[k].j;
            }
            if (!closes || row != x[0].i)
                continue;
            digits[0] = x[0].a;
            for (std::size_t k = 0; k < un; ++k)
                digits[k + 1] = x[perm[k]].a;
            acc.push_back({tensors.encode(digits), Rational(permutation_sign(perm))});
        } while (std::next_permutation(perm.begin(), perm.end()));
        return SparseVector::from_unsorted(std::move(acc));
    });
    return proj * words;
}

std::vector<TraceChainCheck> trace_chain_check(const Algebra& a, std::size_t r, int top)
{
    const LambdaComplex lambda = connes_lambda_complex(a, std::max(top, 1));
    const LieAlgebra g = gl(a, r);
    std::vector<TraceChainCheck> out;
    SparseMatrix lower = generalized_trace(a, r, 0);
    for (int n = 1; n <= top; ++n) {
        const SparseMatrix upper = generalized_trace(a, r, n);
        const SparseMatrix lhs = lower * ce_differential(g, n + 1);
        const SparseMatrix rhs = lambda.complex->d(n) * upper;
        TraceChainCheck c;
        c.n = n;
        c.vacuous = lhs.is_zero() && rhs.is_zero();
        if (lhs == rhs)
            c.sign = 1;
        else if (lhs == -rhs)
            c.sign = -1;
        c.holds = c.sign != 0;
        out.push_back(c);
        lower = upper;
    }
    return out;
}

std::vector<std::size_t> free_graded_commutative_betti(const std::vector<std::size_t>& generators, int top)
{
    const auto len = static_cast<std::size_t>(top) + 1;
    std::vector<std::size_t> series(len, 0);
    series[0] = 1;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const std::size_t deg = k + 1;
        for (std::size_t copy = 0; copy < generators[k]; ++copy) {
            if (deg % 2) {
                // times (1 + x^deg)
                for (std::size_t m = len; m-- > deg;)
                    series[m] += series[m - deg];
            } else {
                // times 1 / (1 - x^deg)
                for (std::size_t m = deg; m < len; ++m)
                    series[m] += series[m - deg];
            }
        }
    }
    return series;
}

LQTReport lqt_verify(const Algebra& a, std::size_t r, int degree_bound, std::size_t size_limit)
{
    if (!a.is_unital())
        throw UnitError("lqt: " + a.name() + " is not unital");
    if (degree_bound < 1)
        throw ConfigError("lqt: degree bound D must be at least 1, got " + std::to_string(degree_bound));
    LQTReport rep;
    rep.r = r;
    rep.top = degree_bound;
    rep.stable_range = r >= static_cast<std::size_t>(degree_bound);
    const auto ce = ce_homology(gl(a, r), degree_bound + 1, {false, size_limit});
    for (int n = 0; n <= degree_bound; ++n)
        rep.ce_betti.push_back(ce.betti_at(n));
    rep.hc_betti = hc_homology(a, degree_bound + 1).betti;
    rep.sym_betti = free_graded_commutative_betti(rep.hc_betti, degree_bound);
    rep.match = rep.ce_betti == rep.sym_betti;
    for (std::size_t n = 0; n < rep.ce_betti.size() && !rep.first_mismatch; ++n)
        if (rep.ce_betti[n] != rep.sym_betti[n])
            rep.first_mismatch = static_cast<int>(n);
    return rep;
}

H2Report h2_vs_hc1(const Algebra& a, std::size_t r, std::size_t size_limit)
{
    H2Report rep;
    rep.r = r;
    const LieAlgebra g = gl(a, r);
    rep.h2_gl = ce_homology(g, 3, {false, size_limit}).betti_at(2);
    rep.h2_derived = ce_homology(derived_subalgebra(g), 3, {false, size_limit}).betti_at(2);
    const auto hc = hc_homology(a, 3);
    rep.hc0 = hc.betti_at(0);
    rep.hc1 = hc.betti_at(1);
    rep.equal = rep.h2_gl == rep.hc1;
    rep.sym_prediction = binomial(rep.hc0, 2) + rep.hc1;
    return rep;
}

} // namespace cyclex
