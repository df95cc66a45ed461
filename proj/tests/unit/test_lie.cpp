#include "../oracle/ce_oracle.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"
#include "cyclex/hochschild/cyclic.hpp"
#include "cyclex/lie/trace.hpp"

#include <gtest/gtest.h>

using namespace cyclex;

namespace {

LieAlgebra sl2() { return derived_subalgebra(gl(*preset("Q"), 2)); }

std::vector<std::size_t> head(const HomologyReport& h, int top)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= top; ++n)
        out.push_back(h.betti_at(n));
    return out;
}

} // namespace

TEST(Exterior, RankAndTupleAreInverse)
{
    const ExteriorBasis b(7, 3);
    EXPECT_EQ(b.size(), 35u);
    std::vector<std::size_t> prev;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const auto t = b.tuple(k);
        EXPECT_EQ(b.rank(t), k);
        EXPECT_LT(prev, t);
        prev = t;
    }
}

TEST(Exterior, SortSign)
{
    std::vector<std::size_t> v{3, 1, 2};
    EXPECT_EQ(sort_sign(v), 1);
    EXPECT_EQ(v, (std::vector<std::size_t>{1, 2, 3}));
    v = {2, 1};
    EXPECT_EQ(sort_sign(v), -1);
    v = {2, 5, 2};
    EXPECT_EQ(sort_sign(v), 0);
}

TEST(CE, AbelianGivesBinomials)
{
    const LieAlgebra g = lie_from_assoc(*preset("truncated_poly(5)"));
    const auto h = ce_homology(g, 5);
    for (int p = 0; p <= 5; ++p)
        EXPECT_EQ(h.betti_at(p), binomial(5, static_cast<std::size_t>(p)));
}

TEST(CE, LowDegreeDifferential)
{
    const LieAlgebra g = gl(*preset("Q"), 2);
    EXPECT_TRUE(ce_differential(g, 1).is_zero());
    // d(x ^ y) = -[x, y] with the i<j sign convention.
    const SparseMatrix d2 = ce_differential(g, 2);
    const ExteriorBasis b2(4, 2);
    const std::size_t e12 = 1, e21 = 2;
    const SparseVector image = d2.column(b2.rank({e12, e21}));
    EXPECT_EQ(image, g.bracket(e12, e21).scaled(-1));
}

TEST(CE, Sl2)
{
    const LieAlgebra g = sl2();
    ASSERT_EQ(g.dim(), 3u);
    EXPECT_EQ(ce_homology(g, 3).betti, (std::vector<std::size_t>{1, 0, 0, 1}));
    EXPECT_EQ(oracle::ce_betti(g, 3), (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(CE, AgreesWithBitmaskOracle)
{
    for (const LieAlgebra& g : {gl(*preset("Q"), 3), gl(*preset("dual_numbers"), 2),
                                lie_from_assoc(*preset("upper_triangular(3)"))}) {
        const auto h = ce_homology(g, 5);
        EXPECT_EQ(head(h, 4), oracle::ce_betti(g, 4)) << g.name();
    }
}

TEST(CE, Gl4)
{
    // Frozen from the Sym model of HC(Q), computed independently in LQT.Gl4.
    EXPECT_EQ(head(ce_homology(gl(*preset("Q"), 4), 5), 4), (std::vector<std::size_t>{1, 1, 0, 1, 1}));
}

TEST(CE, MoritaGl2OfM2MatchesGl4)
{
    const auto a = ce_homology(gl(*preset("matrix(2)"), 2), 4);
    const auto b = ce_homology(gl(*preset("Q"), 4), 4);
    EXPECT_EQ(head(a, 3), head(b, 3));
}

TEST(CE, ReducedDropsDegreeZero)
{
    CEOptions o;
    o.reduced = true;
    const auto h = ce_homology(sl2(), 3, o);
    EXPECT_EQ(h.range.lo, 1);
    EXPECT_EQ(h.betti, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(CE, SizeLimitAndBounds)
{
    CEOptions o;
    o.size_limit = 100;
    EXPECT_THROW(ce_complex(gl(*preset("Q"), 4), 3, o), SizeLimit);
    EXPECT_THROW(ce_complex(sl2(), 0), ConfigError);
    // D >= dim g: the complex is known to stop, so degree D is certified.
    EXPECT_EQ(ce_complex(sl2(), 3)->certified(), (Interval{0, 3}));
}

TEST(Trace, DegreeZero)
{
    const auto a = preset("dual_numbers");
    const SparseMatrix tr = generalized_trace(*a, 2, 0);
    ASSERT_EQ(tr.rows(), 2u);
    // basis (i*r + j)*dA + a
    EXPECT_EQ(tr.column(0), SparseVector::unit(0));
    EXPECT_EQ(tr.column(1), SparseVector::unit(1));
    EXPECT_TRUE(tr.column(2).empty());
    EXPECT_EQ(tr.column(7), SparseVector::unit(1));
    EXPECT_EQ(generalized_trace(*preset("Q"), 1, 0), SparseMatrix::identity(1));
}

TEST(Trace, ChainMapIdentity)
{
    for (const char* name : {"Q", "dual_numbers", "truncated_poly(3)"})
        for (const auto& c : trace_chain_check(*preset(name), 2, 3))
            EXPECT_TRUE(c.holds) << name << " n=" << c.n;
    const auto dual = trace_chain_check(*preset("dual_numbers"), 2, 3);
    EXPECT_TRUE(dual[0].vacuous);
    EXPECT_EQ(dual[1].sign, -1);
    EXPECT_EQ(dual[2].sign, -1);
}

TEST(Trace, CyclesMapToCycles)
{
    const auto a = preset("dual_numbers");
    const LieAlgebra g = gl(*a, 2);
    const auto h = homology(*ce_complex(g, 4), Interval{0, 3}, true);
    const auto lambda = connes_lambda_complex(*a, 3);
    for (int n = 2; n <= 3; ++n) {
        const SparseMatrix tr = generalized_trace(*a, 2, n - 1);
        for (const auto& z : h.representatives[static_cast<std::size_t>(n)])
            EXPECT_TRUE(lambda.complex->d(n - 1).apply(tr.apply(z)).empty());
    }
}

TEST(LQT, SymSeries)
{
    EXPECT_EQ(free_graded_commutative_betti({1, 0, 1, 0, 1}, 4), (std::vector<std::size_t>{1, 1, 0, 1, 1}));
    // one even generator in degree 2: polynomial
    EXPECT_EQ(free_graded_commutative_betti({0, 1}, 6), (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1}));
    // two odd generators in degree 1: exterior
    EXPECT_EQ(free_graded_commutative_betti({2}, 3), (std::vector<std::size_t>{1, 2, 1, 0}));
}

TEST(LQT, Gl4)
{
    const auto rep = lqt_verify(*preset("Q"), 4, 4);
    EXPECT_TRUE(rep.stable_range);
    EXPECT_EQ(rep.hc_betti, (std::vector<std::size_t>{1, 0, 1, 0}));
    EXPECT_EQ(rep.sym_betti, (std::vector<std::size_t>{1, 1, 0, 1, 1}));
    EXPECT_TRUE(rep.match);
}

TEST(LQT, OutsideStableRangeIsReported)
{
    const auto rep = lqt_verify(*preset("Q"), 2, 4);
    EXPECT_FALSE(rep.stable_range);
    EXPECT_EQ(rep.ce_betti.size(), 5u);
}

TEST(LQT, MoritaMatrixAlgebra)
{
    const auto rep = lqt_verify(*preset("matrix(2)"), 2, 3);
    EXPECT_TRUE(rep.match);
}

TEST(LQT, RequiresUnit)
{
    EXPECT_THROW(lqt_verify(*preset("zero_mult(1)"), 2, 2), UnitError);
}

TEST(H2, GroundField)
{
    const auto rep = h2_vs_hc1(*preset("Q"), 4);
    EXPECT_EQ(rep.h2_gl, 0u);
    EXPECT_EQ(rep.hc1, 0u);
    EXPECT_TRUE(rep.equal);
}

TEST(H2, DualNumbersSeeLambdaTwoOfHC0)
{
    // H_2(gl_r(A)) = Lambda^2 HC_0 (+) HC_1 in the stable range; the first
    // summand is 1-dimensional for A = Q[e].
    for (std::size_t r : {3u, 4u}) {
        const auto rep = h2_vs_hc1(*preset("dual_numbers"), r);
        EXPECT_EQ(rep.hc0, 2u);
        EXPECT_EQ(rep.hc1, 0u);
        EXPECT_EQ(rep.h2_gl, rep.sym_prediction);
        EXPECT_EQ(rep.h2_gl, 1u);
        EXPECT_EQ(rep.h2_derived, rep.hc1);
    }
}

TEST(H2, ProductIsAdditiveOnHC1)
{
    const auto q = h2_vs_hc1(*preset("Q"), 3);
    const auto qq = h2_vs_hc1(*preset("product(Q, Q)"), 3);
    EXPECT_EQ(qq.hc1, 2 * q.hc1);
    EXPECT_EQ(qq.hc0, 2 * q.hc0);
    EXPECT_EQ(qq.h2_gl, qq.sym_prediction);
}
