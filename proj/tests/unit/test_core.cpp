#include "cyclex/core/chain_complex.hpp"
#include "cyclex/core/elimination.hpp"
#include "cyclex/core/error.hpp"

#include "../oracle/dense_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cyclex;

namespace {

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double fill)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    std::vector<SparseVector> columns;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<SparseEntry> e;
        for (std::size_t i = 0; i < rows; ++i)
            if (u(rng) < fill) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                e.push_back({i, q});
            }
        columns.push_back(SparseVector::from_unsorted(std::move(e)));
    }
    return SparseMatrix(rows, std::move(columns));
}

// Low-rank product so that random tests exercise rank deficiency.
SparseMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner)
{
    return random_sparse(rng, rows, inner, 0.2) * random_sparse(rng, inner, cols, 0.2);
}

oracle::Dense to_oracle(const SparseMatrix& m)
{
    auto d = oracle::zeros(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j).entries())
            d[e.index][j] = e.value;
    return d;
}

ComplexPtr make(int lo, std::vector<std::size_t> dims, std::vector<SparseMatrix> d, bool bounded = true)
{
    return std::make_shared<ChainComplex>(lo, std::move(dims), std::move(d), bounded);
}

} // namespace

TEST(Rational, ParsesCanonicalForms)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(RankKernel, IdentityAndZero)
{
    auto id = rank_kernel(SparseMatrix::identity(3));
    EXPECT_EQ(id.rank, 3u);
    EXPECT_TRUE(id.kernel.empty());
    auto z = rank_kernel(SparseMatrix::zero(4, 4));
    EXPECT_EQ(z.rank, 0u);
    EXPECT_EQ(z.kernel.size(), 4u);
}

TEST(RankKernel, MatchesDenseOracleOnRandomMatrices)
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 5 + rng() % 76, cols = 5 + rng() % 76;
        const SparseMatrix m = trial % 2 ? random_sparse(rng, rows, cols, 0.05)
                                         : random_low_rank(rng, rows, cols, 1 + rng() % 20);
        const std::size_t expected = oracle::dense_rank(to_oracle(m));
        EXPECT_EQ(rank(m), expected);
        EXPECT_EQ(rank_serial(m), expected);
        const auto rk = rank_kernel(m);
        EXPECT_EQ(rk.rank, expected);
        ASSERT_EQ(rk.rank + rk.kernel.size(), cols);
        for (const auto& v : rk.kernel)
            EXPECT_TRUE(m.apply(v).empty());
        EXPECT_EQ(rank(SparseMatrix(cols, rk.kernel)), rk.kernel.size());
    }
}

TEST(RankKernel, Sixty_by_eighty_five_percent_fill)
{
    std::mt19937_64 rng(7);
    const SparseMatrix m = random_sparse(rng, 60, 80, 0.05);
    EXPECT_EQ(rank(m), oracle::dense_rank(to_oracle(m)));
}

TEST(Subspace, ReduceContainsCoordinates)
{
    Subspace s(4);
    EXPECT_TRUE(s.add(SparseVector::from_dense({1, 2, 0, 0})));
    EXPECT_TRUE(s.add(SparseVector::from_dense({0, 1, 1, 0})));
    EXPECT_FALSE(s.add(SparseVector::from_dense({1, 3, 1, 0})));
    const auto v = SparseVector::from_dense({2, 5, 1, 0});
    EXPECT_TRUE(s.contains(v));
    EXPECT_FALSE(s.contains(SparseVector::unit(3)));
    const auto c = s.coordinates(v);
    SparseVector back;
    for (const auto& e : c.entries())
        back.axpy(e.value, s.basis()[e.index]);
    EXPECT_EQ(back, v);
}

TEST(Solve, ConsistentAndInconsistent)
{
    const auto m = SparseMatrix::from_dense({{1, 1}, {0, 1}, {1, 2}});
    const auto x = solve(m, SparseVector::from_dense({3, 1, 4}));
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), SparseVector::from_dense({3, 1, 4}));
    EXPECT_FALSE(solve(m, SparseVector::from_dense({1, 0, 0})));
}

TEST(Homology, AcyclicAndZeroDifferentials)
{
    const auto acyclic = make(0, {1, 1}, {SparseMatrix::identity(1)});
    EXPECT_EQ(homology(*acyclic).betti, (std::vector<std::size_t>{0, 0}));

    const auto zero = make(0, {2, 3, 1}, {SparseMatrix(2, 3), SparseMatrix(3, 1)});
    EXPECT_EQ(homology(*zero).betti, (std::vector<std::size_t>{2, 3, 1}));
    EXPECT_EQ(homology(*zero).euler_characteristic(), zero->euler_characteristic());
}

TEST(Homology, RangeBeyondMaterializationThrows)
{
    const ChainComplex c(0, {1, 1, 1}, {SparseMatrix(1, 1), SparseMatrix(1, 1)}, false);
    EXPECT_EQ(c.certified(), (Interval{0, 1}));
    EXPECT_THROW(homology(c, Interval{0, 2}), RangeNotCertified);
}

TEST(Homology, BadDifferentialRejected)
{
    EXPECT_THROW(ChainComplex(0, {1, 1, 1}, {SparseMatrix::identity(1), SparseMatrix::identity(1)}), Error);
}

TEST(Homology, RepresentativesAreIndependentCycles)
{
    // C_1 = Q^2 -> C_0 = Q, d = (1 1): H_0 = 0, H_1 = 1.
    const auto c = make(0, {1, 2}, {SparseMatrix::from_dense({{1, 1}})});
    const auto h = homology(*c, true);
    EXPECT_EQ(h.betti, (std::vector<std::size_t>{0, 1}));
    ASSERT_EQ(h.representatives[1].size(), 1u);
    EXPECT_TRUE(c->d(1).apply(h.representatives[1][0]).empty());
}

TEST(Cone, ZeroMapIsShiftedSum)
{
    const auto x = make(0, {2, 1}, {SparseMatrix(2, 1)});
    const auto y = make(0, {1}, {});
    const ChainMap f(x, y, 0, {SparseMatrix(1, 2)});
    const auto h = homology(cone(f));
    EXPECT_EQ(h.betti, (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Cone, IdentityIsAcyclic)
{
    const auto x = make(0, {2, 3, 1}, {SparseMatrix::from_dense({{1, 0, 0}, {0, 0, 0}}), SparseMatrix(3, 1)});
    const ChainMap id(x, x, 0, {SparseMatrix::identity(2), SparseMatrix::identity(3), SparseMatrix::identity(1)});
    for (auto b : homology(cone(id)).betti)
        EXPECT_EQ(b, 0u);
    EXPECT_TRUE(is_quasi_iso(id, Interval{0, 2}).holds);
}

TEST(Cone, InclusionIntoQ2)
{
    const auto x = make(0, {1}, {});
    const auto y = make(0, {2}, {});
    const ChainMap f(x, y, 0, {SparseMatrix::from_dense({{1}, {0}})});
    EXPECT_EQ(homology(cone(f)).betti, (std::vector<std::size_t>{1, 0}));
}

TEST(QuasiIso, ZeroMapFailsAtDegreeZero)
{
    const auto x = make(0, {1}, {});
    const ChainMap f(x, x, 0, {SparseMatrix(1, 1)});
    const auto v = is_quasi_iso(f, Interval{0, 1});
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.failing_degree, 0);
    EXPECT_EQ(v.defect, 1u);
}

TEST(ChainMap, NonCommutingRejected)
{
    const auto x = make(0, {1, 1}, {SparseMatrix::identity(1)});
    const auto y = make(0, {1, 1}, {SparseMatrix(1, 1)});
    EXPECT_THROW(ChainMap(x, y, 0, {SparseMatrix::identity(1), SparseMatrix::identity(1)}), Error);
}

TEST(ChainMap, InducedRank)
{
    const auto x = make(0, {2}, {});
    const auto y = make(0, {2, 1}, {SparseMatrix::from_dense({{1}, {0}})});
    const ChainMap f(x, y, 0, {SparseMatrix::identity(2)});
    EXPECT_EQ(induced_rank(f, 0), 1u);
}

TEST(Cone, LongExactSequenceBound)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        // Random two-term complexes and a random chain map between them.
        const SparseMatrix dx = random_low_rank(rng, 4, 5, 2);
        const SparseMatrix dy = random_low_rank(rng, 3, 4, 2);
        const auto x = make(0, {4, 5}, {dx});
        const auto y = make(0, {3, 4}, {dy});
        const ChainMap zero(x, y, 0, {SparseMatrix(3, 4), SparseMatrix(4, 5)});
        const auto hc = homology(cone(zero));
        const auto hx = homology(*x), hy = homology(*y);
        for (int n = 0; n <= 2; ++n) {
            const std::size_t ty = n <= 1 ? hy.betti_at(n) : 0;
            const std::size_t sx = n >= 1 ? hx.betti_at(n - 1) : 0;
            EXPECT_EQ(hc.betti_at(n), ty + sx);
        }
    }
}
