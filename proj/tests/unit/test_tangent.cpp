#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"
#include "cyclex/tangent/tangent.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cyclex;

namespace {

SparseVector vec(std::initializer_list<Rational> xs) { return SparseVector::from_dense(std::vector<Rational>(xs)); }

SparseVector random_in(const Ideal& ideal, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    SparseVector v;
    for (const auto& b : ideal.subspace().basis()) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        v.axpy(q, b);
    }
    return v;
}

} // namespace

TEST(Log, SquareZeroIsIdentity)
{
    const auto a = preset("dual_numbers");
    EXPECT_EQ(log_unipotent(*a, vec({0, 3})), vec({0, 3}));
    EXPECT_EQ(exp_nilpotent(*a, vec({0, 3})), vec({0, 3}));
}

TEST(Log, TruncatedSeries)
{
    const auto a = preset("truncated_poly(4)");
    EXPECT_EQ(log_unipotent(*a, vec({0, 1, 0, 0})), vec({0, 1, Rational(-1, 2), Rational(1, 3)}));
}

TEST(Log, ExpLogRoundTrip)
{
    std::mt19937_64 rng(11);
    const auto m3 = std::make_shared<const Algebra>(matrix_algebra(*preset("dual_numbers"), 3));
    const Extension e3 = named_extension("matrix(3,dual)");
    const Extension t5 = named_extension("trunc(5)");
    for (int k = 0; k < 50; ++k) {
        const Extension& e = k % 2 ? e3 : t5;
        const SparseVector x = random_in(e.ideal(), rng);
        EXPECT_EQ(exp_nilpotent(e.ambient(), log_unipotent(e.ambient(), x)), x);
        EXPECT_EQ(log_unipotent(e.ambient(), exp_nilpotent(e.ambient(), x)), x);
    }
}

TEST(Log, InverseAndNonNilpotent)
{
    const auto a = preset("truncated_poly(3)");
    const SparseVector x = vec({0, 2, 1});
    EXPECT_TRUE(unipotent_product(*a, x, unipotent_inverse(*a, x)).empty());
    EXPECT_THROW(log_unipotent(*a, vec({1, 0, 0})), NotNilpotent);
}

TEST(Trace, MatrixTrace)
{
    // M_2(Q[e]): slots (0,0) (0,1) (1,0) (1,1), each of dim 2.
    EXPECT_EQ(matrix_trace(vec({1, 2, 3, 4, 5, 6, 7, 8}), 2, 2), vec({8, 10}));
}

TEST(Chern1, DualNumbers)
{
    const auto rep = chern1(named_extension("dual_numbers"), 1, 100, 1);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.image_dim, 1u);
    EXPECT_EQ(rep.rel_hc0, 1u);
}

TEST(Chern1, MatrixDualNumbers)
{
    const Extension e = named_extension("matrix_dual");
    const auto rep = chern1(e, 1, 100, 2);
    EXPECT_TRUE(rep.conjugation_checked);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.image_dim, 1u);
    // c(1 + e E12) = 0 and c(1 + e E11) spans: basis (i*2 + j)*2 + a.
    const Subspace comm = commutator_subspace(e.ambient());
    EXPECT_TRUE(comm.contains(log_unipotent(e.ambient(), SparseVector::unit(3))));
    EXPECT_FALSE(comm.contains(log_unipotent(e.ambient(), SparseVector::unit(1))));
}

TEST(Chern1, TruncatedCubic)
{
    for (std::size_t r : {1u, 2u}) {
        const auto rep = chern1(named_extension("trunc3"), r, 100, 3);
        EXPECT_EQ(rep.homomorphism_failures, 0u);
        EXPECT_EQ(rep.commutator_failures, 0u);
        EXPECT_EQ(rep.conjugation_failures, 0u);
        EXPECT_TRUE(rep.pass);
    }
}

TEST(Chern1, RejectsNonNilpotentIdeal)
{
    EXPECT_THROW(chern1(named_extension("split_product"), 1, 4, 0), NotNilpotent);
}

TEST(Chern1, DeterministicInSeed)
{
    const auto a = chern1(named_extension("trunc3"), 2, 40, 9);
    const auto b = chern1(named_extension("trunc3"), 2, 40, 9);
    EXPECT_EQ(a.image_dim, b.image_dim);
    EXPECT_EQ(a.homomorphism_failures, b.homomorphism_failures);
}

TEST(K1Probe, MatchesRelativeHC0)
{
    struct Case {
        const char* ext;
        std::size_t expected;
    };
    for (const Case& c : {Case{"dual_numbers", 1}, Case{"matrix_dual", 1}, Case{"trunc3", 2}, Case{"square_zero(3)", 3}}) {
        const auto p = k1_rel_probe(named_extension(c.ext), 2, 20, 5);
        EXPECT_TRUE(p.contained) << c.ext;
        EXPECT_EQ(p.span_dim, c.expected) << c.ext;
        EXPECT_EQ(p.rel_hc0, c.expected) << c.ext;
        EXPECT_TRUE(p.equal) << c.ext;
    }
}

TEST(TangentTable, GroundCoefficients)
{
    const auto t = tangent_table("Q", {"Q", "dual_numbers", "truncated_poly(3)"}, 4);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.range, (Interval{0, 2}));
    EXPECT_EQ(t.rows[0].rel_hc, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(t.rows[1].rel_hc, (std::vector<std::size_t>{1, 0, 1}));
    EXPECT_EQ(t.rows[2].rel_hc, (std::vector<std::size_t>{2, 0, 2}));
    for (const auto& row : t.rows) {
        EXPECT_EQ(row.rel_hc, row.ideal_hc) << row.base;
        EXPECT_TRUE(row.alpha.holds) << row.base;
    }
}

TEST(TangentTable, MatrixCoefficients)
{
    const auto t = tangent_table("matrix(2)", {"dual_numbers"}, 3);
    const auto& row = t.rows.at(0);
    EXPECT_EQ(row.rel_hc.at(0), 1u);
    EXPECT_EQ(row.ideal_hc.at(0), 4u);
    EXPECT_EQ(row.ideal_mod_commutators, 1u);
    EXPECT_FALSE(row.alpha.holds);
}

TEST(TangentTable, SizeLimit)
{
    EXPECT_THROW(tangent_table("matrix(2)", {"truncated_poly(3)"}, 4), SizeLimit);
    EXPECT_THROW(tangent_table("Q", {"dual_numbers"}, 1), ConfigError);
}
