#include "expected_tables.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ps12;
using namespace ps12::testing;

namespace {

/// A random rational quintic, the same form on every face.
std::array<RForm, kNumFaces> random_polynomial()
{
    RForm f(5);
    for (auto& c : f.coefficients())
        c = random_rational(-5, 5, 13);
    std::array<RForm, kNumFaces> faces;
    faces.fill(f);
    return faces;
}

} // namespace

TEST(DualFunctionals, CountsAndLayout)
{
    auto lambda = build_lambda();
    ASSERT_EQ(lambda.size(), 39u);
    int jets_v1 = 0;
    for (const auto& f : lambda)
        if (f.kind == FunctionalKind::VertexJet && f.point == split_vertices()[0])
            ++jets_v1;
    EXPECT_EQ(jets_v1, 10);
    // e3 = [v1,v2]: quarterpoint, midpoint v4, quarterpoint
    const auto& mid = lambda[lambda_index_edge(0, 1)];
    EXPECT_EQ(mid.kind, FunctionalKind::EdgeMid);
    EXPECT_EQ(mid.point, split_vertices()[3]);
    EXPECT_EQ(mid.order(), 1);
    const auto& q1 = lambda[lambda_index_edge(0, 0)];
    EXPECT_EQ(q1.point, (RBary{make_rational(3, 4), make_rational(1, 4), 0}));
    EXPECT_EQ(q1.order(), 2);
}

TEST(DualFunctionals, ApplyToPartitionOfUnity)
{
    const auto& spec = catalog('c');
    std::array<RForm, kNumFaces> sum;
    for (auto& f : sum)
        f = RForm(5);
    for (const auto& e : spec.entries)
        for (int f = 0; f < kNumFaces; ++f)
            sum[f] += e.weight * pieces(e.knots).face[f];
    auto lambda = build_lambda();
    EXPECT_EQ(apply_functional(lambda[0], sum), Rational(1));
    auto one = constant_one_forms();
    EXPECT_EQ(apply_functional(lambda[1], one), Rational(0));
    for (std::size_t j = 0; j < lambda.size(); ++j)
        EXPECT_EQ(apply_functional(lambda[j], sum), apply_functional(lambda[j], one));
}

TEST(DualFunctionals, ApplyIsLinear)
{
    auto lambda = build_lambda();
    for (int s = 0; s < 5; ++s) {
        auto f = random_polynomial();
        auto g = random_polynomial();
        Rational a = random_rational(-3, 3), b = random_rational(-3, 3);
        std::array<RForm, kNumFaces> h;
        for (int k = 0; k < kNumFaces; ++k)
            h[k] = a * f[k] + b * g[k];
        for (const auto& l : lambda)
            EXPECT_EQ(apply_functional(l, h), a * apply_functional(l, f) + b * apply_functional(l, g));
    }
}

TEST(DualFunctionals, CollocationRank)
{
    auto ks = catalog('c').knots();
    EXPECT_EQ(rank_fraction_free(collocation(ks)), 39);
    auto dup = ks;
    dup[38] = dup[0];
    EXPECT_LE(rank_fraction_free(collocation(dup)), 38);
}

TEST(DualFunctionals, CollocationRankIsS3Invariant)
{
    // a full-rank basis and a rank-deficient candidate keep their rank under relabelling
    auto cands = enumerate_candidates();
    std::vector<std::vector<KnotMultiset>> lists{catalog('d').knots(), cands.front().elements};
    for (const auto& ks : lists) {
        int r = rank_fraction_free(collocation(ks));
        for (const auto& s : s3_elements()) {
            std::vector<KnotMultiset> moved;
            for (const auto& k : ks)
                moved.push_back(s3_apply(s, k));
            EXPECT_EQ(rank_fraction_free(collocation(moved)), r);
        }
    }
}

TEST(DualFunctionals, DimensionTable)
{
    const auto& t = expected_dims();
    for (int d = 0; d <= 9; ++d)
        for (int r = -1; r <= d; ++r)
            EXPECT_EQ(dim_Sr_d(r, d), t[d][r + 1]) << "r=" << r << " d=" << d;
    EXPECT_EQ(dim_Sr_d(3, 5), 39);
    EXPECT_EQ(dim_Sr_d(-1, 0), 12);
    EXPECT_EQ(dim_Sr_d(2, 4), 34);
    EXPECT_THROW(dim_Sr_d(4, 3), DomainError);
    EXPECT_THROW(dim_Sr_d(-2, 3), DomainError);
}

TEST(DualFunctionals, GlobalDimension)
{
    EXPECT_EQ(dim_global(3, 3), 39);
    EXPECT_EQ(dim_global(7, 12), 106);
    EXPECT_EQ(dim_global(4, 5), 55);
}
