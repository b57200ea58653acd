#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ps12;
using namespace ps12::testing;

namespace {

Point2<Rational> rp(long x, long dx, long y, long dy) { return {make_rational(x, dx), make_rational(y, dy)}; }

/// Face barycentrics of a macro point.
RBary face_coords(int f, const RBary& b)
{
    const auto& sv = split_vertices();
    detail::Mat3<Rational> m{};
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r)
            m[r][c] = sv[kFaces[f][c]][r];
    auto inv = detail::inverse3(m);
    RBary out;
    for (int r = 0; r < 3; ++r)
        out[r] = inv[r][0] * b[0] + inv[r][1] * b[1] + inv[r][2] * b[2];
    return out;
}

bool in_closed_face(int f, const RBary& b)
{
    auto l = face_coords(f, b);
    return sgn(l[0]) >= 0 && sgn(l[1]) >= 0 && sgn(l[2]) >= 0;
}

bool in_open_face(int f, const RBary& b)
{
    auto l = face_coords(f, b);
    return sgn(l[0]) > 0 && sgn(l[1]) > 0 && sgn(l[2]) > 0;
}

/// Partition test points: a lattice containing every split vertex, points on
/// all nine split lines, and random interior points.
std::vector<RBary> partition_points()
{
    std::vector<RBary> pts;
    const long n = 60;
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j)
            pts.push_back({make_rational(i, n), make_rational(j, n), make_rational(n - i - j, n)});
    const auto& sv = split_vertices();
    for (const auto& line : split_lines()) {
        const RBary& a = sv[line.front()];
        const RBary& b = sv[line.back()];
        for (int s = 0; s < 300; ++s) {
            Rational t = random_rational(0, 1, 1009);
            pts.push_back(a + t * (b - a));
        }
    }
    while (pts.size() < 10000)
        pts.push_back(random_bary(1013));
    return pts;
}

} // namespace

TEST(Geometry, UnitFrameSplitVertices)
{
    auto f = unit_frame();
    EXPECT_EQ(f.v[3], rp(1, 2, 0, 1));
    EXPECT_EQ(f.v[5], rp(0, 1, 1, 2));
    EXPECT_EQ(f.v[6], rp(1, 4, 1, 4));
    EXPECT_EQ(f.v[9], rp(1, 3, 1, 3));
}

TEST(Geometry, EquilateralCentroidIsCircumcenter)
{
    const double s = std::sqrt(3.0) / 2;
    auto f = make_frame<double>({0, 0}, {1, 0}, {0.5, s});
    for (int c = 0; c < 3; ++c)
        EXPECT_NEAR(std::hypot(f.v[9].x - f.v[c].x, f.v[9].y - f.v[c].y), 1 / std::sqrt(3.0), 1e-15);
}

TEST(Geometry, CollinearCornersAreRejected)
{
    EXPECT_THROW(make_frame<Rational>({0, 0}, {1, 1}, {2, 2}), DegenerateTriangle);
    EXPECT_THROW(make_frame<double>({0, 0}, {1, 0}, {3, 0}), DegenerateTriangle);
}

TEST(Geometry, ToBary)
{
    auto f = skew_frame();
    EXPECT_EQ(f.to_bary(f.v[0]), (RBary{1, 0, 0}));
    EXPECT_EQ(f.to_bary(f.v[9]), (RBary{make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)}));
    EXPECT_EQ(f.to_bary(f.v[6]), (RBary{make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)}));
    for (int s = 0; s < 50; ++s) {
        RBary b = random_bary();
        auto p = f.to_point(b);
        EXPECT_EQ(f.to_bary(p), b);
        EXPECT_EQ(f.to_bary(p).sum(), Rational(1));
    }
}

TEST(Geometry, HalfOpenFacesPartitionTheMacrotriangle)
{
    const auto& sv = split_vertices();
    const RBary centroid = sv[9];
    const Rational eps = make_rational(1, 1000000);
    const RBary tie = tie_break_direction();
    int violations = 0;
    auto pts = partition_points();
    ASSERT_GE(pts.size(), 10000u);
    for (const auto& b : pts) {
        int f = locate_face(b);
        // the chosen face holds the point and the point nudged into its interior
        RBary nudged = b + eps * (centroid - b) + (eps * eps) * tie;
        bool ok = f >= 0 && f < kNumFaces && in_closed_face(f, b) && in_open_face(f, nudged);
        // every other face misses the nudged point
        for (int g = 0; g < kNumFaces && ok; ++g)
            if (g != f && in_open_face(g, nudged))
                ok = false;
        violations += ok ? 0 : 1;
        EXPECT_EQ(locate_face(b), f);
    }
    EXPECT_EQ(violations, 0);
}

TEST(Geometry, OpenFaceInteriorsLocateToTheirFace)
{
    const auto& sv = split_vertices();
    for (int f = 0; f < kNumFaces; ++f) {
        RBary c = make_rational(1, 3) * (sv[kFaces[f][0]] + sv[kFaces[f][1]] + sv[kFaces[f][2]]);
        EXPECT_EQ(locate_face(c), f);
        EXPECT_EQ(locate_face(to_double(c)), f);
    }
}

TEST(Geometry, PointsOutsideAreRejected)
{
    EXPECT_EQ(locate_face(RBary{make_rational(-1, 10), make_rational(1, 2), make_rational(3, 5)}), kOutside);
    EXPECT_EQ(locate_face(Bary3<double>{1.2, -0.1, -0.1}), kOutside);
}

TEST(Geometry, LocationIsAffineEquivariant)
{
    auto f = unit_frame();
    auto g = skew_frame();
    for (int s = 0; s < 500; ++s) {
        RBary b = random_bary(37);
        EXPECT_EQ(f.locate(f.to_point(b)), g.locate(g.to_point(b)));
    }
}

TEST(Geometry, VertexPermutationExamples)
{
    EXPECT_EQ(s3_vertex_permutation(S3Element{{0, 1, 2}}), (std::array<int, 10>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(s3_vertex_permutation(S3Element{{1, 2, 0}}), (std::array<int, 10>{1, 2, 0, 4, 5, 3, 7, 8, 6, 9}));
    EXPECT_EQ(s3_vertex_permutation(S3Element{{1, 0, 2}}), (std::array<int, 10>{1, 0, 2, 3, 5, 4, 7, 6, 8, 9}));
}

TEST(Geometry, VertexPermutationIsAHomomorphism)
{
    for (const auto& s : s3_elements())
        for (const auto& t : s3_elements()) {
            auto ps = s3_vertex_permutation(s);
            auto pt = s3_vertex_permutation(t);
            auto pst = s3_vertex_permutation(s * t);
            for (int i = 0; i < kNumVertices; ++i)
                EXPECT_EQ(pst[i], ps[pt[i]]);
        }
}

TEST(Geometry, VertexPermutationMatchesBarycentricAction)
{
    const auto& sv = split_vertices();
    for (const auto& s : s3_elements()) {
        auto p = s3_vertex_permutation(s);
        for (int i = 0; i < kNumVertices; ++i)
            EXPECT_EQ(s3_apply(s, sv[i]), sv[p[i]]);
    }
}
