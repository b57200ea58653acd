#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ps12;
using namespace ps12::testing;

namespace {

std::vector<Rational> domain_values(const BasisSpec& spec, const std::function<Rational(const RBary&)>& f)
{
    std::vector<Rational> v;
    for (const auto& e : spec.entries)
        v.push_back(f(e.domain));
    return v;
}

Rational beta1_5(const RBary& b) { return b[0] * b[0] * b[0] * b[0] * b[0]; }

} // namespace

TEST(SplineFn, ConstantAndIdentityCoefficients)
{
    auto frame = skew_frame();
    const auto& spec = catalog('c');
    Spline<Rational> one{frame, 'c', std::vector<Rational>(39, Rational(1))};
    Spline<Rational> xs{frame, 'c', {}}, ys{frame, 'c', {}};
    for (const auto& e : spec.entries) {
        auto p = frame.to_point(e.domain);
        xs.coeffs.push_back(p.x);
        ys.coeffs.push_back(p.y);
    }
    for (int s = 0; s < 20; ++s) {
        auto p = frame.to_point(random_bary());
        EXPECT_EQ(eval_spline(one, p), Rational(1));
        EXPECT_EQ(eval_spline(xs, p), p.x);
        EXPECT_EQ(eval_spline(ys, p), p.y);
    }
}

TEST(SplineFn, BernsteinCoefficients)
{
    const auto& spec = catalog('c');
    auto c = bernstein_spline_coeffs(spec, 5, 0, 0);
    for (int s = 0; s < 20; ++s) {
        RBary b = random_bary();
        EXPECT_EQ(eval_spline(spec, c, b), beta1_5(b));
    }
}

TEST(SplineFn, OutsideDomain)
{
    Spline<Rational> s{unit_frame(), 'c', std::vector<Rational>(39, Rational(1))};
    EXPECT_THROW(eval_spline(s, Point2<Rational>{2, 2}), OutsideDomain);
    Spline<double> d{to_double_frame(unit_frame()), 'c', std::vector<double>(39, 1.0)};
    EXPECT_THROW(eval_spline(d, Point2<double>{-0.1, 0.5}), OutsideDomain);
    EXPECT_THROW(eval_spline(catalog('c'), std::vector<Rational>(38), RBary{1, 0, 0}), DimensionMismatch);
}

TEST(SplineFn, ConditionNumberOfBasisC)
{
    const auto& col = collocation_at_domain_points('c');
    EXPECT_EQ(col.k, Rational("60866923187443943219194678615331/836197581250152380489105335680"));
    EXPECT_NEAR(col.k.get_d(), 72.7901, 1e-4);
    EXPECT_EQ(col.m_norm, Rational(1));
}

TEST(SplineFn, CollocationRowsSumToOne)
{
    for (char id : basis_ids()) {
        const auto& col = collocation_at_domain_points(id);
        EXPECT_EQ(col.m_norm, Rational(1)) << id;
        for (int i = 0; i < col.m.rows(); ++i) {
            Rational s = 0;
            for (int j = 0; j < col.m.cols(); ++j) {
                EXPECT_GE(sgn(col.m(i, j)), 0);
                s += col.m(i, j);
            }
            EXPECT_EQ(s, Rational(1));
        }
        EXPECT_GE(col.k, Rational(1));
    }
}

TEST(SplineFn, LagrangeInterpolation)
{
    const auto& spec = catalog('c');
    EXPECT_EQ(lagrange_interpolate('c', std::vector<Rational>(39, Rational(1))), std::vector<Rational>(39, Rational(1)));
    EXPECT_EQ(lagrange_interpolate('c', domain_values(spec, beta1_5)), bernstein_spline_coeffs(spec, 5, 0, 0));
    EXPECT_THROW(lagrange_interpolate('c', std::vector<Rational>(3)), DimensionMismatch);
    for (int s = 0; s < 20; ++s) {
        std::vector<Rational> c;
        for (int i = 0; i < 39; ++i)
            c.push_back(random_rational(-9, 9, 17));
        std::vector<Rational> values;
        for (const auto& e : spec.entries)
            values.push_back(eval_spline(spec, c, e.domain));
        EXPECT_EQ(lagrange_interpolate('c', values), c);
    }
}

TEST(SplineFn, InterpolationReproducesBernsteinQuintics)
{
    for (char id : std::string("cf")) {
        const auto& spec = catalog(id);
        for (int i = 0; i <= 5; ++i)
            for (int j = 0; i + j <= 5; ++j) {
                int k = 5 - i - j;
                auto bern = [&](const RBary& b) {
                    static const long fact[6] = {1, 1, 2, 6, 24, 120};
                    Rational v = make_rational(120, fact[i] * fact[j] * fact[k]);
                    for (int a = 0; a < i; ++a)
                        v *= b[0];
                    for (int a = 0; a < j; ++a)
                        v *= b[1];
                    for (int a = 0; a < k; ++a)
                        v *= b[2];
                    return v;
                };
                auto s = lagrange_interpolate<Rational>(id, unit_frame(), bern);
                EXPECT_EQ(s.coeffs, bernstein_spline_coeffs(spec, i, j, k));
            }
    }
}

TEST(SplineFn, EvalIsLinearInTheCoefficients)
{
    const auto& spec = catalog('c');
    std::vector<Rational> a, b, sum;
    for (int i = 0; i < 39; ++i) {
        a.push_back(random_rational(-2, 2));
        b.push_back(random_rational(-2, 2));
        sum.push_back(3 * a.back() - b.back());
    }
    for (int s = 0; s < 10; ++s) {
        RBary x = random_bary();
        EXPECT_EQ(eval_spline(spec, sum, x), 3 * eval_spline(spec, a, x) - eval_spline(spec, b, x));
    }
}

TEST(SplineFn, StabilitySandwich)
{
    const auto& spec = catalog('c');
    const double k = collocation_at_domain_points('c').k.get_d();
    std::vector<Bary3<double>> grid;
    const int n = 30;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            grid.push_back({double(i) / n, double(j) / n, double(n - i - j) / n});
    for (const auto& e : spec.entries)
        grid.push_back(to_double(e.domain));
    for (int s = 0; s < 100; ++s) {
        std::vector<double> c;
        double cmax = 0;
        for (int i = 0; i < 39; ++i) {
            c.push_back(random_double(-1, 1));
            cmax = std::max(cmax, std::fabs(c.back()));
        }
        double fmax = 0;
        for (const auto& b : grid)
            fmax = std::max(fmax, std::fabs(eval_spline(spec, c, b)));
        EXPECT_LE(fmax, cmax * (1 + 1e-12));
        EXPECT_GE(fmax * 1.05, cmax / k);
    }
}

TEST(SplineFn, ControlMesh)
{
    const auto& spec = catalog('c');
    auto frame = unit_frame();
    Spline<Rational> s{frame, 'c', {}};
    for (const auto& e : spec.entries)
        s.coeffs.push_back(e.domain[1]);
    auto mesh = control_mesh(s);
    ASSERT_EQ(mesh.points.size(), 39u);
    for (std::size_t i = 0; i < 39; ++i) {
        // planar: the value is the x coordinate of the control point
        EXPECT_EQ(mesh.values[i], mesh.points[i].x);
        EXPECT_EQ(mesh.points[i], frame.to_point(spec.entries[i].domain));
    }
    std::set<std::pair<int, int>> edges(mesh.edges.begin(), mesh.edges.end());
    for (const auto& [i, j] : mesh.edges) {
        ASSERT_LT(i, 39);
        ASSERT_LT(j, 39);
        for (const auto& g : s3_elements()) {
            int a = spec.index_of(s3_apply(g, spec.entries[static_cast<std::size_t>(i)].knots));
            int b = spec.index_of(s3_apply(g, spec.entries[static_cast<std::size_t>(j)].knots));
            EXPECT_TRUE(edges.count({std::min(a, b), std::max(a, b)}));
        }
    }
    // 7 boundary segments with 8 points on each macro edge
    for (int m = 0; m < 3; ++m) {
        int on = 0, seg = 0;
        for (const auto& e : spec.entries)
            on += sgn(e.domain[m]) == 0;
        for (const auto& [i, j] : mesh.edges)
            seg += sgn(spec.entries[static_cast<std::size_t>(i)].domain[m]) == 0 && sgn(spec.entries[static_cast<std::size_t>(j)].domain[m]) == 0;
        EXPECT_EQ(on, 8);
        EXPECT_EQ(seg, 7);
    }
    Spline<Rational> other{frame, 'a', std::vector<Rational>(39, Rational(0))};
    EXPECT_THROW(control_mesh(other), UnsupportedBasis);
}

TEST(SplineFn, ControlDistanceForLinearData)
{
    auto frame = skew_frame();
    auto s = lagrange_interpolate<Rational>('c', frame, [&](const RBary& b) -> Rational {
        auto p = frame.to_point(b);
        return 2 * p.x - 3 * p.y + 1;
    });
    auto r = control_distance_bound_check(s, 0.0);
    EXPECT_EQ(r.max_gap, 0.0);
}

TEST(SplineFn, ControlDistanceForQuadraticData)
{
    // f = beta1 beta2 on the unit triangle: f = x - x^2 - x y, |H|_inf = 3
    auto s = lagrange_interpolate<Rational>('c', unit_frame(), [](const RBary& b) -> Rational { return b[0] * b[1]; });
    auto r = control_distance_bound_check(s, 3.0);
    EXPECT_GT(r.max_gap, 0.0);
    EXPECT_LE(r.max_gap, r.bound);
    EXPECT_THROW(control_distance_bound_check(s, 1e-6), BoundViolated);
}

TEST(SplineFn, ControlDistanceShrinksQuadratically)
{
    // f = x^2 + 3 x y - y^2, |H|_inf = 5
    auto gap = [](long h_den) {
        Rational h = make_rational(1, h_den);
        auto frame = make_frame<Rational>({make_rational(1, 5), make_rational(1, 3)},
                                          {make_rational(1, 5) + h, make_rational(1, 3)},
                                          {make_rational(1, 5) + h / 2, make_rational(1, 3) + h});
        auto s = lagrange_interpolate<Rational>('c', frame, [&](const RBary& b) -> Rational {
            auto p = frame.to_point(b);
            return p.x * p.x + 3 * p.x * p.y - p.y * p.y;
        });
        return control_distance_bound_check(s, 5.0).max_gap;
    };
    double g1 = gap(2), g2 = gap(4);
    EXPECT_GE(g1 / g2, 4.0 * (1 - 1e-9));
}
