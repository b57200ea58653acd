#include "support.hpp"

#include "ps12/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ps12;
using namespace ps12::testing;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

int count_prefix(const std::vector<std::string>& lines, const std::string& prefix)
{
    int n = 0;
    for (const auto& l : lines)
        n += l.rfind(prefix, 0) == 0;
    return n;
}

} // namespace

TEST(Io, RationalStringsAreCanonical)
{
    EXPECT_EQ(to_json_value(make_rational(6, -4)), json("-3/2"));
    EXPECT_EQ(to_json_value(Rational(5)), json("5"));
    EXPECT_EQ(scalar_from_json<Rational>(json("4/6")), make_rational(2, 3));
    EXPECT_EQ(scalar_from_json<Rational>(json(7)), Rational(7));
    EXPECT_EQ(scalar_from_json<double>(json("1/4")), 0.25);
    EXPECT_THROW(scalar_from_json<Rational>(json::array()), ParseError);
    EXPECT_THROW(scalar_from_json<Rational>(json("1/0")), ParseError);
}

TEST(Io, SplineRoundTrip)
{
    Spline<Rational> s{skew_frame(), 'e', {}};
    for (int i = 0; i < 39; ++i)
        s.coeffs.push_back(random_rational(-5, 5));
    json j = to_json(s);
    auto back = spline_from_json<Rational>(json::parse(j.dump()));
    EXPECT_EQ(back.basis, 'e');
    EXPECT_EQ(back.coeffs, s.coeffs);
    for (int m = 0; m < 3; ++m)
        EXPECT_EQ(back.frame.v[m], s.frame.v[m]);

    Spline<double> d{to_double_frame(skew_frame()), 'c', std::vector<double>(39, 0.1)};
    auto dback = spline_from_json<double>(json::parse(to_json(d).dump()));
    EXPECT_EQ(dback.coeffs, d.coeffs);
}

TEST(Io, SplineParseErrors)
{
    EXPECT_THROW(spline_from_json<Rational>(json::array()), ParseError);
    EXPECT_THROW(spline_from_json<Rational>(json{{"basis", "c"}}), ParseError);
    EXPECT_THROW(spline_from_json<Rational>(json{{"coeffs", json::array({1, 2})}}), DimensionMismatch);
    EXPECT_THROW(spline_from_json<Rational>(json{{"basis", "q"}, {"coeffs", json::array()}}), UnknownBasis);
    auto s = spline_from_json<Rational>(json{{"coeffs", std::vector<int>(39, 1)}});
    EXPECT_EQ(s.frame.v[1], (Point2<Rational>{1, 0}));
}

TEST(Io, TriangulationAndGlobalSplineRoundTrip)
{
    Triangulation<Rational> m;
    m.vertices = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    m.triangles = {{0, 1, 2}, {1, 3, 2}};
    std::vector<std::vector<Rational>> coeffs(2);
    for (auto& c : coeffs)
        for (int i = 0; i < 39; ++i)
            c.push_back(random_rational(-1, 1));
    auto g = make_global_spline(m, coeffs);
    auto back = global_spline_from_json<Rational>(json::parse(to_json(g).dump()));
    EXPECT_EQ(back.coeffs, g.coeffs);
    EXPECT_EQ(back.mesh.vertices, m.vertices);
    EXPECT_EQ(back.mesh.triangles, m.triangles);
    EXPECT_THROW(triangulation_from_json<Rational>(json::object()), ParseError);
}

TEST(Io, HermiteDataReversedEdge)
{
    json j{{"vertex_jets", json::array({std::vector<int>(10, 0), std::vector<int>(10, 0)})},
           {"edges", json::array({json{{"edge", {1, 0}}, {"values", {"1", "2", "3"}}}})}};
    auto d = hermite_data_from_json<Rational>(j);
    ASSERT_EQ(d.vertex_jets.size(), 2u);
    auto v = d.edge_values.at({0, 1});
    EXPECT_EQ(v[0], Rational(3));
    EXPECT_EQ(v[1], Rational(-2));
    EXPECT_EQ(v[2], Rational(1));
    json bad{{"vertex_jets", json::array({std::vector<int>(9, 0)})}};
    EXPECT_THROW(hermite_data_from_json<Rational>(bad), DimensionMismatch);
}

TEST(Io, Lattice)
{
    auto l1 = bary_lattice<Rational>(1);
    ASSERT_EQ(l1.size(), 3u);
    EXPECT_EQ(l1[0], (RBary{1, 0, 0}));
    EXPECT_EQ(bary_lattice<double>(4).size(), 15u);
    EXPECT_THROW(bary_lattice<double>(0), DimensionMismatch);
    for (const auto& b : bary_lattice<Rational>(7))
        EXPECT_EQ(b.sum(), Rational(1));
}

TEST(Io, SampleCsv)
{
    Spline<Rational> s{unit_frame(), 'c', std::vector<Rational>(39, Rational(2))};
    std::ostringstream os;
    write_sample_csv(os, s, 3);
    auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), 11u);
    EXPECT_EQ(lines[0], "b1,b2,b3,x,y,value");
    EXPECT_EQ(lines[1], "1,0,0,0,0,2");
    EXPECT_EQ(lines[2], "2/3,1/3,0,1/3,0,2");
}

TEST(Io, ObjVertexAndFaceCounts)
{
    auto m = hexagon_mesh();
    auto g = make_global_spline(m, std::vector<std::vector<double>>(m.triangles.size(), std::vector<double>(39, 0.5)));
    for (int n : {1, 3, 5}) {
        std::ostringstream os;
        write_obj(os, g, n, false);
        auto lines = lines_of(os.str());
        EXPECT_EQ(count_prefix(lines, "v "), static_cast<int>(m.triangles.size()) * (n + 1) * (n + 2) / 2);
        EXPECT_EQ(count_prefix(lines, "f "), static_cast<int>(m.triangles.size()) * n * n);
    }
    std::ostringstream os;
    write_obj(os, g, 2, true);
    auto lines = lines_of(os.str());
    EXPECT_EQ(count_prefix(lines, "v "), 6 * 6 + 6 * 39);
    EXPECT_EQ(count_prefix(lines, "l "), 6 * static_cast<int>(control_mesh_edges(catalog('c')).size()));
}

TEST(Io, Tables)
{
    auto dims = table_json("dims");
    ASSERT_EQ(dims.at("rows").size(), 10u);
    EXPECT_EQ(dims.at("rows")[5].at("dims")[4].get<long>(), 39);
    EXPECT_EQ(table_json("restrict2").at("table"), "restrict2");
    EXPECT_NO_THROW(table_json("dual"));
    EXPECT_NO_THROW(table_json("smoothness"));
    EXPECT_THROW(table_json("restrict4"), UnknownTable);
    EXPECT_THROW(table_json("bogus"), UnknownTable);
}

TEST(Io, BasisJson)
{
    json j = to_json(catalog('c'));
    EXPECT_EQ(j.dump(), json::parse(j.dump()).dump());
    EXPECT_THROW(as_global(Spline<double>{to_double_frame(unit_frame()), 'a', std::vector<double>(39)}), UnsupportedBasis);
}
