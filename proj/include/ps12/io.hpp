#pragma once

// JSON, CSV and OBJ formats. Rationals travel as canonical "p/q" strings;
// the float layer also accepts plain JSON numbers.

#include "ps12/assembly.hpp"
#include "ps12/basis_search.hpp"
#include "ps12/dual_functionals.hpp"
#include "ps12/marsden_catalog.hpp"
#include "ps12/spline_fn.hpp"

#include "json.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ps12 {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars and points

inline json to_json_value(const Rational& r) { return to_string(r); }
inline json to_json_value(double x) { return x; }

template <class T>
T scalar_from_json(const json& j)
{
    if (j.is_string()) {
        Rational r = parse_rational(j.get<std::string>());
        return scalar_from<T>(r);
    }
    if (j.is_number_integer())
        return T(j.get<long>());
    if (j.is_number()) {
        if constexpr (std::is_same_v<T, double>)
            return j.get<double>();
        else
            return Rational(j.get<double>());
    }
    throw ParseError("expected a number or a rational string");
}

template <class T>
json point_json(const Point2<T>& p)
{
    return json::array({to_json_value(p.x), to_json_value(p.y)});
}

template <class T>
Point2<T> point_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("a point is an array [x, y]");
    return {scalar_from_json<T>(j[0]), scalar_from_json<T>(j[1])};
}

inline json bary_json(const RBary& b)
{
    return json::array({to_string(b[0]), to_string(b[1]), to_string(b[2])});
}

template <class T>
std::vector<T> vector_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("expected an array of numbers");
    std::vector<T> out;
    for (const auto& x : j)
        out.push_back(scalar_from_json<T>(x));
    return out;
}

template <class T>
json vector_json(const std::vector<T>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json_value(x));
    return out;
}

/// Human-readable polynomial in a1, a2, a3 (or another variable stem).
inline std::string format_poly(const AlphaPoly& p, const std::string& var = "a")
{
    if (p.empty())
        return "0";
    std::string s;
    // highest total degree first, then lexicographic in the exponents
    std::vector<std::pair<std::array<int, 3>, Rational>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return x.first > y.first;
    });
    for (const auto& [e, c] : terms) {
        Rational a = abs(c);
        bool first = s.empty();
        s += sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        bool constant = e[0] + e[1] + e[2] == 0;
        std::string mono;
        for (int m = 0; m < 3; ++m) {
            if (e[m] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var + std::to_string(m + 1);
            if (e[m] > 1)
                mono += "^" + std::to_string(e[m]);
        }
        if (constant)
            s += to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += to_string(a) + "*" + mono;
    }
    return s;
}

inline json poly_json(const AlphaPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p)
        terms.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coeff", to_string(c)}});
    return terms;
}

// ---------------------------------------------------------------------------
// Single-triangle splines

template <class T>
json to_json(const Spline<T>& s)
{
    json tri = json::array({point_json(s.frame.v[0]), point_json(s.frame.v[1]), point_json(s.frame.v[2])});
    return {{"basis", std::string(1, s.basis)}, {"triangle", tri}, {"coeffs", vector_json(s.coeffs)}};
}

/// {"basis": "c", "triangle": [[x,y],[x,y],[x,y]], "coeffs": [...]}; the
/// triangle defaults to (0,0),(1,0),(0,1).
template <class T>
Spline<T> spline_from_json(const json& j, char default_basis = 'c')
{
    if (!j.is_object())
        throw ParseError("spline must be a JSON object");
    Spline<T> s;
    s.basis = default_basis;
    if (j.contains("basis")) {
        auto b = j.at("basis").get<std::string>();
        if (b.size() != 1)
            throw ParseError("basis id is one letter");
        s.basis = b[0];
    }
    catalog(s.basis);
    if (j.contains("triangle")) {
        const auto& t = j.at("triangle");
        if (!t.is_array() || t.size() != 3)
            throw ParseError("triangle needs three points");
        s.frame = make_frame(point_from_json<T>(t[0]), point_from_json<T>(t[1]), point_from_json<T>(t[2]));
    } else {
        s.frame = make_frame<T>({T(0), T(0)}, {T(1), T(0)}, {T(0), T(1)});
    }
    if (!j.contains("coeffs"))
        throw ParseError("spline needs \"coeffs\"");
    s.coeffs = vector_from_json<T>(j.at("coeffs"));
    if (s.coeffs.size() != static_cast<std::size_t>(kDim))
        throw DimensionMismatch("spline needs 39 coefficients");
    return s;
}

// ---------------------------------------------------------------------------
// Triangulations, Hermite data and global splines

template <class T>
json to_json(const Triangulation<T>& m)
{
    json v = json::array();
    for (const auto& p : m.vertices)
        v.push_back(point_json(p));
    json t = json::array();
    for (const auto& tri : m.triangles)
        t.push_back({tri[0], tri[1], tri[2]});
    return {{"vertices", v}, {"triangles", t}};
}

template <class T>
Triangulation<T> triangulation_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("triangles"))
        throw ParseError("triangulation needs \"vertices\" and \"triangles\"");
    Triangulation<T> m;
    for (const auto& p : j.at("vertices"))
        m.vertices.push_back(point_from_json<T>(p));
    for (const auto& t : j.at("triangles")) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("a triangle is three vertex indices");
        m.triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return m;
}

/// {"vertex_jets": [[f, fx, fy, fxx, fxy, fyy, fxxx, fxxy, fxyy, fyyy], ...],
///  "edges": [{"edge": [a, b], "values": [v1, v2, v3]}, ...]}
template <class T>
HermiteData<T> hermite_data_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertex_jets"))
        throw ParseError("Hermite data needs \"vertex_jets\"");
    HermiteData<T> d;
    for (const auto& jet : j.at("vertex_jets")) {
        auto v = vector_from_json<T>(jet);
        if (v.size() != 10)
            throw DimensionMismatch("a vertex jet has 10 entries");
        std::array<T, 10> a;
        std::copy(v.begin(), v.end(), a.begin());
        d.vertex_jets.push_back(a);
    }
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            int a = e.at("edge").at(0).get<int>();
            int b = e.at("edge").at(1).get<int>();
            auto v = vector_from_json<T>(e.at("values"));
            if (v.size() != 3)
                throw DimensionMismatch("an edge carries 3 values");
            std::array<T, 3> vals{v[0], v[1], v[2]};
            if (a > b) {
                // the normal turns with the edge: D_n changes sign, D_n^2 does not
                std::swap(a, b);
                std::swap(vals[0], vals[2]);
                vals[1] = T(-vals[1]);
            }
            d.edge_values[{a, b}] = vals;
        }
    return d;
}

template <class T>
json to_json(const GlobalSpline<T>& g)
{
    json out = to_json(g.mesh);
    out["basis"] = "c";
    json c = json::array();
    for (const auto& v : g.coeffs)
        c.push_back(vector_json(v));
    out["coeffs"] = c;
    return out;
}

template <class T>
GlobalSpline<T> global_spline_from_json(const json& j)
{
    auto mesh = triangulation_from_json<T>(j);
    if (!j.contains("coeffs"))
        throw ParseError("global spline needs \"coeffs\"");
    std::vector<std::vector<T>> c;
    for (const auto& v : j.at("coeffs"))
        c.push_back(vector_from_json<T>(v));
    return make_global_spline(mesh, std::move(c));
}

// ---------------------------------------------------------------------------
// Bases, search reports and tables

inline json to_json(const BasisSpec& spec)
{
    json entries = json::array();
    for (const auto& e : spec.entries) {
        json dual = json::array();
        for (const auto& p : e.dual_points)
            dual.push_back(bary_json(p));
        entries.push_back({{"knots", e.knots.label()},
                           {"class", std::string(1, e.cls)},
                           {"weight", to_string(e.weight)},
                           {"dual_points", dual},
                           {"domain_point", bary_json(e.domain)}});
    }
    return {{"id", std::string(1, spec.id)}, {"classes", spec.classes}, {"entries", entries}};
}

inline json to_json(const SearchReport& r)
{
    json stages = json::array({"candidates"});
    for (int s = 1; s < static_cast<int>(r.counts.size()); ++s)
        stages.push_back(stage_name(static_cast<SearchStage>(s)));
    json bases = json::array();
    for (const auto& b : r.survivors)
        if (r.last_stage == SearchStage::Split)
            bases.push_back(to_json(spec_from_search(b)));
    json out{{"stages", stages}, {"counts", r.counts}, {"last_stage", stage_name(r.last_stage)}};
    if (r.last_stage == SearchStage::Split)
        out["bases"] = bases;
    else {
        json classes = json::array();
        for (const auto& b : r.survivors)
            classes.push_back(b.classes);
        out["survivor_classes"] = classes;
    }
    return out;
}

/// dim S^r_d for d = 0..9, one row per degree with r = -1..d.
inline json dims_table()
{
    json rows = json::array();
    for (int d = 0; d <= 9; ++d) {
        json dims = json::array();
        for (int r = -1; r <= d; ++r)
            dims.push_back(dim_Sr_d(r, d));
        rows.push_back({{"d", d}, {"r_from", -1}, {"dims", dims}});
    }
    return {{"table", "dims"}, {"rows", rows}};
}

inline json dual_table()
{
    json bases = json::array();
    for (char id : basis_ids())
        bases.push_back(to_json(catalog(id)));
    return {{"table", "dual"}, {"bases", bases}};
}

/// D_u^k Q_i|e on [v1,v2] for B_c, scaled by (5-k)!/5!, with a3 eliminated.
inline json restriction_table(int k)
{
    if (k < 0 || k > 3)
        throw UnknownTable("restriction order must be 0..3");
    const auto& spec = catalog('c');
    const auto& t = edge_restriction_tables();
    json rows = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        json terms = json::array();
        for (std::size_t j = 0; j < t[i][k].size(); ++j) {
            AlphaPoly p = alpha_reduce(t[i][k][j]);
            if (p.empty())
                continue;
            terms.push_back({{"bspline", "B" + std::to_string(j + 1) + "^" + std::to_string(5 - k)},
                             {"text", format_poly(p)},
                             {"monomials", poly_json(p)}});
        }
        rows.push_back({{"i", i + 1}, {"knots", spec.entries[i].knots.label()}, {"terms", terms}});
    }
    return {{"table", "restrict" + std::to_string(k)}, {"order", k}, {"variables", "a1, a2 (a3 = -a1 - a2)"}, {"rows", rows}};
}

inline json smoothness_table()
{
    auto sys = smoothness_system(3);
    auto lin = [](const LinComb& x) {
        json terms = json::array();
        for (const auto& [j, p] : x)
            terms.push_back({{"c", j + 1}, {"coeff", format_poly(p, "b")}});
        return terms;
    };
    json rel = json::array();
    for (std::size_t i = 0; i < sys.c_tilde.size(); ++i)
        rel.push_back({{"c_tilde", i + 1}, {"terms", lin(sys.c_tilde[i])}});
    return {{"table", "smoothness"}, {"relations", rel}, {"c3_condition", lin(sys.c3_condition)}};
}

inline json table_json(const std::string& which)
{
    if (which == "dims")
        return dims_table();
    if (which == "dual")
        return dual_table();
    if (which == "smoothness")
        return smoothness_table();
    if (which.size() == 9 && which.rfind("restrict", 0) == 0 && which[8] >= '0' && which[8] <= '3')
        return restriction_table(which[8] - '0');
    throw UnknownTable("unknown table '" + which + "' (dual, restrict0..restrict3, dims, smoothness)");
}

// ---------------------------------------------------------------------------
// Grids, CSV and OBJ

/// Barycentric lattice (i,j,k)/N, i + j + k = N, ordered by i then j descending.
template <class T>
std::vector<Bary3<T>> bary_lattice(int n)
{
    if (n < 1)
        throw DimensionMismatch("grid resolution must be at least 1");
    std::vector<Bary3<T>> out;
    for (int i = n; i >= 0; --i)
        for (int j = n - i; j >= 0; --j) {
            int k = n - i - j;
            if constexpr (std::is_same_v<T, double>)
                out.push_back({double(i) / n, double(j) / n, double(k) / n});
            else
                out.push_back({make_rational(i, n), make_rational(j, n), make_rational(k, n)});
        }
    return out;
}

namespace detail {

inline std::string csv_value(const Rational& r) { return to_string(r); }

inline std::string csv_value(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

/// Triangles of the lattice of resolution n, as indices into bary_lattice(n).
inline std::vector<std::array<int, 3>> lattice_triangles(int n)
{
    auto index = [n](int i, int j) {
        // rows i = n..0, each with n - i + 1 entries
        int before = 0;
        for (int r = n; r > i; --r)
            before += n - r + 1;
        return before + (n - i - j);
    };
    std::vector<std::array<int, 3>> out;
    for (int i = n; i > 0; --i)
        for (int j = n - i; j >= 0; --j) {
            out.push_back({index(i, j), index(i - 1, j + 1), index(i - 1, j)});
            if (j > 0)
                out.push_back({index(i, j), index(i - 1, j), index(i, j - 1)});
        }
    return out;
}

} // namespace detail

template <class T>
void write_sample_csv(std::ostream& os, const Spline<T>& s, int n)
{
    const auto& spec = catalog(s.basis);
    os << "b1,b2,b3,x,y,value\n";
    for (const auto& b : bary_lattice<T>(n)) {
        auto p = s.frame.to_point(b);
        T v = eval_spline(spec, s.coeffs, b);
        os << detail::csv_value(b[0]) << ',' << detail::csv_value(b[1]) << ',' << detail::csv_value(b[2]) << ','
           << detail::csv_value(p.x) << ',' << detail::csv_value(p.y) << ',' << detail::csv_value(v) << '\n';
    }
}

/// Sampled surface of every triangle on a lattice of resolution n, optionally
/// followed by the control meshes as line elements.
inline void write_obj(std::ostream& os, const GlobalSpline<double>& g, int n, bool control)
{
    const auto& spec = catalog('c');
    auto lattice = bary_lattice<double>(n);
    auto tris = detail::lattice_triangles(n);
    os << std::setprecision(12);
    os << "o surface\n";
    std::size_t base = 1;
    for (std::size_t t = 0; t < g.frames.size(); ++t) {
        for (const auto& b : lattice) {
            auto p = g.frames[t].to_point(b);
            os << "v " << p.x << ' ' << p.y << ' ' << eval_spline(spec, g.coeffs[t], b) << '\n';
        }
        for (const auto& f : tris)
            os << "f " << base + f[0] << ' ' << base + f[1] << ' ' << base + f[2] << '\n';
        base += lattice.size();
    }
    if (!control)
        return;
    os << "o control_mesh\n";
    auto edges = control_mesh_edges(spec);
    for (std::size_t t = 0; t < g.frames.size(); ++t) {
        for (std::size_t i = 0; i < spec.entries.size(); ++i) {
            auto p = g.frames[t].to_point(convert_bary<double>(spec.entries[i].domain));
            os << "v " << p.x << ' ' << p.y << ' ' << g.coeffs[t][i] << '\n';
        }
        for (const auto& [a, b] : edges)
            os << "l " << base + a << ' ' << base + b << '\n';
        base += spec.entries.size();
    }
}

inline GlobalSpline<double> as_global(const Spline<double>& s)
{
    if (s.basis != 'c')
        throw UnsupportedBasis("surfaces are exported for basis c only");
    Triangulation<double> m{{s.frame.v[0], s.frame.v[1], s.frame.v[2]}, {{0, 1, 2}}};
    return make_global_spline(m, {s.coeffs});
}

} // namespace ps12
