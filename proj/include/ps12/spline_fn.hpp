#pragma once

// Splines on one macrotriangle as coefficient vectors in one of the six
// bases: evaluation, interpolation at the domain points, stability constant
// and control mesh.

#include "ps12/geometry.hpp"
#include "ps12/linalg.hpp"
#include "ps12/marsden_catalog.hpp"
#include "ps12/simplex_spline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

namespace ps12 {

template <class T>
struct Spline {
    PS12Frame<T> frame;
    char basis = 'c';
    std::vector<T> coeffs; ///< 39 coefficients of S_i = w_i Q_i
};

/// sum_i c_i w_i Q_i at macro barycentrics b.
template <class T>
T eval_spline(const BasisSpec& spec, const std::vector<T>& coeffs, const Bary3<T>& b)
{
    if (coeffs.size() != spec.entries.size())
        throw DimensionMismatch("spline needs one coefficient per basis function");
    T sum(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i]))
            continue;
        T q = eval(spec.entries[i].knots, b);
        if (!is_zero(q))
            sum += T(coeffs[i] * scalar_from<T>(spec.entries[i].weight) * q);
    }
    return sum;
}

/// Value at a Cartesian point; points outside the closed macrotriangle are rejected.
template <class T>
T eval_spline(const Spline<T>& s, const Point2<T>& p, double tol = 1e-12)
{
    Bary3<T> b = s.frame.to_bary(p);
    for (int m = 0; m < 3; ++m) {
        if constexpr (std::is_same_v<T, double>) {
            if (b[m] < -tol)
                throw OutsideDomain("point lies outside the macrotriangle");
            b[m] = std::max(b[m], 0.0);
        } else if (sgn(b[m]) < 0) {
            throw OutsideDomain("point lies outside the macrotriangle");
        }
    }
    return eval_spline(catalog(s.basis), s.coeffs, b);
}

// ---------------------------------------------------------------------------
// Collocation at the domain points

struct DomainCollocation {
    RMatrix m;       ///< m(i,j) = S_j(xi_i)
    RMatrix inverse;
    Rational k;      ///< ||m^-1||_inf
    Rational m_norm; ///< ||m||_inf
};

inline DomainCollocation compute_domain_collocation(const BasisSpec& spec)
{
    const int n = static_cast<int>(spec.entries.size());
    DomainCollocation out;
    out.m = RMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.m(i, j) = spec.entries[j].weight * eval(spec.entries[j].knots, spec.entries[i].domain);
    out.inverse = inverse(out.m);
    out.k = out.inverse.inf_norm();
    out.m_norm = out.m.inf_norm();
    return out;
}

/// Cached collocation data for one of the six bases.
inline const DomainCollocation& collocation_at_domain_points(char id)
{
    static std::mutex mtx;
    static std::map<char, DomainCollocation> cache;
    std::lock_guard lock(mtx);
    if (auto it = cache.find(id); it != cache.end())
        return it->second;
    return cache.emplace(id, compute_domain_collocation(catalog(id))).first->second;
}

/// Coefficients c = M^-1 f of the spline taking the given values at the domain points.
inline std::vector<Rational> lagrange_interpolate(char id, const std::vector<Rational>& values)
{
    const auto& col = collocation_at_domain_points(id);
    if (static_cast<int>(values.size()) != col.m.rows())
        throw DimensionMismatch("need one value per domain point");
    return col.inverse * values;
}

inline std::vector<double> lagrange_interpolate(char id, const std::vector<double>& values)
{
    const auto& col = collocation_at_domain_points(id);
    if (static_cast<int>(values.size()) != col.m.rows())
        throw DimensionMismatch("need one value per domain point");
    std::vector<double> out(values.size(), 0.0);
    for (int i = 0; i < col.inverse.rows(); ++i)
        for (int j = 0; j < col.inverse.cols(); ++j)
            out[i] += col.inverse(i, j).get_d() * values[j];
    return out;
}

/// Interpolates f (given on macro barycentrics) at the domain points.
template <class T, class Fn>
Spline<T> lagrange_interpolate(char id, const PS12Frame<T>& frame, Fn&& f)
{
    const auto& spec = catalog(id);
    std::vector<T> values;
    for (const auto& e : spec.entries)
        values.push_back(f(convert_bary<T>(e.domain)));
    return {frame, id, lagrange_interpolate(id, values)};
}

// ---------------------------------------------------------------------------
// Control mesh

namespace detail {

/// Mesh edges of B_c near the edge [v1,v2], as knot labels; the full edge
/// set is the union of their S3 images.
inline const std::vector<std::pair<const char*, const char*>>& mesh_edge_orbits()
{
    static const std::vector<std::pair<const char*, const char*>> e{
        {"600101", "500201"}, {"500201", "410201"}, {"410201", "320201"}, {"320201", "230210"},
        {"500201", "411101"}, {"410201", "411101"}, {"410201", "311201"}, {"411101", "311201"},
        {"320201", "311201"}, {"320201", "220211"}, {"311201", "220211"}, {"311201", "311102"},
        {"411101", "311102"}, {"311201", "211211"}, {"220211", "211211"}, {"211211", "121211"},
        {"211211", "211112"},
    };
    return e;
}

} // namespace detail

/// Edge list of the domain mesh: triangles, quadrilaterals and a central hexagon.
inline std::vector<std::pair<int, int>> control_mesh_edges(const BasisSpec& spec)
{
    if (spec.id != 'c')
        throw UnsupportedBasis(std::string("no mesh connectivity stored for basis '") + spec.id + "'");
    std::set<std::pair<int, int>> edges;
    for (const auto& [a, b] : detail::mesh_edge_orbits()) {
        KnotMultiset ka = KnotMultiset::parse(a);
        KnotMultiset kb = KnotMultiset::parse(b);
        for (const auto& s : s3_elements()) {
            int i = spec.index_of(s3_apply(s, ka));
            int j = spec.index_of(s3_apply(s, kb));
            if (i < 0 || j < 0)
                throw DomainError("mesh edge references a spline outside the basis");
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return {edges.begin(), edges.end()};
}

template <class T>
struct ControlMesh {
    std::vector<Point2<T>> points; ///< domain points in the frame
    std::vector<T> values;         ///< control values c_i
    std::vector<std::pair<int, int>> edges;
};

template <class T>
ControlMesh<T> control_mesh(const Spline<T>& s)
{
    const auto& spec = catalog(s.basis);
    ControlMesh<T> mesh;
    mesh.edges = control_mesh_edges(spec);
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        mesh.points.push_back(s.frame.to_point(convert_bary<T>(spec.entries[i].domain)));
        mesh.values.push_back(s.coeffs.at(i));
    }
    return mesh;
}

// ---------------------------------------------------------------------------
// Distance between control values and spline values

struct ControlDistanceReport {
    double max_gap = 0; ///< max_i |c_i - f(xi_i)|
    double bound = 0;   ///< 2 K h^2 hessian_bound
};

/// Checks |c_i - f(xi_i)| <= 2 K h^2 max ||H||_inf for f = S^T c.
template <class T>
ControlDistanceReport control_distance_bound_check(const Spline<T>& s, double hessian_bound)
{
    const auto& spec = catalog(s.basis);
    double k = collocation_at_domain_points(s.basis).k.get_d();
    double h = s.frame.longest_edge();
    ControlDistanceReport r;
    r.bound = 2 * k * h * h * hessian_bound;
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        T v = eval_spline(spec, s.coeffs, convert_bary<T>(spec.entries[i].domain));
        r.max_gap = std::max(r.max_gap, std::fabs(to_double(T(s.coeffs[i] - v))));
    }
    if (r.max_gap > r.bound * (1 + 1e-12) + 1e-14)
        throw BoundViolated("control values deviate from spline values beyond 2 K h^2 |H|");
    return r;
}

} // namespace ps12
