#pragma once

// Joining macrotriangles: restrictions of B_c to an edge, smoothness
// relations between neighbouring coefficient vectors, the Hermite nodal basis
// and C^2 Hermite interpolation on triangulations.

#include "ps12/dual_functionals.hpp"
#include "ps12/geometry.hpp"
#include "ps12/linalg.hpp"
#include "ps12/marsden_catalog.hpp"
#include "ps12/simplex_spline.hpp"
#include "ps12/spline_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace ps12 {

/// B_c splines Q_1..Q_{n_k} are the ones seen by D^(k-1) on [v1,v2].
inline constexpr std::array<int, 5> kBlockEnds{0, 8, 15, 21, 25};

// ---------------------------------------------------------------------------
// Restrictions to [v1,v2]

/// table[i][k][j]: coefficient of B_{j+1}^{5-k} in D_u^k Q_i|e divided by
/// 5!/(5-k)!, for u with directional coordinates (a1,a2,a3), B_c order.
using RestrictionTable = std::vector<std::array<std::vector<AlphaPoly>, 4>>;

inline const RestrictionTable& edge_restriction_tables()
{
    static const RestrictionTable table = [] {
        const auto& spec = catalog('c');
        const std::array<Rational, 4> scale{Rational(1), make_rational(1, 5), make_rational(1, 20), make_rational(1, 60)};
        RestrictionTable t(spec.entries.size());
        for (std::size_t i = 0; i < spec.entries.size(); ++i)
            for (int k = 0; k < 4; ++k) {
                auto row = restricted_derivative(spec.entries[i].knots, 0, k);
                for (auto& p : row)
                    p = alpha_add({}, p, scale[k]);
                t[i][k] = std::move(row);
            }
        return t;
    }();
    return table;
}

// ---------------------------------------------------------------------------
// Polynomials in the barycentric coordinates (b1,b2,b3) of the opposite vertex

using BetaPoly = AlphaPoly;

/// Linear combination sum_j p_j(beta) c_j, keyed by 0-based coefficient index.
using LinComb = std::map<int, BetaPoly>;

namespace detail {

inline void lin_add(LinComb& acc, const LinComb& x, const BetaPoly& factor)
{
    for (const auto& [j, p] : x) {
        BetaPoly& slot = acc[j];
        slot = alpha_add(slot, alpha_mul(p, factor));
        if (slot.empty())
            acc.erase(j);
    }
}

inline BetaPoly beta_constant(const Rational& c)
{
    if (is_zero(c))
        return {};
    return {{{0, 0, 0}, c}};
}

/// p(a1,a2,a3) with a_m replaced by sub[m].
inline BetaPoly compose(const AlphaPoly& p, const std::array<BetaPoly, 3>& sub)
{
    BetaPoly out;
    for (const auto& [e, c] : p) {
        BetaPoly term = beta_constant(c);
        for (int m = 0; m < 3; ++m)
            for (int s = 0; s < e[m]; ++s)
                term = alpha_mul(term, sub[m]);
        out = alpha_add(out, term);
    }
    return out;
}

/// The homogeneous polynomial of the given degree agreeing with p on b1+b2+b3 = 1.
inline BetaPoly homogenize(const BetaPoly& p, int degree)
{
    const BetaPoly sum{{{1, 0, 0}, Rational(1)}, {{0, 1, 0}, Rational(1)}, {{0, 0, 1}, Rational(1)}};
    BetaPoly out;
    for (const auto& [e, c] : p) {
        int d = e[0] + e[1] + e[2];
        if (d > degree)
            throw DomainError("polynomial degree exceeds the homogenization degree");
        BetaPoly term{{e, c}};
        for (int s = d; s < degree; ++s)
            term = alpha_mul(term, sum);
        out = alpha_add(out, term);
    }
    return out;
}

inline LinComb homogenize(const LinComb& x, int degree)
{
    LinComb out;
    for (const auto& [j, p] : x) {
        BetaPoly h = homogenize(p, degree);
        if (!h.empty())
            out[j] = std::move(h);
    }
    return out;
}

} // namespace detail

/// Coefficients on the neighbour [v1,v2,v3~] forced by C^r smoothness, where
/// (b1,b2,b3) are the barycentric coordinates of v3~ with respect to [v1,v2,v3].
struct SmoothnessSystem {
    int order = 0;
    std::vector<LinComb> c_tilde; ///< c~_1..c~_{n_{r+1}}, homogeneous of degree k in block k
    LinComb c3_condition;         ///< cubic form in beta, linear in c; must vanish for C^3
};

namespace detail {

inline SmoothnessSystem derive_smoothness()
{
    const auto& spec = catalog('c');
    const auto& table = edge_restriction_tables();
    const int n = static_cast<int>(spec.entries.size());
    const BetaPoly b1{{{1, 0, 0}, Rational(1)}};
    const BetaPoly b2{{{0, 1, 0}, Rational(1)}};
    const BetaPoly b3{{{0, 0, 1}, Rational(1)}};
    // u = v3~ - v1 in directional coordinates on each side
    const std::array<BetaPoly, 3> alpha{alpha_add(b1, beta_constant(Rational(-1))), b2, b3};
    const RBary alpha_tilde{Rational(-1), Rational(0), Rational(1)};

    SmoothnessSystem sys;
    sys.order = 3;
    for (int k = 0; k <= 3; ++k) {
        const int lo = kBlockEnds[k];
        const int hi = kBlockEnds[k + 1];
        const int rows = 8 - k;
        const int cols = hi - lo;
        for (int i = hi; i < n; ++i)
            for (const auto& p : table[i][k])
                if (!p.empty())
                    throw DomainError("restriction table does not have block structure");
        RMatrix m(rows, cols);
        std::vector<LinComb> rhs(static_cast<std::size_t>(rows));
        for (int j = 0; j < rows; ++j) {
            for (int i = 0; i < n; ++i) {
                const AlphaPoly& t = table[i][k][j];
                if (t.empty())
                    continue;
                const Rational& w = spec.entries[i].weight;
                lin_add(rhs[j], {{i, compose(t, alpha)}}, beta_constant(w));
                Rational tv = w * alpha_eval(t, alpha_tilde);
                if (i < lo)
                    lin_add(rhs[j], sys.c_tilde[i], beta_constant(-tv));
                else if (i < hi)
                    m(j, i - lo) = tv;
            }
        }
        // reduce [m | I] to row echelon form to read off c~ and any leftover condition
        RMatrix e = RMatrix::identity(rows);
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int p = -1;
            for (int q = r; q < rows && p < 0; ++q)
                if (!is_zero(m(q, c)))
                    p = q;
            if (p < 0)
                continue;
            for (int x = 0; x < cols; ++x)
                std::swap(m(r, x), m(p, x));
            for (int x = 0; x < rows; ++x)
                std::swap(e(r, x), e(p, x));
            Rational inv = 1 / m(r, c);
            for (int x = 0; x < cols; ++x)
                m(r, x) *= inv;
            for (int x = 0; x < rows; ++x)
                e(r, x) *= inv;
            for (int q = 0; q < rows; ++q) {
                if (q == r || is_zero(m(q, c)))
                    continue;
                Rational f = m(q, c);
                for (int x = 0; x < cols; ++x)
                    m(q, x) -= f * m(r, x);
                for (int x = 0; x < rows; ++x)
                    e(q, x) -= f * e(r, x);
            }
            pivot_col.push_back(c);
            ++r;
        }
        if (r != cols)
            throw SingularSystem("smoothness block does not determine the neighbour coefficients");
        auto combine = [&](int row) {
            LinComb out;
            for (int j = 0; j < rows; ++j)
                if (!is_zero(e(row, j)))
                    lin_add(out, rhs[j], beta_constant(e(row, j)));
            return homogenize(out, k);
        };
        std::vector<LinComb> block(static_cast<std::size_t>(cols));
        for (int q = 0; q < r; ++q)
            block[pivot_col[q]] = combine(q);
        for (auto& b : block)
            sys.c_tilde.push_back(std::move(b));
        if (r < rows) {
            if (k != 3 || rows - r != 1)
                throw DomainError("unexpected number of smoothness side conditions");
            sys.c3_condition = combine(r);
        }
    }
    return sys;
}

} // namespace detail

/// Symbolic relations for C^r joins, r = 0..3, derived from the restriction tables.
inline SmoothnessSystem smoothness_system(int r)
{
    if (r < 0 || r > 3)
        throw InvalidDirection("smoothness order must be 0..3");
    static const SmoothnessSystem full = detail::derive_smoothness();
    SmoothnessSystem s = full;
    s.order = r;
    s.c_tilde.resize(static_cast<std::size_t>(kBlockEnds[r + 1]));
    return s;
}

template <class T>
T eval_lincomb(const LinComb& x, const std::vector<T>& c, const Bary3<T>& beta)
{
    T sum(0);
    for (const auto& [j, p] : x)
        sum += T(alpha_eval(p, beta) * c.at(static_cast<std::size_t>(j)));
    return sum;
}

template <class T>
struct Propagation {
    std::vector<T> c_tilde; ///< c~_1..c~_{n_{r+1}}; the rest is free
    T c3_residual{};        ///< value of the C^3 side condition
    bool c3_feasible = false;
};

/// Neighbour coefficients giving a C^r join across [v1,v2]; beta are the
/// barycentrics of v3~ with respect to [v1,v2,v3].
template <class T>
Propagation<T> propagate(const std::vector<T>& c, const Bary3<T>& beta, int r, double tol = 1e-9)
{
    if (c.size() != static_cast<std::size_t>(kDim))
        throw DimensionMismatch("propagation needs 39 coefficients");
    if (!is_zero(T(beta.sum() - T(1))) && std::fabs(to_double(T(beta.sum() - T(1)))) > tol)
        throw InvalidDirection("beta must be barycentric coordinates");
    SmoothnessSystem sys = smoothness_system(3);
    Propagation<T> out;
    for (int i = 0; i < kBlockEnds[r + 1]; ++i)
        out.c_tilde.push_back(eval_lincomb(sys.c_tilde[i], c, beta));
    out.c3_residual = eval_lincomb(sys.c3_condition, c, beta);
    if constexpr (std::is_same_v<T, double>) {
        double scale = 0;
        for (double v : c)
            scale = std::max(scale, std::fabs(v));
        out.c3_feasible = std::fabs(out.c3_residual) <= tol * std::max(scale, 1.0);
    } else {
        out.c3_feasible = is_zero(out.c3_residual);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hermite nodal basis

/// Index of a functional in Lambda: corner c jets at 10c + jet slot (kJetOrder),
/// edge slot e at 30 + 3e + {0: q1, 1: m, 2: q2}.
inline int lambda_index_vertex(int corner, int i, int j)
{
    for (int s = 0; s < 10; ++s)
        if (kJetOrder[s][0] == i && kJetOrder[s][1] == j)
            return 10 * corner + s;
    throw InvalidDirection("vertex jet order above three");
}

inline int lambda_index_edge(int edge, int which) { return 30 + 3 * edge + which; }

namespace detail {

struct NodalTerm {
    const char* knots;
    long num;
    long den;
};

struct PrintedNodal {
    int index;
    std::vector<NodalTerm> terms;
};

/// Nodal functions at v1 and on e3 in terms of unweighted Q[K].
inline const std::vector<PrintedNodal>& printed_nodal()
{
    static const std::vector<PrintedNodal> p{
        {0, {{"600101", 1, 4}, {"500201", 1, 4}, {"500102", 1, 4}, {"410201", 1, 2}, {"401102", 1, 2},
             {"411101", 1, 1}, {"311201", 1, 2}, {"311102", 1, 2}, {"320201", 1, 2}, {"302102", 1, 2},
             {"211211", 9, 16}, {"211112", 9, 16}, {"220211", 3, 8}, {"202112", 3, 8},
             {"112112", 3, 16}, {"121211", 3, 16}}},
        {1, {{"500201", 1, 40}, {"410201", 1, 10}, {"320201", 1, 5}, {"411101", 1, 10},
             {"311201", 3, 20}, {"220211", 13, 80}, {"311102", 1, 20}, {"211211", 19, 80},
             {"121211", 1, 10}, {"211112", -1, 40}, {"202112", -1, 40}, {"112112", -1, 20}}},
        {3, {{"410201", 1, 160}, {"320201", 1, 32}, {"311201", 1, 80}, {"220211", 17, 640},
             {"211211", 121, 3840}, {"121211", 71, 3840}, {"211112", -1, 48}, {"112112", 1, 480}}},
        {4, {{"411101", 1, 80}, {"311201", 3, 160}, {"311102", 3, 160}, {"220211", -1, 160},
             {"202112", -1, 160}, {"211112", 17, 960}, {"211211", 17, 960}, {"112112", -7, 480},
             {"121211", -7, 480}}},
        {6, {{"320201", 1, 480}, {"220211", 7, 3840}, {"211211", 5, 3072}, {"121211", 7, 5120}}},
        {7, {{"311201", 1, 480}, {"220211", -1, 1920}, {"121211", -1, 768}, {"211211", 11, 3840},
             {"211112", -11, 3840}, {"112112", 1, 3840}}},
        {30, {{"211211", 7, 240}, {"121211", -1, 240}}},
        {31, {{"220211", 1, 10}, {"211211", 1, 5}, {"121211", 1, 5}}},
    };
    return p;
}

inline SplineCombination transform(const S3Element& s, const SplineCombination& c)
{
    SplineCombination out;
    for (const auto& [k, a] : c)
        add_term(out, s3_apply(s, k), a);
    return out;
}

} // namespace detail

struct NodalBasis {
    std::vector<SplineCombination> functions; ///< lambda_j^* in unweighted Q[K]
    std::vector<std::vector<Rational>> coeffs; ///< lambda_j^* in B_c, 39 x 39
};

/// The nodal basis dual to Lambda (standard directions): the v1 / e3 group
/// is stored, the rest follows from the S3 action.
inline const NodalBasis& nodal_basis()
{
    static const NodalBasis nb = [] {
        std::vector<std::optional<SplineCombination>> f(kDim);
        for (const auto& p : detail::printed_nodal()) {
            SplineCombination c;
            for (const auto& t : p.terms)
                detail::add_term(c, KnotMultiset::parse(t.knots), make_rational(t.num, t.den));
            f[p.index] = c;
        }
        const S3Element swap23{{0, 2, 1}};
        const S3Element swap12{{1, 0, 2}};
        const S3Element rot{{1, 2, 0}};
        // D_y jets at v1 mirror the D_x jets; q2 on e3 mirrors q1
        for (auto [from, to] : {std::pair{1, 2}, {3, 5}, {7, 8}, {6, 9}})
            f[to] = detail::transform(swap23, *f[from]);
        f[32] = detail::transform(swap12, *f[30]);
        for (int step = 1; step < 3; ++step)
            for (int s = 0; s < 10; ++s) {
                f[10 * step + s] = detail::transform(rot, *f[10 * (step - 1) + s]);
                if (s < 3)
                    f[lambda_index_edge(step, s)] = detail::transform(rot, *f[lambda_index_edge(step - 1, s)]);
            }
        NodalBasis out;
        const auto& spec = catalog('c');
        for (auto& g : f) {
            out.functions.push_back(*g);
            std::vector<Rational> c(spec.entries.size());
            for (const auto& [k, a] : *g) {
                int i = spec.index_of(k);
                if (i < 0)
                    throw DomainError("nodal function uses a spline outside B_c");
                c[i] = a / spec.entries[i].weight;
            }
            out.coeffs.push_back(std::move(c));
        }
        return out;
    }();
    return nb;
}

/// Nodal coefficients (in unweighted Q, B_c order) computed as the inverse of
/// (lambda_j(Q_i)), with x_v, y_v, u_e taken from the Cartesian frame.
inline RMatrix nodal_matrix(const RFrame& frame)
{
    const auto& spec = catalog('c');
    LambdaDirections d;
    for (int c = 0; c < 3; ++c) {
        d.x[c] = frame.direction_to_bary(frame.v[(c + 1) % 3] - frame.v[c]);
        d.y[c] = frame.direction_to_bary(frame.v[(c + 2) % 3] - frame.v[c]);
    }
    // u_e = opposite corner minus edge midpoint
    d.u[0] = frame.direction_to_bary(frame.v[2] - frame.v[3]);
    d.u[1] = frame.direction_to_bary(frame.v[0] - frame.v[4]);
    d.u[2] = frame.direction_to_bary(frame.v[1] - frame.v[5]);
    auto lambda = build_lambda(d);
    std::vector<KnotMultiset> ks;
    for (const auto& e : spec.entries)
        ks.push_back(e.knots);
    // a(i,j) = lambda_j(Q_i)
    RMatrix a = collocation(ks, lambda);
    return inverse(a);
}

// ---------------------------------------------------------------------------
// Triangulations

template <class T>
struct Triangulation {
    std::vector<Point2<T>> vertices;
    std::vector<std::array<int, 3>> triangles;
};

/// An edge of a triangulation with a < b, and the (triangle, local edge slot)
/// pairs containing it; slot s joins corners s and s+1 mod 3.
struct MeshEdge {
    int a = 0;
    int b = 0;
    std::vector<std::pair<int, int>> sides;

    bool interior() const { return sides.size() == 2; }
};

namespace detail {

template <class T>
T cross(const Point2<T>& p, const Point2<T>& q)
{
    return T(p.x * q.y - p.y * q.x);
}

template <class T>
int orient(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c, double tol)
{
    T v = cross<T>(b - a, c - a);
    if constexpr (std::is_same_v<T, double>) {
        double scale = std::max({std::fabs((b - a).x), std::fabs((b - a).y), std::fabs((c - a).x), std::fabs((c - a).y), 1e-300});
        if (std::fabs(v) <= tol * scale * scale)
            return 0;
    }
    return sign_of(v);
}

} // namespace detail

/// Edges of a conforming triangulation; rejects hanging vertices, edges with
/// more than two triangles and folded neighbours.
template <class T>
std::vector<MeshEdge> mesh_edges(const Triangulation<T>& mesh, double tol = 1e-12)
{
    const int nv = static_cast<int>(mesh.vertices.size());
    std::map<std::pair<int, int>, MeshEdge> edges;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (int v : tri)
            if (v < 0 || v >= nv)
                throw DimensionMismatch("triangle references a missing vertex");
        if (detail::orient(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]], tol) == 0)
            throw DegenerateTriangle("triangle has collinear vertices");
        for (int s = 0; s < 3; ++s) {
            int p = tri[s], q = tri[(s + 1) % 3];
            auto key = std::pair{std::min(p, q), std::max(p, q)};
            MeshEdge& e = edges[key];
            e.a = key.first;
            e.b = key.second;
            e.sides.push_back({static_cast<int>(t), s});
            if (e.sides.size() > 2)
                throw NonConformingMesh("edge shared by more than two triangles");
        }
    }
    std::vector<MeshEdge> out;
    for (auto& [key, e] : edges) {
        const auto& pa = mesh.vertices[e.a];
        const auto& pb = mesh.vertices[e.b];
        if (e.interior()) {
            // the two opposite corners must lie on different sides
            std::array<int, 2> side{};
            for (int h = 0; h < 2; ++h) {
                const auto& tri = mesh.triangles[e.sides[h].first];
                int opp = tri[(e.sides[h].second + 2) % 3];
                side[h] = detail::orient(pa, pb, mesh.vertices[opp], tol);
            }
            if (side[0] == side[1])
                throw NonConformingMesh("triangles overlap across an edge");
        }
        for (int v = 0; v < nv; ++v) {
            if (v == e.a || v == e.b)
                continue;
            const auto& pv = mesh.vertices[v];
            if (detail::orient(pa, pb, pv, tol) != 0)
                continue;
            T s1 = T((pv.x - pa.x) * (pb.x - pa.x) + (pv.y - pa.y) * (pb.y - pa.y));
            T s2 = T((pb.x - pa.x) * (pb.x - pa.x) + (pb.y - pa.y) * (pb.y - pa.y));
            if (s1 > T(0) && s1 < s2)
                throw NonConformingMesh("vertex lies inside an edge");
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// A spline in B_c on every triangle, in the triangle's own corner order.
template <class T>
struct GlobalSpline {
    Triangulation<T> mesh;
    std::vector<PS12Frame<T>> frames;
    std::vector<std::vector<T>> coeffs;
};

template <class T>
GlobalSpline<T> make_global_spline(const Triangulation<T>& mesh, std::vector<std::vector<T>> coeffs)
{
    if (coeffs.size() != mesh.triangles.size())
        throw DimensionMismatch("need one coefficient vector per triangle");
    GlobalSpline<T> g{mesh, {}, std::move(coeffs)};
    for (const auto& tri : mesh.triangles)
        g.frames.push_back(make_frame(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]));
    for (const auto& c : g.coeffs)
        if (c.size() != static_cast<std::size_t>(kDim))
            throw DimensionMismatch("each triangle needs 39 coefficients");
    return g;
}

/// Face forms of sum_i c_i w_i Q_i in macro barycentrics.
template <class T>
std::array<Form<T>, kNumFaces> spline_faces(const std::vector<T>& c)
{
    const auto& spec = catalog('c');
    std::array<Form<T>, kNumFaces> out;
    for (auto& f : out)
        f = Form<T>(5);
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        if (is_zero(c[i]))
            continue;
        T s = T(c[i] * scalar_from<T>(spec.entries[i].weight));
        const auto& p = pieces(spec.entries[i].knots);
        for (int f = 0; f < kNumFaces; ++f) {
            if constexpr (std::is_same_v<T, double>)
                out[f] += s * p.dface[f];
            else
                out[f] += s * p.face[f];
        }
    }
    return out;
}

namespace detail {

template <class T>
Bary3<T> clamp_bary(Bary3<T> b)
{
    if constexpr (std::is_same_v<T, double>) {
        for (int m = 0; m < 3; ++m)
            b[m] = std::max(b[m], 0.0);
        double s = b.sum();
        for (int m = 0; m < 3; ++m)
            b[m] /= s;
    }
    return b;
}

} // namespace detail

/// Value at p; the first triangle containing p (within tol) is used.
template <class T>
T eval_global(const GlobalSpline<T>& g, const Point2<T>& p, double tol = 1e-12)
{
    const auto& spec = catalog('c');
    for (std::size_t t = 0; t < g.frames.size(); ++t) {
        Bary3<T> b = g.frames[t].to_bary(p);
        bool inside = true;
        for (int m = 0; m < 3; ++m) {
            if constexpr (std::is_same_v<T, double>)
                inside = inside && b[m] >= -tol;
            else
                inside = inside && sgn(b[m]) >= 0;
        }
        if (inside)
            return eval_spline(spec, g.coeffs[t], detail::clamp_bary(b));
    }
    throw OutsideDomain("point lies outside the triangulation");
}

/// Largest jump of D_n^k across an interior edge for k = 0..r, sampled at
/// `samples` equispaced points; n is the edge normal.
template <class T>
std::vector<T> verify_smoothness(const GlobalSpline<T>& g, const MeshEdge& edge, int r, int samples = 11)
{
    if (!edge.interior())
        throw DomainError("smoothness is checked across interior edges only");
    if (r < 0 || r > 5 || samples < 2)
        throw InvalidDirection("need 0 <= r <= 5 and at least two samples");
    const Point2<T>& pa = g.mesh.vertices[edge.a];
    const Point2<T>& pb = g.mesh.vertices[edge.b];
    const Point2<T> normal{T(pa.y - pb.y), T(pb.x - pa.x)};
    std::array<std::vector<std::array<Form<T>, kNumFaces>>, 2> derivs;
    for (int h = 0; h < 2; ++h) {
        int t = edge.sides[h].first;
        Bary3<T> u = g.frames[t].direction_to_bary(normal);
        auto faces = spline_faces(g.coeffs[t]);
        for (int k = 0; k <= r; ++k) {
            derivs[h].push_back(faces);
            for (auto& f : faces)
                f = f.derivative(u);
        }
    }
    std::vector<T> jump(static_cast<std::size_t>(r + 1), T(0));
    for (int s = 0; s < samples; ++s) {
        T tt = T(T(s) / T(samples - 1));
        Point2<T> p = pa + tt * (pb - pa);
        std::array<Bary3<T>, 2> b;
        std::array<int, 2> face{};
        for (int h = 0; h < 2; ++h) {
            b[h] = detail::clamp_bary(g.frames[edge.sides[h].first].to_bary(p));
            face[h] = locate_face(b[h]);
            if (face[h] == kOutside)
                throw DomainError("edge sample outside its triangle");
        }
        for (int k = 0; k <= r; ++k) {
            T d = abs_value(T(derivs[0][k][face[0]](b[0]) - derivs[1][k][face[1]](b[1])));
            if (d > jump[k])
                jump[k] = d;
        }
    }
    return jump;
}

/// The C^3 side condition across an interior edge, evaluated on the first
/// triangle after rotating its corners so that the edge becomes [v1,v2].
template <class T>
T edge_c3_residual(const GlobalSpline<T>& g, const MeshEdge& edge)
{
    if (!edge.interior())
        throw DomainError("the C^3 condition needs an interior edge");
    const auto& spec = catalog('c');
    const auto [t, s] = edge.sides[0];
    const auto [t2, s2] = edge.sides[1];
    S3Element rho;
    for (int m = 0; m < 3; ++m)
        rho.perm[(s + m) % 3] = m;
    std::vector<T> c(kDim);
    for (int i = 0; i < kDim; ++i)
        c[spec.index_of(s3_apply(rho, spec.entries[i].knots))] = g.coeffs[t][i];
    const auto& tri = g.mesh.triangles[t];
    const auto& v = g.mesh.vertices;
    auto frame = make_frame(v[tri[s]], v[tri[(s + 1) % 3]], v[tri[(s + 2) % 3]]);
    Bary3<T> beta = frame.to_bary(v[g.mesh.triangles[t2][(s2 + 2) % 3]]);
    return eval_lincomb(smoothness_system(3).c3_condition, c, beta);
}

// ---------------------------------------------------------------------------
// Hermite interpolation

/// Data for C^2 Hermite interpolation. Vertex jets are Cartesian partials
/// [f, fx, fy, fxx, fxy, fyy, fxxx, fxxy, fxyy, fyyy]. On the edge from
/// vertex a to b (a < b) with n = (a.y - b.y, b.x - a.x), the entries are
/// [D_n^2 f at (3a+b)/4, D_n f at (a+b)/2, D_n^2 f at (a+3b)/4]; missing
/// edges carry zeros.
template <class T>
struct HermiteData {
    std::vector<std::array<T, 10>> vertex_jets;
    std::map<std::pair<int, int>, std::array<T, 3>> edge_values;
};

namespace detail {

/// Functionals on one triangle with Cartesian directions, Lambda order.
template <class T>
struct LocalFunctional {
    RBary point;
    std::vector<Bary3<T>> dirs;
};

template <class T>
std::vector<LocalFunctional<T>> cartesian_functionals(const Triangulation<T>& mesh, int t)
{
    const auto& tri = mesh.triangles[t];
    const auto& frame_v = mesh.vertices;
    PS12Frame<T> frame = make_frame(frame_v[tri[0]], frame_v[tri[1]], frame_v[tri[2]]);
    const Bary3<T> dx = frame.direction_to_bary({T(1), T(0)});
    const Bary3<T> dy = frame.direction_to_bary({T(0), T(1)});
    auto base = build_lambda();
    std::vector<LocalFunctional<T>> out;
    for (const auto& f : base) {
        LocalFunctional<T> lf{f.point, {}};
        if (f.kind == FunctionalKind::VertexJet) {
            for (int a = 0; a < f.i; ++a)
                lf.dirs.push_back(dx);
            for (int a = 0; a < f.j; ++a)
                lf.dirs.push_back(dy);
        } else {
            int p = tri[kLambdaEdges[f.site][0]], q = tri[kLambdaEdges[f.site][1]];
            const Point2<T>& pa = frame_v[std::min(p, q)];
            const Point2<T>& pb = frame_v[std::max(p, q)];
            Bary3<T> n = frame.direction_to_bary({T(pa.y - pb.y), T(pb.x - pa.x)});
            for (int a = 0; a < f.order(); ++a)
                lf.dirs.push_back(n);
        }
        out.push_back(std::move(lf));
    }
    return out;
}

template <class T>
T apply_local(const LocalFunctional<T>& f, const std::array<Form<T>, kNumFaces>& faces)
{
    Bary3<T> p = convert_bary<T>(f.point);
    Form<T> g = faces[locate_face(p)];
    for (const auto& d : f.dirs)
        g = g.derivative(d);
    return g(p);
}

} // namespace detail

/// The C^2 spline on the refined triangulation matching the Hermite data.
template <class T>
GlobalSpline<T> hermite_interpolate(const Triangulation<T>& mesh, const HermiteData<T>& data)
{
    if (data.vertex_jets.size() != mesh.vertices.size())
        throw DimensionMismatch("need one jet per vertex");
    auto edges = mesh_edges(mesh);
    for (const auto& [key, v] : data.edge_values) {
        bool found = std::any_of(edges.begin(), edges.end(), [&](const MeshEdge& e) { return e.a == key.first && e.b == key.second; });
        if (!found)
            throw DimensionMismatch("edge data for a pair that is not an edge");
    }
    std::vector<std::vector<T>> coeffs;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        auto mu = detail::cartesian_functionals(mesh, static_cast<int>(t));
        // b(j,i) = mu_j(w_i Q_i)
        Matrix<T> b(kDim, kDim);
        for (int i = 0; i < kDim; ++i) {
            std::vector<T> unit(kDim, T(0));
            unit[i] = T(1);
            auto faces = spline_faces(unit);
            for (int j = 0; j < kDim; ++j)
                b(j, i) = detail::apply_local(mu[j], faces);
        }
        std::vector<T> rhs;
        for (int c = 0; c < 3; ++c)
            for (int s = 0; s < 10; ++s)
                rhs.push_back(data.vertex_jets[tri[c]][s]);
        for (int e = 0; e < 3; ++e) {
            int p = tri[kLambdaEdges[e][0]], q = tri[kLambdaEdges[e][1]];
            std::array<T, 3> v{T(0), T(0), T(0)};
            if (auto it = data.edge_values.find({std::min(p, q), std::max(p, q)}); it != data.edge_values.end())
                v = it->second;
            if (p > q)
                std::swap(v[0], v[2]);
            rhs.insert(rhs.end(), v.begin(), v.end());
        }
        coeffs.push_back(solve(b, rhs));
    }
    return make_global_spline(mesh, std::move(coeffs));
}

/// Regular hexagon around v0 = (0,0) with triangles [v0, v_i, v_{i+1}].
inline Triangulation<double> hexagon_mesh()
{
    Triangulation<double> mesh;
    mesh.vertices.push_back({0.0, 0.0});
    for (int i = 1; i <= 6; ++i) {
        double a = 2 * std::numbers::pi * i / 6;
        mesh.vertices.push_back({std::cos(a), std::sin(a)});
    }
    mesh.triangles.push_back({0, 6, 1});
    for (int i = 1; i < 6; ++i)
        mesh.triangles.push_back({0, i, i + 1});
    return mesh;
}

/// The nodal function for the value at the hexagon centre.
inline GlobalSpline<double> hexagon_nodal_function()
{
    auto mesh = hexagon_mesh();
    HermiteData<double> data;
    data.vertex_jets.assign(mesh.vertices.size(), {});
    data.vertex_jets[0][0] = 1.0;
    return hermite_interpolate(mesh, data);
}

} // namespace ps12
