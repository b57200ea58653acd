#pragma once

// The 39 functionals dual to S^3_5 on one macrotriangle, their action on
// piecewise polynomials, collocation matrices and dimension counts.
//
// Canonical order: for each corner v1, v2, v3 the ten jets
//   (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3)
// of D_x^i D_y^j, then for each edge e3 = [v1,v2], e1 = [v2,v3], e2 = [v3,v1]
// the three cross derivatives D_u^2 at q1, D_u at the midpoint, D_u^2 at q2.

#include "ps12/geometry.hpp"
#include "ps12/linalg.hpp"
#include "ps12/simplex_spline.hpp"

#include <array>
#include <map>
#include <mutex>
#include <vector>

namespace ps12 {

inline constexpr int kDim = 39;

enum class FunctionalKind { VertexJet, EdgeQuarter, EdgeMid };

struct Functional {
    FunctionalKind kind = FunctionalKind::VertexJet;
    RBary point;                 ///< macro barycentrics of the evaluation point
    std::vector<RBary> dirs;     ///< directions applied, as directional coordinates
    int i = 0;                   ///< jet order along x (vertex jets)
    int j = 0;                   ///< jet order along y (vertex jets)
    int site = 0;                ///< corner 0..2, or edge slot 0..2 in e3, e1, e2 order

    int order() const { return static_cast<int>(dirs.size()); }
};

/// Directions used in the functionals; defaults follow the split's corners.
struct LambdaDirections {
    std::array<RBary, 3> x; ///< x_v for v1, v2, v3
    std::array<RBary, 3> y; ///< y_v for v1, v2, v3
    std::array<RBary, 3> u; ///< u_e for e3, e1, e2

    static LambdaDirections standard()
    {
        const auto& sv = split_vertices();
        LambdaDirections d;
        for (int c = 0; c < 3; ++c) {
            d.x[c] = sv[(c + 1) % 3] - sv[c];
            d.y[c] = sv[(c + 2) % 3] - sv[c];
        }
        // e3 = [v1,v2] opposite v3, e1 = [v2,v3] opposite v1, e2 = [v3,v1] opposite v2
        d.u[0] = sv[2] - sv[3];
        d.u[1] = sv[0] - sv[4];
        d.u[2] = sv[1] - sv[5];
        return d;
    }
};

/// Corner pairs (first, second) of the edges e3, e1, e2.
inline constexpr std::array<std::array<int, 2>, 3> kLambdaEdges{{{0, 1}, {1, 2}, {2, 0}}};

inline constexpr std::array<std::array<int, 2>, 10> kJetOrder{{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3},
}};

inline std::vector<Functional> build_lambda(const LambdaDirections& dirs = LambdaDirections::standard())
{
    const auto& sv = split_vertices();
    std::vector<Functional> out;
    for (int c = 0; c < 3; ++c)
        for (const auto& [i, j] : kJetOrder) {
            Functional f;
            f.kind = FunctionalKind::VertexJet;
            f.point = sv[c];
            f.i = i;
            f.j = j;
            f.site = c;
            for (int a = 0; a < i; ++a)
                f.dirs.push_back(dirs.x[c]);
            for (int a = 0; a < j; ++a)
                f.dirs.push_back(dirs.y[c]);
            out.push_back(f);
        }
    const Rational q = make_rational(1, 4);
    for (int e = 0; e < 3; ++e) {
        const RBary& a = sv[kLambdaEdges[e][0]];
        const RBary& b = sv[kLambdaEdges[e][1]];
        Functional q1{FunctionalKind::EdgeQuarter, Rational(3) * q * a + q * b, {dirs.u[e], dirs.u[e]}, 0, 0, e};
        Functional m{FunctionalKind::EdgeMid, make_rational(1, 2) * (a + b), {dirs.u[e]}, 0, 0, e};
        Functional q2{FunctionalKind::EdgeQuarter, q * a + Rational(3) * q * b, {dirs.u[e], dirs.u[e]}, 0, 0, e};
        out.push_back(q1);
        out.push_back(m);
        out.push_back(q2);
    }
    return out;
}

/// Apply a functional to a piecewise polynomial given by its face forms,
/// using the face that owns the evaluation point.
template <class T>
T apply_functional(const Functional& f, const std::array<Form<T>, kNumFaces>& faces)
{
    Bary3<T> p = convert_bary<T>(f.point);
    int face = locate_face(p);
    Form<T> g = faces[face];
    for (const auto& d : f.dirs)
        g = g.derivative(convert_bary<T>(d));
    return g(p);
}

/// Face forms of the constant function 1 (degree 5).
inline std::array<RForm, kNumFaces> constant_one_forms(int degree = 5)
{
    std::array<RForm, kNumFaces> out;
    for (auto& f : out)
        f = RForm::constant(Rational(1)).elevate(degree);
    return out;
}

/// lambda_j(Q[K]) for all 39 functionals with standard directions (cached).
inline const std::vector<Rational>& functional_values(const KnotMultiset& k)
{
    static std::mutex mtx;
    static std::map<KnotMultiset, std::vector<Rational>> cache;
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(k); it != cache.end())
            return it->second;
    }
    static const auto lambda = build_lambda();
    std::vector<Rational> vals;
    const auto& faces = pieces(k).face;
    for (const auto& f : lambda)
        vals.push_back(apply_functional(f, faces));
    std::lock_guard lock(mtx);
    return cache.emplace(k, std::move(vals)).first->second;
}

/// Values of an arbitrary functional list on Q[K].
inline std::vector<Rational> functional_values(const KnotMultiset& k, const std::vector<Functional>& lambda)
{
    std::vector<Rational> vals;
    const auto& faces = pieces(k).face;
    for (const auto& f : lambda)
        vals.push_back(apply_functional(f, faces));
    return vals;
}

/// Entry (i, j) = lambda_j(Q_i).
inline RMatrix collocation(const std::vector<KnotMultiset>& splines)
{
    RMatrix m(static_cast<int>(splines.size()), kDim);
    for (int i = 0; i < m.rows(); ++i) {
        const auto& v = functional_values(splines[i]);
        for (int j = 0; j < kDim; ++j)
            m(i, j) = v[j];
    }
    return m;
}

inline RMatrix collocation(const std::vector<KnotMultiset>& splines, const std::vector<Functional>& lambda)
{
    RMatrix m(static_cast<int>(splines.size()), static_cast<int>(lambda.size()));
    for (int i = 0; i < m.rows(); ++i) {
        auto v = functional_values(splines[i], lambda);
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = v[j];
    }
    return m;
}

/// Dimension of C^r splines of degree d on the 12-split of one triangle.
inline long dim_Sr_d(int r, int d)
{
    if (d < 0 || r < -1 || r > d)
        throw DomainError("dimension formula needs d >= 0 and d >= r >= -1");
    auto pos = [](long x) { return x > 0 ? x : 0L; };
    long twice = static_cast<long>(r + 1) * (r + 2) + 9L * (d - r) * (d - r + 1) + 3L * (d - 2 * r - 1) * pos(d - 2 * r);
    long sum = 0;
    for (int j = 1; j <= d - r; ++j)
        sum += pos(r - 2 * j + 1);
    return twice / 2 + sum;
}

/// Dimension of C^2 quintics on a 12-split triangulation with C^3
/// supersmoothness at vertices and inside macrotriangles.
inline long dim_global(long num_vertices, long num_edges)
{
    return 10 * num_vertices + 3 * num_edges;
}

} // namespace ps12
