#pragma once

// Macrotriangle frame of the Powell-Sabin 12-split, barycentric coordinates,
// half-open point location and the S3 symmetry action on split vertices.
//
// Vertex labels are 0-based: index 0..9 stands for v1..v10, face index
// 0..11 for the faces 1..12.
//
//   v1,v2,v3   corners            v4,v5,v6   midpoints of [v1v2],[v2v3],[v1v3]
//   v7,v8,v9   inner midpoints (v4+v6)/2, (v4+v5)/2, (v5+v6)/2
//   v10        centroid
//
// Faces: 1..6 are the outer faces around the boundary, 7..12 tile the
// midpoint triangle [v4,v5,v6] around the centroid.

#include "ps12/rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <type_traits>
#include <vector>

namespace ps12 {

template <class T>
struct Point2 {
    T x{};
    T y{};

    friend Point2 operator+(const Point2& a, const Point2& b) { return {T(a.x + b.x), T(a.y + b.y)}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {T(a.x - b.x), T(a.y - b.y)}; }
    friend Point2 operator*(const T& s, const Point2& a) { return {T(s * a.x), T(s * a.y)}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

/// Barycentric (sum 1) or directional (sum 0) coordinates w.r.t. [v1,v2,v3].
template <class T>
struct Bary3 {
    std::array<T, 3> b{};

    Bary3() = default;
    Bary3(T b1, T b2, T b3) : b{std::move(b1), std::move(b2), std::move(b3)} {}

    T& operator[](int i) { return b[static_cast<std::size_t>(i)]; }
    const T& operator[](int i) const { return b[static_cast<std::size_t>(i)]; }
    T sum() const { return T(b[0] + b[1] + b[2]); }

    friend Bary3 operator+(const Bary3& p, const Bary3& q) { return {T(p[0] + q[0]), T(p[1] + q[1]), T(p[2] + q[2])}; }
    friend Bary3 operator-(const Bary3& p, const Bary3& q) { return {T(p[0] - q[0]), T(p[1] - q[1]), T(p[2] - q[2])}; }
    friend Bary3 operator*(const T& s, const Bary3& p) { return {T(s * p[0]), T(s * p[1]), T(s * p[2])}; }
    friend bool operator==(const Bary3& p, const Bary3& q) { return p.b == q.b; }
};

using RBary = Bary3<Rational>;

template <class T>
Bary3<T> convert_bary(const RBary& p)
{
    return {scalar_from<T>(p[0]), scalar_from<T>(p[1]), scalar_from<T>(p[2])};
}

inline constexpr int kNumVertices = 10;
inline constexpr int kNumFaces = 12;
inline constexpr int kOutside = -1;

/// Vertex triples of the 12 faces.
inline constexpr std::array<std::array<int, 3>, kNumFaces> kFaces{{
    {0, 3, 6}, {3, 1, 7}, {1, 4, 7}, {4, 2, 8}, {2, 5, 8}, {5, 0, 6},
    {3, 7, 9}, {7, 4, 9}, {4, 8, 9}, {8, 5, 9}, {5, 6, 9}, {6, 3, 9},
}};

/// Exact barycentric coordinates of v1..v10 with respect to [v1,v2,v3].
inline const std::array<RBary, kNumVertices>& split_vertices()
{
    static const std::array<RBary, kNumVertices> verts = [] {
        auto q = [](long n, long d) { return make_rational(n, d); };
        return std::array<RBary, kNumVertices>{{
            {q(1, 1), q(0, 1), q(0, 1)},
            {q(0, 1), q(1, 1), q(0, 1)},
            {q(0, 1), q(0, 1), q(1, 1)},
            {q(1, 2), q(1, 2), q(0, 1)},
            {q(0, 1), q(1, 2), q(1, 2)},
            {q(1, 2), q(0, 1), q(1, 2)},
            {q(1, 2), q(1, 4), q(1, 4)},
            {q(1, 4), q(1, 2), q(1, 4)},
            {q(1, 4), q(1, 4), q(1, 2)},
            {q(1, 3), q(1, 3), q(1, 3)},
        }};
    }();
    return verts;
}

namespace detail {

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
T det3(const Mat3<T>& m)
{
    return T(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

/// Inverse of a nonsingular 3x3 matrix (adjugate formula).
template <class T>
Mat3<T> inverse3(const Mat3<T>& m)
{
    T det = det3(m);
    Mat3<T> inv;
    inv[0][0] = T((m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det);
    inv[0][1] = T((m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det);
    inv[0][2] = T((m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det);
    inv[1][0] = T((m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det);
    inv[1][1] = T((m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det);
    inv[1][2] = T((m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det);
    inv[2][0] = T((m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det);
    inv[2][1] = T((m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det);
    inv[2][2] = T((m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det);
    return inv;
}

/// Rows are the macro barycentrics of the three given split vertices.
inline Mat3<Rational> vertex_matrix(const std::array<int, 3>& idx)
{
    const auto& sv = split_vertices();
    Mat3<Rational> m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m[r][c] = sv[idx[r]][c];
    return m;
}

/// Maps macro barycentrics b (row vector) to local barycentrics b * inv.
template <class T>
Bary3<T> apply_row(const Bary3<T>& b, const Mat3<T>& inv)
{
    Bary3<T> out;
    for (int c = 0; c < 3; ++c)
        out[c] = T(b[0] * inv[0][c] + b[1] * inv[1][c] + b[2] * inv[2][c]);
    return out;
}

template <class T>
const std::array<Mat3<T>, kNumFaces>& face_inverses()
{
    static const std::array<Mat3<T>, kNumFaces> table = [] {
        std::array<Mat3<T>, kNumFaces> out;
        for (int f = 0; f < kNumFaces; ++f) {
            auto inv = inverse3(vertex_matrix(kFaces[f]));
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    out[f][r][c] = scalar_from<T>(inv[r][c]);
        }
        return out;
    }();
    return table;
}

template <class T>
T snap(const T& v)
{
    if constexpr (std::is_same_v<T, double>)
        return std::fabs(v) < 1e-13 ? 0.0 : v;
    else
        return v;
}

} // namespace detail

/// Tie-break direction for points whose inward perturbation runs along an
/// edge; it is parallel to none of the nine lines of the split.
inline const RBary& tie_break_direction()
{
    static const RBary d{make_rational(3), make_rational(-1), make_rational(-2)};
    return d;
}

/// Half-open point location on macro barycentrics.
///
/// A point belongs to the face containing b + e*(v10 - b) + e^2*d for all
/// small e > 0, d = tie_break_direction(). Equivalently: for each face
/// barycentric l_m, accept if l_m > 0, or l_m == 0 and its derivative along
/// v10 - b is positive, or both vanish and its derivative along d is positive.
/// Every point of the closed macrotriangle lands in exactly one face; the
/// centroid goes to the face entered along d.
template <class T>
int locate_face(const Bary3<T>& b)
{
    for (int m = 0; m < 3; ++m)
        if (detail::snap(b[m]) < 0)
            return kOutside;
    const T third = scalar_from<T>(make_rational(1, 3));
    Bary3<T> toward{T(third - b[0]), T(third - b[1]), T(third - b[2])};
    Bary3<T> tie = convert_bary<T>(tie_break_direction());
    const auto& invs = detail::face_inverses<T>();
    for (int f = 0; f < kNumFaces; ++f) {
        auto lam = detail::apply_row(b, invs[f]);
        auto d1 = detail::apply_row(toward, invs[f]);
        auto d2 = detail::apply_row(tie, invs[f]);
        bool inside = true;
        for (int m = 0; m < 3 && inside; ++m) {
            int s = sign_of(detail::snap(lam[m]));
            if (s == 0)
                s = sign_of(detail::snap(d1[m]));
            if (s == 0)
                s = sign_of(d2[m]);
            inside = s > 0;
        }
        if (inside)
            return f;
    }
    if constexpr (std::is_same_v<T, double>) {
        // rounding left the point in no face: take the face it is deepest in
        int best = kOutside;
        double best_min = -1e-9;
        for (int f = 0; f < kNumFaces; ++f) {
            auto lam = detail::apply_row(b, invs[f]);
            double mn = std::min({lam[0], lam[1], lam[2]});
            if (mn > best_min) {
                best_min = mn;
                best = f;
            }
        }
        return best;
    }
    return kOutside;
}

/// A nondegenerate macrotriangle with its ten split vertices.
template <class T>
struct PS12Frame {
    std::array<Point2<T>, kNumVertices> v;
    T area{}; ///< signed area of [v1,v2,v3]

    Bary3<T> to_bary(const Point2<T>& p) const
    {
        const Point2<T>& a = v[0];
        const Point2<T>& b = v[1];
        const Point2<T>& c = v[2];
        T twice = T((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
        T b2 = T(((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / twice);
        T b3 = T(((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / twice);
        return {T(T(1) - b2 - b3), b2, b3};
    }

    /// Directional coordinates of a Cartesian vector.
    Bary3<T> direction_to_bary(const Point2<T>& u) const
    {
        Bary3<T> p = to_bary(u + v[0]);
        return {T(p[0] - T(1)), p[1], p[2]};
    }

    Point2<T> to_point(const Bary3<T>& b) const
    {
        return {T(b[0] * v[0].x + b[1] * v[1].x + b[2] * v[2].x),
                T(b[0] * v[0].y + b[1] * v[1].y + b[2] * v[2].y)};
    }

    /// Cartesian vector with the given directional coordinates.
    Point2<T> direction_to_point(const Bary3<T>& u) const
    {
        return {T(u[0] * v[0].x + u[1] * v[1].x + u[2] * v[2].x),
                T(u[0] * v[0].y + u[1] * v[1].y + u[2] * v[2].y)};
    }

    int locate(const Point2<T>& p) const { return locate_face(to_bary(p)); }

    /// Length of the longest macro edge (double precision).
    double longest_edge() const
    {
        double h = 0;
        for (int i = 0; i < 3; ++i) {
            auto d = v[(i + 1) % 3] - v[i];
            h = std::max(h, std::hypot(to_double(d.x), to_double(d.y)));
        }
        return h;
    }
};

using RFrame = PS12Frame<Rational>;
using DFrame = PS12Frame<double>;

template <class T>
PS12Frame<T> make_frame(const Point2<T>& v1, const Point2<T>& v2, const Point2<T>& v3)
{
    T twice = T((v2.x - v1.x) * (v3.y - v1.y) - (v3.x - v1.x) * (v2.y - v1.y));
    if (is_zero(twice))
        throw DegenerateTriangle("macrotriangle vertices are collinear");
    PS12Frame<T> f;
    f.area = T(twice / T(2));
    const auto& sv = split_vertices();
    std::array<Point2<T>, 3> corner{v1, v2, v3};
    for (int i = 0; i < kNumVertices; ++i) {
        Bary3<T> b = convert_bary<T>(sv[i]);
        f.v[i] = {T(b[0] * corner[0].x + b[1] * corner[1].x + b[2] * corner[2].x),
                  T(b[0] * corner[0].y + b[1] * corner[1].y + b[2] * corner[2].y)};
    }
    f.v[0] = v1;
    f.v[1] = v2;
    f.v[2] = v3;
    return f;
}

template <class T>
PS12Frame<double> to_double_frame(const PS12Frame<T>& f)
{
    return make_frame<double>({to_double(f.v[0].x), to_double(f.v[0].y)},
                              {to_double(f.v[1].x), to_double(f.v[1].y)},
                              {to_double(f.v[2].x), to_double(f.v[2].y)});
}

/// Reference frame (0,0),(1,0),(0,1).
inline RFrame unit_frame()
{
    return make_frame<Rational>({0, 0}, {1, 0}, {0, 1});
}

// ---------------------------------------------------------------------------
// S3 symmetries

/// Element of S3 acting on the corners: corner i is sent to perm[i].
struct S3Element {
    std::array<int, 3> perm{0, 1, 2};

    friend bool operator==(const S3Element&, const S3Element&) = default;

    /// (a * b)(i) = a(b(i))
    friend S3Element operator*(const S3Element& a, const S3Element& b)
    {
        return {{a.perm[b.perm[0]], a.perm[b.perm[1]], a.perm[b.perm[2]]}};
    }

    S3Element inverse() const
    {
        S3Element inv;
        for (int i = 0; i < 3; ++i)
            inv.perm[perm[i]] = i;
        return inv;
    }
};

/// All six elements: identity, two rotations, three reflections.
inline const std::array<S3Element, 6>& s3_elements()
{
    static const std::array<S3Element, 6> all{{
        {{0, 1, 2}}, {{1, 2, 0}}, {{2, 0, 1}}, {{1, 0, 2}}, {{0, 2, 1}}, {{2, 1, 0}},
    }};
    return all;
}

inline int midpoint_index(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    if (a == 0 && b == 1)
        return 3;
    if (a == 1 && b == 2)
        return 4;
    return 5; // {0,2}
}

/// Induced permutation of the ten split vertices.
inline std::array<int, kNumVertices> s3_vertex_permutation(const S3Element& s)
{
    std::array<int, kNumVertices> out{};
    for (int i = 0; i < 3; ++i) {
        out[i] = s.perm[i];
        out[6 + i] = 6 + s.perm[i]; // inner midpoint next to corner i
    }
    out[3] = midpoint_index(s.perm[0], s.perm[1]);
    out[4] = midpoint_index(s.perm[1], s.perm[2]);
    out[5] = midpoint_index(s.perm[0], s.perm[2]);
    out[9] = 9;
    return out;
}

/// Image of a barycentric triple under the symmetry (coordinates move with the corners).
template <class T>
Bary3<T> s3_apply(const S3Element& s, const Bary3<T>& b)
{
    Bary3<T> out;
    for (int i = 0; i < 3; ++i)
        out[s.perm[i]] = b[i];
    return out;
}

} // namespace ps12
