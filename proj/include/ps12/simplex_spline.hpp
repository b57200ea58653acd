#pragma once

// Area-normalized simplex splines Q[K] on the 12-split.
//
// Every quantity here is expressed in macro barycentric coordinates, so the
// splines are independent of the shape of the macrotriangle. On each face a
// spline whose knots avoid v7, v8, v9 is a single polynomial; these pieces are
// computed once by the defining recurrence and cached. Knot sets that use v7,
// v8 or v9 have support edges crossing faces and are evaluated pointwise.

#include "ps12/bspline1d.hpp"
#include "ps12/form.hpp"
#include "ps12/geometry.hpp"
#include "ps12/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ps12 {

/// Multiplicities m1..m10 of the split vertices.
struct KnotMultiset {
    std::array<int, kNumVertices> m{};

    int size() const
    {
        int s = 0;
        for (int v : m)
            s += v;
        return s;
    }
    int degree() const { return size() - 3; }
    bool contains(int v) const { return m[v] > 0; }

    KnotMultiset without(int v) const
    {
        KnotMultiset k = *this;
        --k.m[v];
        return k;
    }

    KnotMultiset with(int v) const
    {
        KnotMultiset k = *this;
        ++k.m[v];
        return k;
    }

    /// Six digits m1..m6 when m7..m10 vanish, ten digits otherwise.
    std::string label() const
    {
        bool inner = m[6] || m[7] || m[8] || m[9];
        std::string s;
        for (int i = 0; i < (inner ? 10 : 6); ++i)
            s += std::to_string(m[i]);
        return s;
    }

    static KnotMultiset parse(std::string_view text)
    {
        if (text.size() != 6 && text.size() != 10)
            throw ParseError("knot label must have 6 or 10 digits: '" + std::string(text) + "'");
        KnotMultiset k;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("knot label must be digits: '" + std::string(text) + "'");
            k.m[i] = text[i] - '0';
        }
        return k;
    }

    friend auto operator<=>(const KnotMultiset&, const KnotMultiset&) = default;
};

inline KnotMultiset s3_apply(const S3Element& s, const KnotMultiset& k)
{
    auto p = s3_vertex_permutation(s);
    KnotMultiset out;
    for (int i = 0; i < kNumVertices; ++i)
        out.m[p[i]] = k.m[i];
    return out;
}

/// Rational combination of simplex splines.
using SplineCombination = std::map<KnotMultiset, Rational>;

namespace detail {

inline void add_term(SplineCombination& c, const KnotMultiset& k, const Rational& coef)
{
    if (is_zero(coef))
        return;
    auto [it, fresh] = c.emplace(k, coef);
    if (!fresh) {
        it->second += coef;
        if (is_zero(it->second))
            c.erase(it);
    }
}

inline std::vector<int> active_vertices(const KnotMultiset& k)
{
    std::vector<int> a;
    for (int i = 0; i < kNumVertices; ++i)
        if (k.m[i] > 0)
            a.push_back(i);
    return a;
}

/// Lowest-index affinely independent triple of active knots.
inline std::optional<std::array<int, 3>> independent_triple(const KnotMultiset& k)
{
    auto a = active_vertices(k);
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                std::array<int, 3> t{a[i], a[j], a[l]};
                if (!is_zero(det3(vertex_matrix(t))))
                    return t;
            }
    return std::nullopt;
}

inline bool uses_inner_midpoints(const KnotMultiset& k)
{
    return k.m[6] || k.m[7] || k.m[8];
}

/// Half-open membership of b in the triangle spanned by split vertices t,
/// with the same perturbation rule as locate_face.
template <class T>
bool in_half_open_triangle(const std::array<int, 3>& t, const Bary3<T>& b)
{
    auto inv_r = inverse3(vertex_matrix(t));
    Mat3<T> inv;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            inv[r][c] = scalar_from<T>(inv_r[r][c]);
    const T third = scalar_from<T>(make_rational(1, 3));
    Bary3<T> toward{T(third - b[0]), T(third - b[1]), T(third - b[2])};
    auto lam = apply_row(b, inv);
    auto d1 = apply_row(toward, inv);
    auto d2 = apply_row(convert_bary<T>(tie_break_direction()), inv);
    for (int m = 0; m < 3; ++m) {
        int s = sign_of(snap(lam[m]));
        if (s == 0)
            s = sign_of(snap(d1[m]));
        if (s == 0)
            s = sign_of(d2[m]);
        if (s <= 0)
            return false;
    }
    return true;
}

template <class T>
T eval_recursive(const KnotMultiset& k, const Bary3<T>& b, std::map<KnotMultiset, T>& memo)
{
    if (auto it = memo.find(k); it != memo.end())
        return it->second;
    T value(0);
    auto tri = independent_triple(k);
    if (tri) {
        auto vm = vertex_matrix(*tri);
        if (k.size() == 3) {
            if (in_half_open_triangle(*tri, b))
                value = scalar_from<T>(Rational(1 / abs(det3(vm))));
        } else {
            auto inv_r = inverse3(vm);
            for (int c = 0; c < 3; ++c) {
                T beta = T(b[0] * scalar_from<T>(inv_r[0][c]) + b[1] * scalar_from<T>(inv_r[1][c])
                           + b[2] * scalar_from<T>(inv_r[2][c]));
                if (!is_zero(beta))
                    value += T(beta * eval_recursive(k.without((*tri)[c]), b, memo));
            }
        }
    }
    memo.emplace(k, value);
    return value;
}

} // namespace detail

/// The polynomial pieces of Q[K] on the 12 faces, as forms in macro barycentrics.
struct SplinePieces {
    int degree = 0;
    std::array<RForm, kNumFaces> face;
    std::array<Form<double>, kNumFaces> dface;
};

namespace detail {

inline SplinePieces compute_pieces(const KnotMultiset& k);

inline std::recursive_mutex& pieces_mutex()
{
    static std::recursive_mutex m;
    return m;
}

inline std::map<KnotMultiset, std::unique_ptr<SplinePieces>>& pieces_cache()
{
    static std::map<KnotMultiset, std::unique_ptr<SplinePieces>> cache;
    return cache;
}

} // namespace detail

/// Cached per-face pieces. Requires m7 = m8 = m9 = 0 and |K| >= 3.
inline const SplinePieces& pieces(const KnotMultiset& k)
{
    if (k.size() < 3)
        throw TooFewKnots("simplex spline needs at least 3 knots");
    if (detail::uses_inner_midpoints(k))
        throw DomainError("piecewise form needs knots among v1..v6 and v10");
    std::lock_guard lock(detail::pieces_mutex());
    auto& cache = detail::pieces_cache();
    if (auto it = cache.find(k); it != cache.end())
        return *it->second;
    auto p = std::make_unique<SplinePieces>(detail::compute_pieces(k));
    return *cache.emplace(k, std::move(p)).first->second;
}

namespace detail {

inline SplinePieces compute_pieces(const KnotMultiset& k)
{
    SplinePieces out;
    out.degree = k.degree();
    for (auto& f : out.face)
        f = RForm(out.degree);
    auto tri = independent_triple(k);
    if (tri) {
        auto vm = vertex_matrix(*tri);
        if (k.size() == 3) {
            Rational value = 1 / abs(det3(vm));
            const auto& sv = split_vertices();
            auto inv = inverse3(vm);
            for (int f = 0; f < kNumFaces; ++f) {
                RBary c = make_rational(1, 3) * (sv[kFaces[f][0]] + sv[kFaces[f][1]] + sv[kFaces[f][2]]);
                auto lam = apply_row(c, inv);
                if (sgn(lam[0]) > 0 && sgn(lam[1]) > 0 && sgn(lam[2]) > 0)
                    out.face[f] = RForm::constant(value);
            }
        } else {
            auto inv = inverse3(vm);
            for (int c = 0; c < 3; ++c) {
                RBary l{inv[0][c], inv[1][c], inv[2][c]};
                const SplinePieces& sub = pieces(k.without((*tri)[c]));
                for (int f = 0; f < kNumFaces; ++f)
                    if (!sub.face[f].is_zero())
                        out.face[f] += sub.face[f].times_linear(l);
            }
        }
    }
    for (int f = 0; f < kNumFaces; ++f)
        out.dface[f] = out.face[f].template cast<double>();
    return out;
}

} // namespace detail

/// Q[K] at macro barycentrics b (zero outside the closed macrotriangle).
template <class T>
T eval(const KnotMultiset& k, const Bary3<T>& b)
{
    if (k.size() < 3)
        throw TooFewKnots("simplex spline needs at least 3 knots");
    if (detail::uses_inner_midpoints(k)) {
        std::map<KnotMultiset, T> memo;
        return detail::eval_recursive(k, b, memo);
    }
    int f = locate_face(b);
    if (f == kOutside)
        return T(0);
    if constexpr (std::is_same_v<T, double>)
        return pieces(k).dface[f](b);
    else
        return pieces(k).face[f](b);
}

/// Q[K] by the defining recurrence, without per-face caching.
template <class T>
T eval_recursive(const KnotMultiset& k, const Bary3<T>& b)
{
    if (k.size() < 3)
        throw TooFewKnots("simplex spline needs at least 3 knots");
    std::map<KnotMultiset, T> memo;
    return detail::eval_recursive(k, b, memo);
}

template <class T>
T eval(const PS12Frame<T>& frame, const KnotMultiset& k, const Point2<T>& p)
{
    return eval(k, frame.to_bary(p));
}

template <class T>
T eval(const SplineCombination& c, const Bary3<T>& b)
{
    T sum(0);
    for (const auto& [k, coef] : c)
        sum += T(scalar_from<T>(coef) * eval(k, b));
    return sum;
}

/// One differentiation step with explicit coefficients alpha over the split
/// vertices: D_u Q[K] = (|K|-3) sum_j alpha_j Q[K \ v_j].
inline SplineCombination derivative_step(const KnotMultiset& k, const std::array<Rational, kNumVertices>& alpha)
{
    Rational total = 0;
    for (int j = 0; j < kNumVertices; ++j) {
        total += alpha[j];
        if (!is_zero(alpha[j]) && k.m[j] == 0)
            throw InvalidDirection("direction uses a vertex that is not a knot");
    }
    if (!is_zero(total))
        throw InvalidDirection("direction coefficients must sum to zero");
    if (k.size() < 4)
        throw TooFewKnots("cannot differentiate a piecewise constant");
    SplineCombination out;
    for (int j = 0; j < kNumVertices; ++j)
        if (!is_zero(alpha[j]))
            detail::add_term(out, k.without(j), Rational(k.degree()) * alpha[j]);
    return out;
}

/// D_u^order Q[K] for a macro direction u (directional coordinates, sum 0),
/// as a combination of simplex splines of degree |K|-3-order.
inline SplineCombination derivative(const KnotMultiset& k, const RBary& u, int order)
{
    if (!is_zero(u.sum()))
        throw InvalidDirection("directional coordinates must sum to zero");
    if (order > k.degree())
        throw InvalidDirection("derivative order exceeds the degree");
    SplineCombination current{{k, Rational(1)}};
    for (int step = 0; step < order; ++step) {
        SplineCombination next;
        for (const auto& [kk, coef] : current) {
            auto tri = detail::independent_triple(kk);
            if (!tri)
                continue; // degenerate support, Q vanishes identically
            auto inv = detail::inverse3(detail::vertex_matrix(*tri));
            auto a = detail::apply_row(u, inv);
            std::array<Rational, kNumVertices> alpha{};
            for (int c = 0; c < 3; ++c)
                alpha[(*tri)[c]] = a[c];
            for (const auto& [sub, sc] : derivative_step(kk, alpha))
                detail::add_term(next, sub, coef * sc);
        }
        current = std::move(next);
    }
    return current;
}

/// Knot insertion of the split vertex y = sum_j beta_j v_j:
/// Q[K] = sum_j beta_j Q[(K + y) \ v_j].
inline SplineCombination insert_knot(const KnotMultiset& k, int y, const std::array<Rational, kNumVertices>& beta)
{
    Rational total = 0;
    RBary point{0, 0, 0};
    const auto& sv = split_vertices();
    for (int j = 0; j < kNumVertices; ++j) {
        total += beta[j];
        if (!is_zero(beta[j]) && k.m[j] == 0)
            throw InvalidWeights("insertion weights use a vertex that is not a knot");
        point = point + beta[j] * sv[j];
    }
    if (total != 1)
        throw InvalidWeights("insertion weights must sum to one");
    if (!(point == sv[y]))
        throw InvalidWeights("insertion weights do not represent the inserted vertex");
    SplineCombination out;
    KnotMultiset grown = k.with(y);
    for (int j = 0; j < kNumVertices; ++j)
        if (!is_zero(beta[j]))
            detail::add_term(out, grown.without(j), beta[j]);
    return out;
}

/// Per-face pieces of D_u^order Q[K].
inline std::array<RForm, kNumFaces> derivative_pieces(const KnotMultiset& k, const RBary& u, int order)
{
    auto out = pieces(k).face;
    for (int s = 0; s < order; ++s)
        for (auto& f : out)
            f = f.derivative(u);
    return out;
}

// ---------------------------------------------------------------------------
// Edges and lines of the split

/// Macro edge e runs from corner e to corner (e+1) mod 3; its midpoint is
/// v4, v5, v6 for e = 0, 1, 2.
struct MacroEdge {
    int start;
    int mid;
    int end;
};

inline MacroEdge macro_edge(int e)
{
    int s = e, t = (e + 1) % 3;
    return {s, midpoint_index(s, t), t};
}

/// The two faces along a macro edge, for parameters in [0,1/2] and [1/2,1].
inline std::array<int, 2> edge_faces(int e)
{
    auto me = macro_edge(e);
    std::array<int, 2> out{-1, -1};
    for (int f = 0; f < kNumFaces; ++f) {
        auto has = [&](int v) { return kFaces[f][0] == v || kFaces[f][1] == v || kFaces[f][2] == v; };
        if (has(me.start) && has(me.mid))
            out[0] = f;
        if (has(me.mid) && has(me.end))
            out[1] = f;
    }
    return out;
}

/// The nine lines spanned by edges of the split: macro edges 0..2, medians
/// 3..5 and midlines 6..8, each listed with all split vertices on it.
inline const std::array<std::vector<int>, 9>& split_lines()
{
    static const std::array<std::vector<int>, 9> lines{{
        {0, 3, 1}, {1, 4, 2}, {2, 5, 0},
        {0, 6, 9, 4}, {1, 7, 9, 5}, {2, 8, 9, 3},
        {3, 6, 5}, {3, 7, 4}, {4, 8, 5},
    }};
    return lines;
}

/// Number of continuous derivatives of Q[K] across the given split line.
inline int smoothness_order(const KnotMultiset& k, int line)
{
    int on = 0;
    for (int v : split_lines().at(static_cast<std::size_t>(line)))
        on += k.m[v];
    return k.size() - on - 2;
}

/// Integral of Q[K] over the plane: |area(T)| / C(|K|-1, 2).
template <class T>
T integral(const PS12Frame<T>& frame, const KnotMultiset& k)
{
    int n = k.size();
    if (n < 3)
        throw TooFewKnots("simplex spline needs at least 3 knots");
    return T(abs_value(frame.area) / T((n - 1) * (n - 2) / 2));
}

/// Restriction of a form along macro edge e, parameter t from start to end.
inline Poly1 restrict_form(const RForm& f, int e)
{
    auto me = macro_edge(e);
    int other = 3 - me.start - me.end;
    const int n = f.degree();
    Poly1 out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const Rational& c = f.at(i, j);
            if (is_zero(c))
                continue;
            std::array<int, 3> ex{i, j, n - i - j};
            if (ex[other] != 0)
                continue;
            Poly1 term{c};
            for (int a = 0; a < ex[me.start]; ++a)
                term = poly_mul_linear(term, Rational(1), Rational(-1));
            for (int a = 0; a < ex[me.end]; ++a)
                term = poly_mul_linear(term, Rational(0), Rational(1));
            out = poly_add(out, term);
        }
    return out;
}

/// Restriction of per-face pieces to macro edge e, from inside the macrotriangle.
inline EdgePoly restrict_pieces(const std::array<RForm, kNumFaces>& faces, int e)
{
    auto ef = edge_faces(e);
    return {{restrict_form(faces[ef[0]], e), restrict_form(faces[ef[1]], e)}};
}

/// B_index^degree of the edge family.
struct BSplineRef {
    int degree;
    int index;

    friend auto operator<=>(const BSplineRef&, const BSplineRef&) = default;
};

/// Q[K] on a macro edge as a combination of the edge B-splines.
struct EdgeRestriction {
    int degree = 0;
    std::vector<std::pair<Rational, BSplineRef>> terms;

    EdgePoly to_poly() const
    {
        EdgePoly p;
        for (const auto& [c, ref] : terms)
            p += c * edge_bspline(ref.degree, ref.index);
        return p;
    }
};

inline EdgeRestriction to_edge_restriction(const std::vector<Rational>& coeffs, int degree)
{
    EdgeRestriction r;
    r.degree = degree;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!is_zero(coeffs[j]))
            r.terms.push_back({coeffs[j], {degree, static_cast<int>(j) + 1}});
    return r;
}

/// Restriction to macro edge e via the knot-count rule: zero unless exactly
/// one knot lies off the edge, else area(T)/area([K]) times the B-spline on
/// the edge knots {0^m_start 0.5^m_mid 1^m_end}.
inline EdgeRestriction restrict_to_edge(const KnotMultiset& k, int e)
{
    auto me = macro_edge(e);
    const int d = k.degree();
    if (d < 1)
        throw TooFewKnots("edge restriction needs degree at least 1");
    int on = k.m[me.start] + k.m[me.mid] + k.m[me.end];
    EdgeRestriction r;
    r.degree = d;
    if (on != k.size() - 1)
        return r;
    int off = -1;
    for (int v = 0; v < kNumVertices; ++v)
        if (k.m[v] > 0 && v != me.start && v != me.mid && v != me.end)
            off = v;
    std::array<int, 3> order{me.start, me.mid, me.end};
    int first = -1, last = -1;
    for (int v : order)
        if (k.m[v] > 0) {
            if (first < 0)
                first = v;
            last = v;
        }
    if (first == last)
        return r; // all edge knots coincide: the support is a segment
    Rational ratio = 1 / abs(detail::det3(detail::vertex_matrix({first, last, off})));
    std::vector<Rational> knots;
    const Rational tk[3] = {Rational(0), make_rational(1, 2), Rational(1)};
    for (int s = 0; s < 3; ++s)
        for (int c = 0; c < k.m[order[s]]; ++c)
            knots.push_back(tk[s]);
    auto coeffs = project_edge(ratio * bspline(knots), d);
    if (!coeffs)
        throw DomainError("edge restriction of " + k.label() + " is outside the edge B-spline family");
    return to_edge_restriction(*coeffs, d);
}

// ---------------------------------------------------------------------------
// Symbolic directional derivatives restricted to an edge

/// Polynomial in the directional coordinates (a1,a2,a3) of u.
using AlphaPoly = std::map<std::array<int, 3>, Rational>;

inline AlphaPoly alpha_add(AlphaPoly a, const AlphaPoly& b, const Rational& s = Rational(1))
{
    for (const auto& [e, c] : b) {
        a[e] += s * c;
        if (is_zero(a[e]))
            a.erase(e);
    }
    return a;
}

inline AlphaPoly alpha_mul(const AlphaPoly& a, const AlphaPoly& b)
{
    AlphaPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out[e] += ca * cb;
            if (is_zero(out[e]))
                out.erase(e);
        }
    return out;
}

/// Canonical representative modulo a1 + a2 + a3 = 0 (eliminates a3).
inline AlphaPoly alpha_reduce(const AlphaPoly& p)
{
    AlphaPoly minus_sum{{{1, 0, 0}, Rational(-1)}, {{0, 1, 0}, Rational(-1)}};
    AlphaPoly out;
    for (const auto& [e, c] : p) {
        AlphaPoly term{{{e[0], e[1], 0}, c}};
        for (int k = 0; k < e[2]; ++k)
            term = alpha_mul(term, minus_sum);
        out = alpha_add(out, term);
    }
    return out;
}

template <class T>
T alpha_eval(const AlphaPoly& p, const Bary3<T>& a)
{
    T sum(0);
    for (const auto& [e, c] : p) {
        T term = scalar_from<T>(c);
        for (int m = 0; m < 3; ++m)
            for (int k = 0; k < e[m]; ++k)
                term = T(term * a[m]);
        sum += term;
    }
    return sum;
}

/// D_u^order Q[K] restricted to macro edge e for a symbolic direction u:
/// entry j is the coefficient of B_{j+1}^{d-order}.
inline std::vector<AlphaPoly> restricted_derivative(const KnotMultiset& k, int e, int order)
{
    const int d = k.degree();
    const int dd = d - order;
    if (dd < 1)
        throw InvalidDirection("restricted derivative order too high");
    std::vector<AlphaPoly> out(static_cast<std::size_t>(dd + 3));
    const auto& base = pieces(k).face;
    auto ef = edge_faces(e);
    for (int g1 = 0; g1 <= order; ++g1)
        for (int g2 = 0; g1 + g2 <= order; ++g2) {
            int g3 = order - g1 - g2;
            // multinomial order! / (g1! g2! g3!)
            Rational mult = 1;
            for (int i = 2; i <= order; ++i)
                mult *= i;
            for (int g : {g1, g2, g3})
                for (int i = 2; i <= g; ++i)
                    mult /= i;
            EdgePoly p;
            for (int half = 0; half < 2; ++half) {
                RForm f = base[ef[half]];
                for (int s = 0; s < g1; ++s)
                    f = f.partial(0);
                for (int s = 0; s < g2; ++s)
                    f = f.partial(1);
                for (int s = 0; s < g3; ++s)
                    f = f.partial(2);
                p.piece[half] = restrict_form(f, e);
            }
            if (p.is_zero())
                continue;
            auto coeffs = project_edge(p, dd);
            if (!coeffs)
                throw DomainError("restricted derivative outside the edge B-spline family");
            for (std::size_t j = 0; j < coeffs->size(); ++j)
                if (!is_zero((*coeffs)[j]))
                    out[j] = alpha_add(out[j], AlphaPoly{{{g1, g2, g3}, mult * (*coeffs)[j]}});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Bernstein form per face

/// Bernstein ordinates of Q[K] on each face, in the face's own barycentric
/// coordinates; ordinate (i,j) belongs to l1^i l2^j l3^(n-i-j) and is stored
/// at Form index order.
inline std::array<RForm, kNumFaces> per_face_bernstein(const KnotMultiset& k)
{
    const auto& p = pieces(k);
    const auto& sv = split_vertices();
    const int n = p.degree;
    std::vector<Rational> fact(static_cast<std::size_t>(n + 1), Rational(1));
    for (int i = 1; i <= n; ++i)
        fact[i] = fact[i - 1] * i;
    std::array<RForm, kNumFaces> out;
    for (int f = 0; f < kNumFaces; ++f) {
        RForm local = p.face[f].substitute({sv[kFaces[f][0]], sv[kFaces[f][1]], sv[kFaces[f][2]]});
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                local.at(i, j) *= fact[i] * fact[j] * fact[n - i - j] / fact[n];
        out[f] = local;
    }
    return out;
}

} // namespace ps12
