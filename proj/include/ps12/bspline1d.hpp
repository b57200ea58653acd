#pragma once

// Univariate splines on [0,1] with a single interior breakpoint at 1/2, the
// parameter domain of a macro edge. The family B_j^d (j = 1..d+3) uses knots
// j..j+d+1 of {0^(d+1), 1/2, 1/2, 1^(d+1)} and the usual partition-of-unity
// normalization.

#include "ps12/linalg.hpp"
#include "ps12/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ps12 {

/// Polynomial in t given by power-basis coefficients.
using Poly1 = std::vector<Rational>;

inline Poly1 poly_trim(Poly1 p)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
    return p;
}

inline Poly1 poly_add(const Poly1& a, const Poly1& b)
{
    Poly1 out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return poly_trim(out);
}

inline Poly1 poly_scale(const Poly1& a, const Rational& s)
{
    Poly1 out = a;
    for (auto& v : out)
        v *= s;
    return poly_trim(out);
}

/// (c0 + c1 t) * a
inline Poly1 poly_mul_linear(const Poly1& a, const Rational& c0, const Rational& c1)
{
    Poly1 out(a.size() + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += c0 * a[i];
        out[i + 1] += c1 * a[i];
    }
    return poly_trim(out);
}

inline Poly1 poly_mul(const Poly1& a, const Poly1& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly1 out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return poly_trim(out);
}

inline Rational poly_eval(const Poly1& p, const Rational& t)
{
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = v * t + *it;
    return v;
}

inline double poly_eval(const Poly1& p, double t)
{
    double v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = v * t + it->get_d();
    return v;
}

/// Piecewise polynomial: piece 0 on [0,1/2), piece 1 on [1/2,1].
struct EdgePoly {
    std::array<Poly1, 2> piece;

    friend bool operator==(const EdgePoly& a, const EdgePoly& b)
    {
        return poly_trim(a.piece[0]) == poly_trim(b.piece[0]) && poly_trim(a.piece[1]) == poly_trim(b.piece[1]);
    }

    EdgePoly& operator+=(const EdgePoly& o)
    {
        for (int k = 0; k < 2; ++k)
            piece[k] = poly_add(piece[k], o.piece[k]);
        return *this;
    }

    friend EdgePoly operator*(const Rational& s, const EdgePoly& p)
    {
        return {{poly_scale(p.piece[0], s), poly_scale(p.piece[1], s)}};
    }

    bool is_zero() const { return poly_trim(piece[0]).empty() && poly_trim(piece[1]).empty(); }

    template <class T>
    T operator()(const T& t) const
    {
        return poly_eval(piece[t < T(make_rational(1, 2)) ? 0 : 1], t);
    }
};

/// B-spline of degree knots.size()-2 on the given nondecreasing knots, all in {0, 1/2, 1}.
inline EdgePoly bspline(const std::vector<Rational>& knots)
{
    const Rational half = make_rational(1, 2);
    const int n = static_cast<int>(knots.size());
    // degree-0 pieces
    std::vector<EdgePoly> b(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        if (knots[i] == knots[i + 1])
            continue;
        if (knots[i] == 0 && knots[i + 1] == half)
            b[i].piece[0] = {Rational(1)};
        else if (knots[i] == half && knots[i + 1] == 1)
            b[i].piece[1] = {Rational(1)};
        else if (knots[i] == 0 && knots[i + 1] == 1)
            b[i].piece = {Poly1{Rational(1)}, Poly1{Rational(1)}};
        else
            throw DomainError("knots must lie in {0, 1/2, 1}");
    }
    for (int p = 1; p <= n - 2; ++p) {
        std::vector<EdgePoly> next(static_cast<std::size_t>(n - 1 - p));
        for (int i = 0; i + p + 1 < n; ++i) {
            EdgePoly out;
            Rational d1 = knots[i + p] - knots[i];
            if (!is_zero(d1))
                for (int k = 0; k < 2; ++k)
                    out.piece[k] = poly_add(out.piece[k], poly_mul_linear(b[i].piece[k], -knots[i] / d1, 1 / d1));
            Rational d2 = knots[i + p + 1] - knots[i + 1];
            if (!is_zero(d2))
                for (int k = 0; k < 2; ++k)
                    out.piece[k] = poly_add(out.piece[k], poly_mul_linear(b[i + 1].piece[k], knots[i + p + 1] / d2, -1 / d2));
            next[i] = out;
        }
        b = std::move(next);
    }
    return b.empty() ? EdgePoly{} : b[0];
}

/// Knot vector {0^(d+1), 1/2, 1/2, 1^(d+1)}.
inline std::vector<Rational> edge_knots(int d)
{
    std::vector<Rational> k(static_cast<std::size_t>(d + 1), Rational(0));
    k.push_back(make_rational(1, 2));
    k.push_back(make_rational(1, 2));
    for (int i = 0; i <= d; ++i)
        k.push_back(Rational(1));
    return k;
}

/// B_j^d, j = 1..d+3.
inline EdgePoly edge_bspline(int d, int j)
{
    auto all = edge_knots(d);
    if (j < 1 || j > d + 3)
        throw DomainError("B-spline index out of range");
    return bspline(std::vector<Rational>(all.begin() + (j - 1), all.begin() + (j + d + 1)));
}

/// Coefficients of p in the family B_1^d..B_{d+3}^d, or nothing if p is not
/// in their span.
inline std::optional<std::vector<Rational>> project_edge(const EdgePoly& p, int d)
{
    const int n = d + 3;
    const int m = 2 * (d + 1);
    RMatrix a(m, n);
    std::vector<Rational> rhs(static_cast<std::size_t>(m), Rational(0));
    for (int j = 0; j < n; ++j) {
        EdgePoly b = edge_bspline(d, j + 1);
        for (int k = 0; k < 2; ++k)
            for (int e = 0; e <= d; ++e) {
                const auto& pc = b.piece[k];
                a(k * (d + 1) + e, j) = e < static_cast<int>(pc.size()) ? pc[e] : Rational(0);
            }
    }
    for (int k = 0; k < 2; ++k) {
        const auto& pc = p.piece[k];
        if (static_cast<int>(poly_trim(pc).size()) > d + 1)
            return std::nullopt;
        for (int e = 0; e < static_cast<int>(pc.size()) && e <= d; ++e)
            rhs[k * (d + 1) + e] = pc[e];
    }
    // normal equations; a has full column rank
    RMatrix at = a.transpose();
    std::vector<Rational> x = solve(at * a, at * rhs);
    if (a * x != rhs)
        return std::nullopt;
    return x;
}

} // namespace ps12
