#pragma once

// The six symmetric simplex spline bases of S^3_5 with a Marsden identity:
// embedded weights and dual polynomials per class representative, completion
// to all 39 elements by S3, canonical ordering, polynomial reproduction and
// the quasi-interpolant built from dual points.

#include "ps12/basis_search.hpp"
#include "ps12/form.hpp"
#include "ps12/geometry.hpp"
#include "ps12/simplex_spline.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ps12 {

struct BasisEntry {
    KnotMultiset knots;
    char cls = '?';
    Rational weight;
    std::array<RBary, 5> dual_points; ///< factors of Psi as barycentric points
    RBary domain;                     ///< mean of the dual points
    RForm w_psi;                      ///< w * Psi as a quintic form in (c1,c2,c3)
};

struct BasisSpec {
    char id = '?';
    std::string classes;
    std::vector<BasisEntry> entries; ///< canonical order, 39 entries

    int index_of(const KnotMultiset& k) const
    {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].knots == k)
                return static_cast<int>(i);
        return -1;
    }

    std::vector<KnotMultiset> knots() const
    {
        std::vector<KnotMultiset> out;
        for (const auto& e : entries)
            out.push_back(e.knots);
        return out;
    }

    std::vector<Rational> weights() const
    {
        std::vector<Rational> out;
        for (const auto& e : entries)
            out.push_back(e.weight);
        return out;
    }
};

namespace detail {

/// One table row: representative class, weight, and five shorthand indices
/// (1..10, meaning c1..c10) whose product is Psi.
struct CatalogRow {
    char cls;
    long num;
    long den;
    std::array<int, 5> factors;
};

inline const std::map<char, std::vector<CatalogRow>>& catalog_rows()
{
    static const std::map<char, std::vector<CatalogRow>> rows{
        {'a',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'f', 1, 2, {1, 1, 2, 4, 4}}, {'l', 1, 1, {2, 2, 2, 4, 5}}, {'n', 3, 4, {1, 2, 2, 3, 10}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'s', 3, 4, {1, 2, 2, 4, 10}}}},
        {'b',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'f', 1, 2, {1, 1, 2, 4, 4}}, {'l', 1, 1, {2, 2, 2, 4, 5}}, {'o', 3, 4, {1, 2, 3, 4, 10}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'s', 3, 4, {1, 2, 2, 4, 10}}}},
        {'c',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'f', 1, 2, {1, 1, 2, 4, 4}}, {'g', 3, 4, {1, 2, 4, 4, 10}}, {'l', 1, 1, {2, 2, 2, 4, 5}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'t', 3, 4, {1, 2, 4, 5, 10}}}},
        {'d',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'l', 1, 1, {2, 2, 2, 4, 5}}, {'n', 3, 4, {1, 2, 2, 3, 10}}, {'q', 1, 1, {1, 1, 2, 4, 4}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'s', 1, 4, {1, 2, 2, 3, 4}}}},
        {'e',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'l', 1, 1, {2, 2, 2, 4, 5}}, {'o', 3, 4, {1, 2, 3, 4, 10}}, {'q', 1, 1, {1, 1, 2, 4, 4}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'s', 1, 4, {1, 2, 2, 3, 4}}}},
        {'f',
         {{'a', 1, 4, {1, 1, 1, 1, 1}}, {'b', 1, 4, {1, 1, 1, 1, 4}}, {'e', 1, 2, {1, 1, 1, 4, 4}},
          {'g', 1, 4, {1, 2, 3, 4, 4}}, {'l', 1, 1, {2, 2, 2, 4, 5}}, {'q', 1, 1, {1, 1, 2, 4, 4}},
          {'r', 1, 2, {1, 2, 2, 4, 5}}, {'t', 1, 2, {1, 2, 3, 4, 8}}}},
    };
    return rows;
}

inline RForm product_form(const Rational& scale, const std::array<RBary, 5>& points)
{
    RForm f = RForm::constant(scale);
    for (const auto& p : points)
        f = f.times_linear(p);
    return f;
}

inline RBary mean_point(const std::array<RBary, 5>& points)
{
    RBary out{Rational(0), Rational(0), Rational(0)};
    for (const auto& p : points)
        for (int m = 0; m < 3; ++m)
            out[m] += p[m] / 5;
    return out;
}

/// Number of knots off the edge [v1,v2].
inline int knots_off_first_edge(const KnotMultiset& k)
{
    return k.size() - k.m[0] - k.m[1] - k.m[3];
}

} // namespace detail

/// Orders entries by the number of knots off [v1,v2], then by the domain
/// point's second and third barycentric coordinate.
inline void canonical_order(std::vector<BasisEntry>& entries)
{
    std::sort(entries.begin(), entries.end(), [](const BasisEntry& a, const BasisEntry& b) {
        int oa = detail::knots_off_first_edge(a.knots);
        int ob = detail::knots_off_first_edge(b.knots);
        if (oa != ob)
            return oa < ob;
        if (a.domain[1] != b.domain[1])
            return a.domain[1] < b.domain[1];
        if (a.domain[2] != b.domain[2])
            return a.domain[2] < b.domain[2];
        return a.knots > b.knots;
    });
}

/// Builds a spec from table rows by applying every symmetry to each representative.
inline BasisSpec build_spec(char id)
{
    const auto& all = detail::catalog_rows();
    auto it = all.find(id);
    if (it == all.end())
        throw UnknownBasis(std::string("unknown basis '") + id + "'");
    const auto& sv = split_vertices();
    BasisSpec spec;
    spec.id = id;
    for (const auto& row : it->second) {
        spec.classes.push_back(row.cls);
        const S3Class& c = admissible_class(row.cls);
        std::array<RBary, 5> rep_points;
        for (int r = 0; r < 5; ++r)
            rep_points[r] = sv[row.factors[r] - 1];
        Rational w = make_rational(row.num, row.den);
        std::map<KnotMultiset, BasisEntry> images;
        for (const auto& s : s3_elements()) {
            BasisEntry e;
            e.knots = s3_apply(s, c.representative);
            e.cls = row.cls;
            e.weight = w;
            for (int r = 0; r < 5; ++r)
                e.dual_points[r] = s3_apply(s, rep_points[r]);
            std::sort(e.dual_points.begin(), e.dual_points.end(), [](const RBary& a, const RBary& b) {
                return std::tie(a[0], a[1], a[2]) > std::tie(b[0], b[1], b[2]);
            });
            e.domain = detail::mean_point(e.dual_points);
            e.w_psi = detail::product_form(w, e.dual_points);
            auto [pos, fresh] = images.emplace(e.knots, e);
            if (!fresh && !(pos->second.w_psi == e.w_psi))
                throw DomainError("table row is not invariant under the stabilizer of its representative");
        }
        for (auto& [k, e] : images)
            spec.entries.push_back(std::move(e));
    }
    std::sort(spec.classes.begin(), spec.classes.end());
    canonical_order(spec.entries);
    return spec;
}

/// Embedded spec for one of the six bases (built once).
inline const BasisSpec& catalog(char id)
{
    static const std::map<char, BasisSpec> specs = [] {
        std::map<char, BasisSpec> m;
        for (char c : std::string("abcdef"))
            m.emplace(c, build_spec(c));
        return m;
    }();
    auto it = specs.find(id);
    if (it == specs.end())
        throw UnknownBasis(std::string("unknown basis '") + id + "'");
    return it->second;
}

inline const std::string& basis_ids()
{
    static const std::string ids = "abcdef";
    return ids;
}

/// Spec assembled from searched data; dual points come from the split factors.
inline BasisSpec spec_from_search(const BasisData& b)
{
    BasisSpec spec;
    spec.id = b.id;
    spec.classes = b.classes;
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        BasisEntry e;
        e.knots = b.elements[i];
        e.cls = class_of(e.knots);
        e.weight = b.weights.at(i);
        e.w_psi = b.dual.at(i);
        e.domain = b.domain.empty() ? domain_point(e.w_psi) : b.domain[i];
        if (i < b.factors.size() && b.factors[i].status == SplitStatus::Split) {
            const auto& fs = b.factors[i].factors;
            for (int r = 0; r < 5; ++r)
                e.dual_points[r] = fs.at(static_cast<std::size_t>(r));
            std::sort(e.dual_points.begin(), e.dual_points.end(), [](const RBary& x, const RBary& y) {
                return std::tie(x[0], x[1], x[2]) > std::tie(y[0], y[1], y[2]);
            });
        }
        spec.entries.push_back(std::move(e));
    }
    canonical_order(spec.entries);
    return spec;
}

// ---------------------------------------------------------------------------
// Marsden identity and polynomial reproduction

struct MarsdenSides {
    Rational lhs;
    Rational rhs;
};

/// Both sides of (b1 c1 + b2 c2 + b3 c3)^5 = sum_i w_i Q_i(b) Psi_i(c).
inline MarsdenSides marsden_eval(const BasisSpec& spec, const RBary& b, const RBary& c)
{
    Rational base = b[0] * c[0] + b[1] * c[1] + b[2] * c[2];
    MarsdenSides out;
    out.lhs = base * base * base * base * base;
    out.rhs = 0;
    for (const auto& e : spec.entries) {
        Rational q = eval(e.knots, b);
        if (!is_zero(q))
            out.rhs += q * e.w_psi(c);
    }
    return out;
}

/// Coefficients a_i with sum_i a_i Q_i = B^5_{i1 i2 i3}, i.e. [c^alpha](w_i Psi_i).
inline std::vector<Rational> bernstein_expansion(const BasisSpec& spec, int i1, int i2, int i3)
{
    if (i1 < 0 || i2 < 0 || i3 < 0 || i1 + i2 + i3 != 5)
        throw DomainError("Bernstein exponents must be nonnegative and sum to 5");
    std::vector<Rational> out;
    for (const auto& e : spec.entries)
        out.push_back(e.w_psi.at(i1, i2));
    return out;
}

/// Same polynomial in the normalized basis S_i = w_i Q_i: coefficients [c^alpha] Psi_i.
inline std::vector<Rational> bernstein_spline_coeffs(const BasisSpec& spec, int i1, int i2, int i3)
{
    auto q = bernstein_expansion(spec, i1, i2, i3);
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] /= spec.entries[i].weight;
    return q;
}

// ---------------------------------------------------------------------------
// Quasi-interpolation

/// Point weights of L_i: sum over nonempty subsets of the dual points of
/// k^5/5! (-1)^(k-1) at the subset mean; coinciding points are merged.
inline std::vector<std::pair<RBary, Rational>> quasi_functional(const BasisEntry& e)
{
    std::map<std::array<Rational, 3>, Rational> acc;
    for (int mask = 1; mask < 32; ++mask) {
        int k = __builtin_popcount(static_cast<unsigned>(mask));
        RBary p{Rational(0), Rational(0), Rational(0)};
        for (int r = 0; r < 5; ++r)
            if (mask & (1 << r))
                for (int m = 0; m < 3; ++m)
                    p[m] += e.dual_points[r][m];
        for (int m = 0; m < 3; ++m)
            p[m] /= k;
        Rational c = make_rational(static_cast<long>(k) * k * k * k * k, 120);
        if (k % 2 == 0)
            c = -c;
        acc[{p[0], p[1], p[2]}] += c;
    }
    std::vector<std::pair<RBary, Rational>> out;
    for (const auto& [p, c] : acc)
        if (!is_zero(c))
            out.push_back({RBary{p[0], p[1], p[2]}, c});
    return out;
}

/// Sum of |weights| over all 31 subsets before merging: 275/3.
inline Rational quasi_norm_bound()
{
    Rational s = 0;
    const long binom[6] = {1, 5, 10, 10, 5, 1};
    for (long k = 1; k <= 5; ++k)
        s += make_rational(k * k * k * k * k * binom[k], 120);
    return s;
}

/// L_i(f) for every basis element; f takes macro barycentrics.
template <class T>
std::vector<T> quasi_interpolant_coeffs(const BasisSpec& spec, const std::function<T(const Bary3<T>&)>& f)
{
    std::vector<T> out;
    for (const auto& e : spec.entries) {
        T sum(0);
        for (const auto& [p, c] : quasi_functional(e))
            sum += T(scalar_from<T>(c) * f(convert_bary<T>(p)));
        out.push_back(sum);
    }
    return out;
}

} // namespace ps12
