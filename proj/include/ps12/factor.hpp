#pragma once

// Splitting homogeneous ternary forms into linear factors.
//
// Strategy: trial division by the ten split-vertex forms c1..c10, then
// rational linear factors found from rational roots of the restrictions to
// the coordinate lines, then a real-splitting test on what is left (exact
// for quadratics, a real-root count refutation for higher degree).

#include "ps12/bspline1d.hpp"
#include "ps12/form.hpp"
#include "ps12/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ps12 {

enum class SplitStatus {
    Split,         ///< product of rational linear forms
    RealIrrational,///< splits over the reals, not over the rationals
    NoSplit,       ///< has an irreducible real factor of degree >= 2
    Undetermined,  ///< no rational factor left and real splitting not refuted
};

inline std::string to_string(SplitStatus s)
{
    switch (s) {
    case SplitStatus::Split: return "split";
    case SplitStatus::RealIrrational: return "real-irrational";
    case SplitStatus::NoSplit: return "no-split";
    case SplitStatus::Undetermined: return "undetermined";
    }
    return "?";
}

struct FactorResult {
    SplitStatus status = SplitStatus::NoSplit;
    Rational scalar{1};
    std::vector<RBary> factors; ///< linear forms, scaled to coefficient sum 1 when possible
    RForm remainder;            ///< cofactor without rational linear factors (degree 0 when split)
};

namespace detail {

inline int poly_degree(const Poly1& p)
{
    return static_cast<int>(poly_trim(p).size()) - 1;
}

inline Poly1 poly_derivative(const Poly1& p)
{
    Poly1 d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    return poly_trim(d);
}

/// Remainder of a modulo b (b nonzero).
inline Poly1 poly_rem(Poly1 a, const Poly1& b)
{
    a = poly_trim(a);
    Poly1 bt = poly_trim(b);
    const int db = static_cast<int>(bt.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        Rational f = a.back() / bt.back();
        for (int i = 0; i <= db; ++i)
            a[i + shift] -= f * bt[i];
        a = poly_trim(a);
    }
    return a;
}

inline Poly1 poly_gcd(Poly1 a, Poly1 b)
{
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly1 r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

/// Exact quotient of a by b, assuming b divides a.
inline Poly1 poly_div(Poly1 a, const Poly1& b)
{
    a = poly_trim(a);
    Poly1 bt = poly_trim(b);
    const int db = static_cast<int>(bt.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db)
        return {};
    Poly1 q(a.size() - static_cast<std::size_t>(db), Rational(0));
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        Rational f = a.back() / bt.back();
        q[shift] = f;
        for (int i = 0; i <= db; ++i)
            a[i + shift] -= f * bt[i];
        a = poly_trim(a);
    }
    return poly_trim(q);
}

inline Poly1 squarefree_part(const Poly1& p)
{
    Poly1 g = poly_gcd(p, poly_derivative(p));
    if (poly_degree(g) <= 0)
        return poly_trim(p);
    return poly_div(p, g);
}

inline std::vector<Poly1> sturm_sequence(const Poly1& p)
{
    std::vector<Poly1> seq{poly_trim(p), poly_derivative(p)};
    while (!seq.back().empty() && poly_degree(seq.back()) > 0) {
        Poly1 r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        seq.push_back(poly_scale(r, Rational(-1)));
    }
    return seq;
}

inline int sign_changes(const std::vector<Poly1>& seq, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(poly_eval(p, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

/// Number of distinct real roots in (a, b].
inline int count_roots(const std::vector<Poly1>& seq, const Rational& a, const Rational& b)
{
    return sign_changes(seq, a) - sign_changes(seq, b);
}

inline Rational root_bound(const Poly1& p)
{
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        m = std::max(m, Rational(abs(p[i] / p.back())));
    return m + 1;
}

/// Rational with the smallest denominator in [lo, hi] (lo <= hi).
inline Rational simplest_between(Rational lo, Rational hi)
{
    if (sgn(lo) <= 0 && sgn(hi) >= 0)
        return Rational(0);
    if (sgn(hi) < 0)
        return -simplest_between(-hi, -lo);
    // 0 < lo <= hi: continued-fraction walk
    mpz_class fl = lo.get_num() / lo.get_den();
    if (Rational(fl) == lo)
        return lo;
    if (Rational(fl + 1) <= hi)
        return Rational(fl + 1);
    Rational rest = simplest_between(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
    return Rational(fl) + 1 / rest;
}

/// All rational roots of p (distinct).
inline std::vector<Rational> rational_roots(const Poly1& input)
{
    Poly1 p = squarefree_part(input);
    std::vector<Rational> roots;
    if (poly_degree(p) <= 0)
        return roots;
    // any rational root u/v has v dividing the integer leading coefficient
    mpz_class den = 1;
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class lead = Rational(abs(p.back() * Rational(den))).get_num();
    Rational max_width = 1 / Rational(2 * lead * lead);
    auto seq = sturm_sequence(p);
    Rational bound = root_bound(p);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = count_roots(seq, a, b);
        if (n == 0)
            continue;
        if (n == 1 && b - a < max_width) {
            Rational cand = simplest_between(a, b);
            if (cand > a && sgn(poly_eval(p, cand)) == 0)
                roots.push_back(cand);
            continue;
        }
        Rational mid = (a + b) / 2;
        stack.push_back({a, mid});
        stack.push_back({mid, b});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Number of distinct real roots compared to the number of distinct roots.
inline bool all_roots_real(const Poly1& input)
{
    Poly1 p = squarefree_part(input);
    int deg = poly_degree(p);
    if (deg <= 0)
        return true;
    auto seq = sturm_sequence(p);
    Rational bound = root_bound(p);
    return count_roots(seq, -bound, bound) == deg;
}

/// Univariate restriction t -> F(a + t*b) for points a, b.
inline Poly1 restrict_to_line(const RForm& f, const RBary& a, const RBary& b)
{
    const int n = f.degree();
    Poly1 out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const Rational& c = f.at(i, j);
            if (is_zero(c))
                continue;
            Poly1 term{c};
            std::array<int, 3> e{i, j, n - i - j};
            for (int m = 0; m < 3; ++m)
                for (int k = 0; k < e[m]; ++k)
                    term = poly_mul_linear(term, a[m], b[m]);
            out = poly_add(out, term);
        }
    return out;
}

inline RBary normalize_linear(const RBary& l)
{
    Rational s = l.sum();
    if (is_zero(s))
        return l;
    return {l[0] / s, l[1] / s, l[2] / s};
}

/// Real splitting of a ternary quadratic form: rank <= 2 and not definite on its range.
inline bool quadratic_splits_over_reals(const RForm& q)
{
    // symmetric matrix of the form
    std::array<std::array<Rational, 3>, 3> m;
    m[0][0] = q.at(2, 0);
    m[1][1] = q.at(0, 2);
    m[2][2] = q.at(0, 0);
    m[0][1] = m[1][0] = q.at(1, 1) / 2;
    m[0][2] = m[2][0] = q.at(1, 0) / 2;
    m[1][2] = m[2][1] = q.at(0, 1) / 2;
    if (!is_zero(det3(m)))
        return false;
    // rank 1 is a square; rank 2 splits iff the nonzero eigenvalues differ in sign,
    // i.e. the sum of principal 2x2 minors is negative
    Rational minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
                      + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    return sgn(minors) <= 0;
}

} // namespace detail

/// The shorthand forms c1..c10 (index 0..9): coefficients are the split vertex barycentrics.
inline const std::array<RBary, kNumVertices>& shorthand_forms()
{
    return split_vertices();
}

/// Splits a homogeneous form into linear factors where possible.
inline FactorResult split_linear_factors(const RForm& poly)
{
    FactorResult out;
    out.remainder = poly;
    if (poly.is_zero()) {
        out.status = SplitStatus::NoSplit;
        return out;
    }
    Rational scale = 1; // product of the sums of the recorded factors
    auto record = [&](const RBary& l) {
        if (!is_zero(l.sum()))
            scale *= l.sum();
        out.factors.push_back(detail::normalize_linear(l));
    };
    auto divide_all = [&](const RBary& l) {
        while (out.remainder.degree() > 0) {
            auto q = divide_by_linear(out.remainder, l);
            if (!q)
                break;
            record(l);
            out.remainder = *q;
        }
    };
    for (const auto& s : shorthand_forms())
        divide_all(s);
    // rational linear factors from the coordinate-line restrictions
    bool found = true;
    while (found && out.remainder.degree() > 0) {
        found = false;
        const RBary e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
        std::vector<RBary> candidates;
        auto r12 = detail::rational_roots(detail::restrict_to_line(out.remainder, e2, e1)); // F(t,1,0)
        auto r13 = detail::rational_roots(detail::restrict_to_line(out.remainder, e3, e1)); // F(t,0,1)
        auto r23 = detail::rational_roots(detail::restrict_to_line(out.remainder, e3, e2)); // F(0,t,1)
        for (const auto& p : r12)
            for (const auto& q : r13)
                candidates.push_back({Rational(1), Rational(-p), Rational(-q)});
        for (const auto& q : r23)
            candidates.push_back({Rational(0), Rational(1), Rational(-q)});
        for (const RBary& e : {e1, e2, e3})
            candidates.push_back(e);
        for (const auto& l : candidates) {
            auto q = divide_by_linear(out.remainder, l);
            if (q) {
                record(l);
                out.remainder = *q;
                found = true;
                break;
            }
        }
    }
    out.scalar = scale;
    const int rd = out.remainder.degree();
    if (rd == 0) {
        out.status = SplitStatus::Split;
        out.scalar = scale * out.remainder.at(0, 0);
        return out;
    }
    if (rd == 1) {
        out.status = SplitStatus::Split; // unreachable: a linear remainder is itself a factor
        return out;
    }
    if (rd == 2) {
        out.status = detail::quadratic_splits_over_reals(out.remainder) ? SplitStatus::RealIrrational : SplitStatus::NoSplit;
        return out;
    }
    // a product of real linear forms restricts to a univariate polynomial with only real roots
    const RBary base{Rational(0), Rational(1), make_rational(2, 7)};
    const RBary dir{Rational(1), Rational(0), make_rational(-3, 11)};
    Poly1 line = detail::restrict_to_line(out.remainder, base, dir);
    if (detail::poly_degree(line) == rd && !detail::all_roots_real(line))
        out.status = SplitStatus::NoSplit;
    else
        out.status = SplitStatus::Undetermined;
    return out;
}

} // namespace ps12
