#pragma once

// Classification of the C^3 quintic simplex splines that reduce to boundary
// B-splines, the S3-invariant candidate bases built from them, and the filter
// pipeline that singles out the bases with a positive partition of unity and
// a Marsden identity with real linear factors.

#include "ps12/dual_functionals.hpp"
#include "ps12/factor.hpp"
#include "ps12/linalg.hpp"
#include "ps12/simplex_spline.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace ps12 {

/// One representative per S3 class, labelled a..t.
inline const std::array<std::pair<char, const char*>, 20>& class_representatives()
{
    static const std::array<std::pair<char, const char*>, 20> reps{{
        {'a', "600101"}, {'b', "500201"}, {'c', "501200"}, {'d', "410102"}, {'e', "410201"},
        {'f', "320201"}, {'g', "220211"}, {'h', "422000"}, {'i', "332000"}, {'j', "412100"},
        {'k', "322100"}, {'l', "141110"}, {'m', "132110"}, {'n', "222110"}, {'o', "221111"},
        {'p', "411200"}, {'q', "321200"}, {'r', "131210"}, {'s', "221210"}, {'t', "121211"},
    }};
    return reps;
}

struct S3Class {
    char label = '?';
    KnotMultiset representative;
    std::vector<KnotMultiset> members; ///< sorted, descending
};

/// Orbit of K under S3, sorted descending and without repetitions.
inline std::vector<KnotMultiset> s3_orbit(const KnotMultiset& k)
{
    std::set<KnotMultiset, std::greater<>> orbit;
    for (const auto& s : s3_elements())
        orbit.insert(s3_apply(s, k));
    return {orbit.begin(), orbit.end()};
}

/// C^3 quintic with knots among v1..v6, nonzero area, interior line
/// multiplicities at most 3 and boundary restrictions in the edge B-spline family.
inline bool is_admissible(const KnotMultiset& k)
{
    if (k.size() != 8)
        return false;
    for (int v = 6; v < kNumVertices; ++v)
        if (k.m[v] != 0)
            return false;
    if (!detail::independent_triple(k))
        return false;
    const auto& m = k.m;
    static constexpr std::array<std::array<int, 2>, 6> pairs{{{0, 4}, {2, 3}, {1, 5}, {3, 5}, {3, 4}, {4, 5}}};
    for (const auto& [a, b] : pairs)
        if (m[a] > 0 && m[b] > 0 && m[a] + m[b] > 3)
            return false;
    static constexpr std::array<std::array<int, 3>, 3> edges{{{0, 3, 1}, {1, 4, 2}, {0, 5, 2}}};
    for (const auto& [i, j, l] : edges) {
        if (m[i] + m[j] + m[l] != 7)
            continue;
        if (m[j] >= 3)
            return false;
        if (m[i] >= 1 && m[l] >= 1 && m[j] != 2)
            return false;
    }
    return true;
}

/// All admissible classes, ordered by label.
inline const std::vector<S3Class>& enumerate_admissible()
{
    static const std::vector<S3Class> classes = [] {
        std::set<KnotMultiset> seen;
        std::vector<S3Class> out;
        KnotMultiset k;
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == 5) {
                k.m[5] = left;
                if (is_admissible(k) && !seen.count(k)) {
                    S3Class c;
                    c.members = s3_orbit(k);
                    seen.insert(c.members.begin(), c.members.end());
                    for (const auto& [label, rep] : class_representatives())
                        if (std::find(c.members.begin(), c.members.end(), KnotMultiset::parse(rep)) != c.members.end()) {
                            c.label = label;
                            c.representative = KnotMultiset::parse(rep);
                        }
                    if (c.label == '?')
                        c.representative = c.members.front();
                    out.push_back(c);
                }
                return;
            }
            for (int v = 0; v <= left; ++v) {
                k.m[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, 8);
        std::sort(out.begin(), out.end(), [](const S3Class& a, const S3Class& b) { return a.label < b.label; });
        return out;
    }();
    return classes;
}

inline const S3Class& admissible_class(char label)
{
    for (const auto& c : enumerate_admissible())
        if (c.label == label)
            return c;
    throw UnknownBasis(std::string("no admissible class labelled ") + label);
}

/// Class label of an admissible knot set, or '?'.
inline char class_of(const KnotMultiset& k)
{
    for (const auto& c : enumerate_admissible())
        if (std::find(c.members.begin(), c.members.end(), k) != c.members.end())
            return c.label;
    return '?';
}

struct CandidateBasis {
    std::string classes;               ///< sorted class labels
    std::vector<KnotMultiset> elements;///< class members, in class order
};

inline CandidateBasis make_candidate(std::string classes)
{
    std::sort(classes.begin(), classes.end());
    CandidateBasis c;
    c.classes = classes;
    for (char l : classes) {
        const auto& m = admissible_class(l).members;
        c.elements.insert(c.elements.end(), m.begin(), m.end());
    }
    return c;
}

/// Boundary class choices: {a} x {b,c} x {e,p} x {f,q}.
inline std::vector<std::string> boundary_combinations()
{
    std::vector<std::string> out;
    for (char x : {'b', 'c'})
        for (char y : {'e', 'p'})
            for (char z : {'f', 'q'})
            {
                std::string s{'a', x, y, z};
                std::sort(s.begin(), s.end());
                out.push_back(s);
            }
    return out;
}

inline const std::string& interior_small_classes()
{
    static const std::string s = "ghilno";
    return s;
}

inline const std::string& interior_large_classes()
{
    static const std::string s = "djkmrst";
    return s;
}

namespace detail {

inline void choose(const std::string& pool, int k, std::size_t from, std::string& cur, std::vector<std::string>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        choose(pool, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::string> subsets(const std::string& pool, int k)
{
    std::vector<std::string> out;
    std::string cur;
    choose(pool, k, 0, cur, out);
    return out;
}

} // namespace detail

/// Interior class selections with 18 elements in total.
inline std::vector<std::string> interior_selections()
{
    std::vector<std::string> out;
    for (int large = 0; large <= 3; ++large) {
        int small = (18 - 6 * large) / 3;
        if (small > static_cast<int>(interior_small_classes().size()))
            continue;
        for (const auto& l : detail::subsets(interior_large_classes(), large))
            for (const auto& s : detail::subsets(interior_small_classes(), small))
                out.push_back(l + s);
    }
    return out;
}

inline std::vector<CandidateBasis> enumerate_candidates()
{
    std::vector<CandidateBasis> out;
    for (const auto& b : boundary_combinations())
        for (const auto& i : interior_selections())
            out.push_back(make_candidate(b + i));
    return out;
}

// ---------------------------------------------------------------------------
// Weights, dual polynomials, domain points

/// lambda_j(1) for the standard functionals.
inline std::vector<Rational> lambda_of_one()
{
    std::vector<Rational> out;
    auto one = constant_one_forms();
    for (const auto& f : build_lambda())
        out.push_back(apply_functional(f, one));
    return out;
}

/// Unique weights with sum_i w_i lambda_j(Q_i) = lambda_j(1).
inline std::vector<Rational> compute_weights(const std::vector<KnotMultiset>& basis)
{
    RMatrix a = collocation(basis);
    return solve(a.transpose(), lambda_of_one());
}

/// Bernstein polynomial B^5_a as a form, a given by Form index order.
inline std::vector<RForm> bernstein_forms(int degree = 5)
{
    std::vector<RForm> out;
    std::vector<Rational> fact(static_cast<std::size_t>(degree + 1), Rational(1));
    for (int i = 1; i <= degree; ++i)
        fact[i] = fact[i - 1] * i;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) {
            RForm f(degree);
            f.at(i, j) = fact[degree] / (fact[i] * fact[j] * fact[degree - i - j]);
            out.push_back(f);
        }
    return out;
}

/// Forms w_i Psi_i(c1,c2,c3) solving the Marsden collocation system.
inline std::vector<RForm> compute_dual_polys(const std::vector<KnotMultiset>& basis)
{
    RMatrix a = collocation(basis);
    auto lambda = build_lambda();
    auto bern = bernstein_forms();
    RMatrix rhs(kDim, static_cast<int>(bern.size()));
    for (int b = 0; b < rhs.cols(); ++b) {
        std::array<RForm, kNumFaces> faces;
        faces.fill(bern[b]);
        for (int j = 0; j < kDim; ++j)
            rhs(j, b) = apply_functional(lambda[j], faces);
    }
    RMatrix x = solve(a.transpose(), rhs);
    std::vector<RForm> out;
    for (int i = 0; i < kDim; ++i) {
        RForm f(5);
        for (int b = 0; b < x.cols(); ++b)
            f.coefficients()[b] = x(i, b);
        out.push_back(f);
    }
    return out;
}

/// Weight recovered from w*Psi: its value at (1,1,1).
inline Rational weight_of(const RForm& w_psi)
{
    return w_psi(RBary{Rational(1), Rational(1), Rational(1)});
}

/// Domain point (1/(5w)) grad(w Psi)(1,1,1).
inline RBary domain_point(const RForm& w_psi)
{
    Rational w = weight_of(w_psi);
    RBary one{Rational(1), Rational(1), Rational(1)};
    RBary out;
    for (int m = 0; m < 3; ++m)
        out[m] = w_psi.partial(m)(one) / (5 * w);
    return out;
}

// ---------------------------------------------------------------------------
// Pipeline

enum class SearchStage { Rank = 1, Nonnegative, Positive, Inside, EdgeCount, Split };

inline const char* stage_name(SearchStage s)
{
    switch (s) {
    case SearchStage::Rank: return "rank";
    case SearchStage::Nonnegative: return "nonnegative";
    case SearchStage::Positive: return "positive";
    case SearchStage::Inside: return "inside";
    case SearchStage::EdgeCount: return "edge8";
    case SearchStage::Split: return "split";
    }
    return "?";
}

inline SearchStage parse_stage(const std::string& s)
{
    for (int i = 1; i <= 6; ++i)
        if (s == stage_name(static_cast<SearchStage>(i)))
            return static_cast<SearchStage>(i);
    throw ParseError("unknown search stage '" + s + "'");
}

struct BasisData {
    std::string classes;
    std::vector<KnotMultiset> elements;
    std::vector<Rational> weights;
    std::vector<RForm> dual;       ///< w_i Psi_i
    std::vector<RBary> domain;
    std::vector<FactorResult> factors;
    char id = '?';                 ///< a..f for the six survivors
};

struct SearchReport {
    /// candidates, full rank, nonnegative, positive, inside, 8 per edge, split
    std::vector<long> counts;
    SearchStage last_stage = SearchStage::Split;
    std::vector<BasisData> survivors;        ///< bases passing the last stage run
    std::vector<BasisData> dropped_at_split; ///< reached the split stage but failed it
};

/// Class sets of the six bases.
inline const std::array<std::pair<char, const char*>, 6>& basis_class_sets()
{
    static const std::array<std::pair<char, const char*>, 6> sets{{
        {'a', "abeflnrs"}, {'b', "abeflors"}, {'c', "abefglrt"},
        {'d', "abelnqrs"}, {'e', "abeloqrs"}, {'f', "abeglqrt"},
    }};
    return sets;
}

namespace detail {

inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

/// Reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(RMatrix& a)
{
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
        int piv = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!is_zero(a(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        swap_rows(a, row, piv);
        Rational inv = 1 / a(row, c);
        for (int k = c; k < a.cols(); ++k)
            a(row, k) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || is_zero(a(r, c)))
                continue;
            Rational f = a(r, c);
            for (int k = c; k < a.cols(); ++k)
                a(r, k) -= f * a(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline bool rank_full(const CandidateBasis& cand, const std::map<std::string, std::pair<RMatrix, std::vector<int>>>& boundary)
{
    // the boundary combination is the four classes from the boundary pools
    std::string bkey;
    for (char l : cand.classes)
        if (std::string("abcefpq").find(l) != std::string::npos)
            bkey.push_back(l);
    const auto& [echelon, pivots] = boundary.at(bkey);
    std::vector<KnotMultiset> interior;
    for (char l : cand.classes)
        if (std::string("abcefpq").find(l) == std::string::npos) {
            const auto& m = admissible_class(l).members;
            interior.insert(interior.end(), m.begin(), m.end());
        }
    RMatrix rest = collocation(interior);
    for (int r = 0; r < rest.rows(); ++r)
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            Rational f = rest(r, pivots[p]);
            if (is_zero(f))
                continue;
            for (int c = 0; c < rest.cols(); ++c)
                rest(r, c) -= f * echelon(static_cast<int>(p), c);
        }
    return static_cast<int>(pivots.size()) + rank_fraction_free(rest) == kDim;
}

} // namespace detail

/// Runs the filter stages up to and including `last`.
inline SearchReport filter_pipeline(const std::vector<CandidateBasis>& candidates, SearchStage last = SearchStage::Split,
                                    int threads = 1)
{
    SearchReport report;
    report.last_stage = last;
    report.counts.push_back(static_cast<long>(candidates.size()));

    // warm the caches before any parallel work
    for (const auto& c : enumerate_admissible())
        for (const auto& k : c.members)
            functional_values(k);

    std::map<std::string, std::pair<RMatrix, std::vector<int>>> boundary;
    for (const auto& b : boundary_combinations()) {
        RMatrix m = collocation(make_candidate(b).elements);
        auto piv = detail::rref(m);
        boundary.emplace(b, std::make_pair(m, piv));
    }

    std::vector<char> full(candidates.size(), 0);
    detail::parallel_for(candidates.size(), threads,
                         [&](std::size_t i) { full[i] = detail::rank_full(candidates[i], boundary) ? 1 : 0; });
    std::vector<BasisData> alive;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (full[i])
            alive.push_back({candidates[i].classes, candidates[i].elements, {}, {}, {}, {}, '?'});
    report.counts.push_back(static_cast<long>(alive.size()));

    auto finish = [&](SearchStage s) {
        if (s == last) {
            report.survivors = alive;
            return true;
        }
        return false;
    };
    if (finish(SearchStage::Rank))
        return report;

    detail::parallel_for(alive.size(), threads, [&](std::size_t i) { alive[i].weights = compute_weights(alive[i].elements); });
    auto keep = [&](auto pred) {
        std::vector<BasisData> next;
        for (auto& b : alive)
            if (pred(b))
                next.push_back(std::move(b));
        alive = std::move(next);
        report.counts.push_back(static_cast<long>(alive.size()));
    };
    keep([](const BasisData& b) { return std::all_of(b.weights.begin(), b.weights.end(), [](const Rational& w) { return sgn(w) >= 0; }); });
    if (finish(SearchStage::Nonnegative))
        return report;
    keep([](const BasisData& b) { return std::all_of(b.weights.begin(), b.weights.end(), [](const Rational& w) { return sgn(w) > 0; }); });
    if (finish(SearchStage::Positive))
        return report;

    detail::parallel_for(alive.size(), threads, [&](std::size_t i) {
        alive[i].dual = compute_dual_polys(alive[i].elements);
        for (const auto& d : alive[i].dual)
            alive[i].domain.push_back(domain_point(d));
    });
    // inside the closed macrotriangle, and pairwise distinct so the points can carry a mesh
    keep([](const BasisData& b) {
        for (const auto& p : b.domain)
            if (sgn(p[0]) < 0 || sgn(p[1]) < 0 || sgn(p[2]) < 0)
                return false;
        std::set<std::array<Rational, 3>> seen;
        for (const auto& p : b.domain)
            if (!seen.insert({p[0], p[1], p[2]}).second)
                return false;
        return true;
    });
    if (finish(SearchStage::Inside))
        return report;
    keep([](const BasisData& b) {
        for (int m = 0; m < 3; ++m) {
            long on = std::count_if(b.domain.begin(), b.domain.end(), [m](const RBary& p) { return sgn(p[m]) == 0; });
            if (on != 8)
                return false;
        }
        return true;
    });
    if (finish(SearchStage::EdgeCount))
        return report;

    for (auto& b : alive)
        for (const auto& d : b.dual)
            b.factors.push_back(split_linear_factors(d));
    std::vector<BasisData> next;
    for (auto& b : alive) {
        bool ok = std::all_of(b.factors.begin(), b.factors.end(),
                              [](const FactorResult& f) { return f.status == SplitStatus::Split || f.status == SplitStatus::RealIrrational; });
        if (ok) {
            for (const auto& [id, set] : basis_class_sets())
                if (b.classes == set)
                    b.id = id;
            next.push_back(std::move(b));
        } else {
            report.dropped_at_split.push_back(std::move(b));
        }
    }
    alive = std::move(next);
    std::sort(alive.begin(), alive.end(), [](const BasisData& x, const BasisData& y) { return x.id < y.id; });
    report.counts.push_back(static_cast<long>(alive.size()));
    report.survivors = alive;
    return report;
}

inline SearchReport run_search(SearchStage last = SearchStage::Split, int threads = 1)
{
    return filter_pipeline(enumerate_candidates(), last, threads);
}

} // namespace ps12
