#pragma once

// Seeded random rationals and points shared by the test suites.

#include "ps12/ps12.hpp"

#include <random>

namespace ps12::testing {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

/// Uniform in [lo, hi] with the given denominator.
inline Rational random_rational(long lo, long hi, long den = 997)
{
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return make_rational(d(rng()), den);
}

/// Random point of the closed macrotriangle in barycentrics.
inline RBary random_bary(long den = 211)
{
    std::uniform_int_distribution<long> d(0, den);
    long a = d(rng()), b = d(rng());
    if (a + b > den) {
        a = den - a;
        b = den - b;
    }
    return {make_rational(a, den), make_rational(b, den), make_rational(den - a - b, den)};
}

/// Random point strictly inside the macrotriangle.
inline RBary random_interior_bary(long den = 211)
{
    for (;;) {
        RBary b = random_bary(den);
        if (sgn(b[0]) > 0 && sgn(b[1]) > 0 && sgn(b[2]) > 0)
            return b;
    }
}

inline double random_double(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Bary3<double> to_double(const RBary& b) { return convert_bary<double>(b); }

/// A rational frame of generic shape.
inline RFrame skew_frame()
{
    return make_frame<Rational>({make_rational(1, 3), make_rational(-1, 5)}, {make_rational(5, 2), make_rational(1, 7)},
                                {make_rational(2, 3), make_rational(9, 4)});
}

} // namespace ps12::testing
