#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ps12 {

/// Exact rational scalar used by the exact layer.
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PS12_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

PS12_DEFINE_ERROR(DegenerateTriangle);
PS12_DEFINE_ERROR(TooFewKnots);
PS12_DEFINE_ERROR(InvalidDirection);
PS12_DEFINE_ERROR(InvalidWeights);
PS12_DEFINE_ERROR(DomainError);
PS12_DEFINE_ERROR(SingularSystem);
PS12_DEFINE_ERROR(UnknownBasis);
PS12_DEFINE_ERROR(OutsideDomain);
PS12_DEFINE_ERROR(UnsupportedBasis);
PS12_DEFINE_ERROR(BoundViolated);
PS12_DEFINE_ERROR(DimensionMismatch);
PS12_DEFINE_ERROR(NonConformingMesh);
PS12_DEFINE_ERROR(ParseError);
PS12_DEFINE_ERROR(UnknownTable);

#undef PS12_DEFINE_ERROR

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" text (lowest terms, q > 0; integers print without "/1").
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

/// Parses "p", "p/q" or a finite decimal such as "-0.125" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational literal");
    auto dot = s.find('.');
    auto exp_pos = s.find_first_of("eE");
    if (dot == std::string::npos && exp_pos == std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0)
            throw ParseError("malformed rational literal '" + s + "'");
        r.canonicalize();
        return r;
    }
    // decimal (optionally with exponent): exact conversion of the written digits
    std::string mantissa = exp_pos == std::string::npos ? s : s.substr(0, exp_pos);
    long exponent = 0;
    if (exp_pos != std::string::npos) {
        try {
            exponent = std::stol(s.substr(exp_pos + 1));
        } catch (const std::exception&) {
            throw ParseError("malformed exponent in '" + s + "'");
        }
    }
    bool negative = !mantissa.empty() && mantissa[0] == '-';
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+'))
        mantissa.erase(0, 1);
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char ch : mantissa) {
        if (ch == '.') {
            if (seen_dot)
                throw ParseError("malformed decimal '" + s + "'");
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_dot)
                ++frac_digits;
        } else {
            throw ParseError("malformed decimal '" + s + "'");
        }
    }
    if (digits.empty())
        throw ParseError("malformed decimal '" + s + "'");
    mpz_class num(digits, 10);
    mpz_class ten = 10;
    long scale = exponent - frac_digits;
    Rational r(num);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(scale)));
    if (scale >= 0)
        r *= Rational(p);
    else
        r /= Rational(p);
    if (negative)
        r = -r;
    r.canonicalize();
    return r;
}

// Scalar traits shared by the exact and floating layers.

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

inline Rational abs_value(const Rational& r) { return abs(r); }
inline double abs_value(double x) { return std::fabs(x); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sign_of(const Rational& r) { return sgn(r); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }

template <class T>
T scalar_from(const Rational& r);

template <>
inline Rational scalar_from<Rational>(const Rational& r) { return r; }

template <>
inline double scalar_from<double>(const Rational& r) { return r.get_d(); }

} // namespace ps12
