#pragma once

// Homogeneous ternary forms. On the macrotriangle (b1 + b2 + b3 = 1) a form
// of degree n is a polynomial of degree n in the barycentric coordinates;
// for a direction u with directional coordinates a (sum 0) the directional
// derivative is sum_m a_m dF/db_m.

#include "ps12/geometry.hpp"
#include "ps12/rational.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace ps12 {

template <class T>
class Form {
public:
    Form() = default;
    explicit Form(int degree) : degree_(degree), c_(static_cast<std::size_t>(size_for(degree)), T(0)) {}

    static Form constant(const T& value)
    {
        Form f(0);
        f.c_[0] = value;
        return f;
    }

    static Form linear(const Bary3<T>& l)
    {
        Form f(1);
        f.at(1, 0) = l[0];
        f.at(0, 1) = l[1];
        f.at(0, 0) = l[2];
        return f;
    }

    static int size_for(int degree) { return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2; }

    int degree() const { return degree_; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of b1^i b2^j b3^(n-i-j).
    T& at(int i, int j) { return c_[static_cast<std::size_t>(index(i, j))]; }
    const T& at(int i, int j) const { return c_[static_cast<std::size_t>(index(i, j))]; }

    const std::vector<T>& coefficients() const { return c_; }
    std::vector<T>& coefficients() { return c_; }

    bool is_zero() const
    {
        for (const auto& v : c_)
            if (!ps12::is_zero(v))
                return false;
        return true;
    }

    Form& operator+=(const Form& o)
    {
        assert(o.degree_ == degree_);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] += o.c_[k];
        return *this;
    }

    Form& operator-=(const Form& o)
    {
        assert(o.degree_ == degree_);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] -= o.c_[k];
        return *this;
    }

    Form& operator*=(const T& s)
    {
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const T& s, Form a) { return a *= s; }
    friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.c_ == b.c_; }

    Form times_linear(const Bary3<T>& l) const
    {
        Form out(degree_ + 1);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const T& v = at(i, j);
                if (ps12::is_zero(v))
                    continue;
                out.at(i + 1, j) += T(v * l[0]);
                out.at(i, j + 1) += T(v * l[1]);
                out.at(i, j) += T(v * l[2]);
            }
        return out;
    }

    Form operator*(const Form& o) const
    {
        Form out(degree_ + o.degree_);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const T& v = at(i, j);
                if (ps12::is_zero(v))
                    continue;
                for (int p = 0; p <= o.degree_; ++p)
                    for (int q = 0; p + q <= o.degree_; ++q)
                        out.at(i + p, j + q) += T(v * o.at(p, q));
            }
        return out;
    }

    /// Partial derivative with respect to b_(var+1).
    Form partial(int var) const
    {
        if (degree_ == 0)
            return Form(0);
        Form out(degree_ - 1);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                int k = degree_ - i - j;
                const T& v = at(i, j);
                if (var == 0 && i > 0)
                    out.at(i - 1, j) += T(v * T(i));
                else if (var == 1 && j > 0)
                    out.at(i, j - 1) += T(v * T(j));
                else if (var == 2 && k > 0)
                    out.at(i, j) += T(v * T(k));
            }
        return out;
    }

    /// Directional derivative sum_m a_m dF/db_m.
    Form derivative(const Bary3<T>& a) const
    {
        if (degree_ == 0)
            return Form(0);
        Form out(degree_ - 1);
        for (int m = 0; m < 3; ++m)
            if (!ps12::is_zero(a[m]))
                out += a[m] * partial(m);
        return out;
    }

    T operator()(const Bary3<T>& b) const
    {
        // Horner-free direct evaluation with cached powers
        std::vector<T> p1(static_cast<std::size_t>(degree_ + 1)), p2 = p1, p3 = p1;
        p1[0] = p2[0] = p3[0] = T(1);
        for (int e = 1; e <= degree_; ++e) {
            p1[e] = T(p1[e - 1] * b[0]);
            p2[e] = T(p2[e - 1] * b[1]);
            p3[e] = T(p3[e - 1] * b[2]);
        }
        T sum(0);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const T& v = at(i, j);
                if (!ps12::is_zero(v))
                    sum += T(v * p1[i] * p2[j] * p3[degree_ - i - j]);
            }
        return sum;
    }

    /// Substitutes b = l1*P0 + l2*P1 + l3*P2 and returns the form in (l1,l2,l3).
    Form substitute(const std::array<Bary3<T>, 3>& rows) const
    {
        // column m of rows gives b_m as a linear form in l
        std::array<Bary3<T>, 3> lin;
        for (int m = 0; m < 3; ++m)
            lin[m] = {rows[0][m], rows[1][m], rows[2][m]};
        std::array<std::vector<Form>, 3> pow;
        for (int m = 0; m < 3; ++m) {
            pow[m].push_back(Form::constant(T(1)));
            for (int e = 1; e <= degree_; ++e)
                pow[m].push_back(pow[m].back().times_linear(lin[m]));
        }
        Form out(degree_);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j) {
                const T& v = at(i, j);
                if (ps12::is_zero(v))
                    continue;
                Form term = pow[0][i] * pow[1][j] * pow[2][degree_ - i - j];
                term *= v;
                out += term;
            }
        return out;
    }

    /// Same form multiplied by (b1+b2+b3)^k, i.e. raised to degree n+k.
    Form elevate(int k) const
    {
        Form out = *this;
        Bary3<T> one{T(1), T(1), T(1)};
        for (int e = 0; e < k; ++e)
            out = out.times_linear(one);
        return out;
    }

    template <class U>
    Form<U> cast() const
    {
        Form<U> out(degree_);
        for (std::size_t k = 0; k < c_.size(); ++k)
            out.coefficients()[k] = static_cast<U>(to_double(c_[k]));
        return out;
    }

private:
    int index(int i, int j) const { return i * (2 * degree_ + 3 - i) / 2 + j; }

    int degree_ = 0;
    std::vector<T> c_ = std::vector<T>(1, T(0));
};

using RForm = Form<Rational>;

/// Linear form sum_m l_m b_m from a barycentric triple.
template <class T>
Form<T> linear_form(const Bary3<T>& l)
{
    return Form<T>::linear(l);
}

/// Exact division of a form by a linear form; empty if it does not divide.
inline std::optional<RForm> divide_by_linear(const RForm& f, const RBary& l)
{
    int n = f.degree();
    if (n == 0)
        return std::nullopt;
    // reorder variables so that the pivot variable has a nonzero coefficient
    int pivot = -1;
    for (int m = 0; m < 3; ++m)
        if (!is_zero(l[m])) {
            pivot = m;
            break;
        }
    if (pivot < 0)
        return std::nullopt;
    RForm q(n - 1);
    // process quotient monomials by decreasing exponent of the pivot variable
    int other1 = (pivot + 1) % 3, other2 = (pivot + 2) % 3;
    auto get = [](const RForm& g, std::array<int, 3> e) -> Rational {
        for (int x : e)
            if (x < 0)
                return Rational(0);
        return g.at(e[0], e[1]);
    };
    for (int p = n - 1; p >= 0; --p) {
        for (int a = 0; a <= n - 1 - p; ++a) {
            std::array<int, 3> e{};
            e[pivot] = p;
            e[other1] = a;
            e[other2] = n - 1 - p - a;
            std::array<int, 3> ef = e;
            ef[pivot] += 1;
            Rational rhs = get(f, ef);
            std::array<int, 3> e1 = ef;
            e1[other1] -= 1;
            rhs -= l[other1] * get(q, e1);
            std::array<int, 3> e2 = ef;
            e2[other2] -= 1;
            rhs -= l[other2] * get(q, e2);
            q.at(e[0], e[1]) = rhs / l[pivot];
        }
    }
    if (q.times_linear(l) == f)
        return q;
    return std::nullopt;
}

} // namespace ps12
