#pragma once

// Small dense linear algebra over the exact and floating layers.

#include "ps12/rational.hpp"

#include <algorithm>
#include <vector>

namespace ps12 {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), T(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix out(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const T& v = a(r, k);
                if (is_zero(v))
                    continue;
                for (int c = 0; c < b.cols_; ++c)
                    out(r, c) += T(v * b(k, c));
            }
        return out;
    }

    std::vector<T> operator*(const std::vector<T>& x) const
    {
        std::vector<T> y(static_cast<std::size_t>(rows_), T(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                y[static_cast<std::size_t>(r)] += T((*this)(r, c) * x[static_cast<std::size_t>(c)]);
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Maximum absolute row sum.
    T inf_norm() const
    {
        T best(0);
        for (int r = 0; r < rows_; ++r) {
            T s(0);
            for (int c = 0; c < cols_; ++c)
                s += abs_value((*this)(r, c));
            if (s > best)
                best = s;
        }
        return best;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using RMatrix = Matrix<Rational>;

/// Exact rank by fraction-free (Bareiss) elimination; rows are first scaled
/// to integers.
inline int rank_fraction_free(const RMatrix& m)
{
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (int c = 0; c < cols; ++c)
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(a[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k) {
                mpz_class v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(a[r][k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

namespace detail {

template <class T>
int pick_pivot(const Matrix<T>& a, int col, int from)
{
    int piv = -1;
    if constexpr (std::is_same_v<T, double>) {
        double best = 0;
        for (int r = from; r < a.rows(); ++r)
            if (std::fabs(a(r, col)) > best) {
                best = std::fabs(a(r, col));
                piv = r;
            }
        if (best < 1e-300)
            piv = -1;
    } else {
        for (int r = from; r < a.rows(); ++r)
            if (!is_zero(a(r, col))) {
                piv = r;
                break;
            }
    }
    return piv;
}

template <class T>
void swap_rows(Matrix<T>& a, int r1, int r2)
{
    if (r1 == r2)
        return;
    for (int c = 0; c < a.cols(); ++c)
        std::swap(a(r1, c), a(r2, c));
}

} // namespace detail

/// Solves A X = B for square nonsingular A; throws SingularSystem otherwise.
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b)
{
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n)
        throw DimensionMismatch("solve: incompatible shapes");
    for (int c = 0; c < n; ++c) {
        int piv = detail::pick_pivot(a, c, c);
        if (piv < 0)
            throw SingularSystem("matrix is singular");
        detail::swap_rows(a, c, piv);
        detail::swap_rows(b, c, piv);
        T inv = T(T(1) / a(c, c));
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c)))
                continue;
            T f = T(a(r, c) * inv);
            for (int k = c; k < n; ++k)
                a(r, k) -= T(f * a(c, k));
            for (int k = 0; k < b.cols(); ++k)
                b(r, k) -= T(f * b(c, k));
        }
    }
    for (int r = 0; r < n; ++r) {
        T inv = T(T(1) / a(r, r));
        for (int k = 0; k < b.cols(); ++k)
            b(r, k) *= inv;
    }
    return b;
}

template <class T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& rhs)
{
    Matrix<T> b(a.rows(), 1);
    for (int r = 0; r < a.rows(); ++r)
        b(r, 0) = rhs[static_cast<std::size_t>(r)];
    Matrix<T> x = solve(a, b);
    std::vector<T> out(static_cast<std::size_t>(a.rows()));
    for (int r = 0; r < a.rows(); ++r)
        out[static_cast<std::size_t>(r)] = x(r, 0);
    return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a)
{
    return solve(a, Matrix<T>::identity(a.rows()));
}

} // namespace ps12
