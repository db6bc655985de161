#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/field.hpp"
#include "quasitoric/rational.hpp"

namespace quasitoric {

/// Dense row-major matrix. Used with FieldElement, Rational and Integer.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty())
            return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                raise(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `height`).
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t height)
    {
        Matrix m(height, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != height)
                raise(ErrorKind::DimensionMismatch, "column length mismatch");
            for (std::size_t i = 0; i < height; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c.push_back((*this)(i, j));
        return c;
    }

    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> r;
        for (std::size_t i = 0; i < rows_; ++i)
            r.push_back(row(i));
        return r;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k)))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x)
    {
        if (a.cols_ != x.size())
            raise(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r[i] += a(i, j) * x[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero_matrix() const
    {
        for (const auto& x : data_)
            if (!is_zero(x))
                return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using FieldMatrix = Matrix<FieldElement>;
using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using Vector = std::vector<FieldElement>;

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        raise(ErrorKind::DimensionMismatch, "dot product length mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        raise(ErrorKind::DimensionMismatch, "vector length mismatch");
    std::vector<T> r(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += b[i];
    return r;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        raise(ErrorKind::DimensionMismatch, "vector length mismatch");
    std::vector<T> r(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] -= b[i];
    return r;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a)
{
    std::vector<T> r(a);
    for (auto& x : r)
        x = -x;
    return r;
}

template <class T>
std::vector<T> scaled(const std::vector<T>& a, const T& s)
{
    std::vector<T> r(a);
    for (auto& x : r)
        x *= s;
    return r;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v)
{
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

/// Result of exact Gauss–Jordan elimination.
template <class T>
struct Echelon {
    Matrix<T> rref;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    Matrix<T> transform;             // transform * input == rref
};

/// Reduced row echelon form with the leftmost-pivot rule. The first nonzero
/// entry in each column scan is taken as pivot, so the result is
/// deterministic for a given column order.
template <class T>
Echelon<T> row_reduce(const Matrix<T>& a)
{
    Echelon<T> e{a, {}, Matrix<T>::identity(a.rows())};
    Matrix<T>& m = e.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        e.transform.swap_rows(r, p);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t j = 0; j < m.rows(); ++j)
            e.transform(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            const T f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
            for (std::size_t j = 0; j < m.rows(); ++j)
                e.transform(i, j) -= f * e.transform(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

template <class T>
std::size_t rank(const Matrix<T>& a)
{
    return row_reduce(a).pivots.size();
}

/// Kernel basis read off the reduced echelon form: one vector per free
/// column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_from_echelon(const Echelon<T>& e)
{
    const auto& m = e.rref;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& a)
{
    return kernel_from_echelon(row_reduce(a));
}

template <class T>
struct LinearSolve {
    std::size_t rank = 0;
    std::vector<std::vector<T>> kernel_basis;
    std::optional<std::vector<T>> solution;
    /// When the system is inconsistent: y with y·A == 0 and y·b != 0.
    std::optional<std::vector<T>> certificate;
};

/// Rank, kernel and (optionally) a particular solution of A x = b.
/// The particular solution sets all free variables to zero.
template <class T>
LinearSolve<T> rank_kernel_solve(const Matrix<T>& a, const std::optional<std::vector<T>>& b = std::nullopt)
{
    auto e = row_reduce(a);
    LinearSolve<T> out;
    out.rank = e.pivots.size();
    out.kernel_basis = kernel_from_echelon(e);
    if (!b)
        return out;
    if (b->size() != a.rows())
        raise(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    std::vector<T> tb = e.transform * *b;
    for (std::size_t i = out.rank; i < a.rows(); ++i) {
        if (!is_zero(tb[i])) {
            out.certificate = e.transform.row(i);
            return out;
        }
    }
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < out.rank; ++i)
        x[e.pivots[i]] = tb[i];
    out.solution = std::move(x);
    return out;
}

/// Unique solution of a square nonsingular system, or nullopt if singular.
template <class T>
std::optional<std::vector<T>> solve_square(const Matrix<T>& a, const std::vector<T>& b)
{
    if (a.rows() != a.cols())
        raise(ErrorKind::DimensionMismatch, "solve_square needs a square matrix");
    auto r = rank_kernel_solve(a, std::optional<std::vector<T>>(b));
    if (r.rank != a.cols())
        return std::nullopt;
    return r.solution;
}

template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols())
        raise(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    T det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c)))
            ++p;
        if (p == n)
            return T(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        const T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c)))
                continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Rank of a list of vectors (as rows).
template <class T>
std::size_t rank_of(const std::vector<std::vector<T>>& vectors)
{
    if (vectors.empty())
        return 0;
    return rank(Matrix<T>::from_rows(vectors));
}

/// True iff u = t·v for some t > 0.
inline bool positively_proportional(const Vector& u, const Vector& v)
{
    if (u.size() != v.size())
        return false;
    std::optional<FieldElement> t;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (is_zero(v[i])) {
            if (!is_zero(u[i]))
                return false;
            continue;
        }
        if (!t)
            t = u[i] / v[i];
        else if (!(u[i] == *t * v[i]))
            return false;
    }
    return t && t->sign() > 0;
}

} // namespace quasitoric
