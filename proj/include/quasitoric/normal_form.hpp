#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "quasitoric/matrix.hpp"

namespace quasitoric {

namespace detail {

inline void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) -= q * m(src, j);
}

inline void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) -= q * m(i, src);
}

inline void negate_row(IntegerMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

inline Integer fdiv(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer tdiv(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace detail

struct HermiteForm {
    IntegerMatrix h; // row Hermite normal form
    IntegerMatrix u; // unimodular, u * a == h
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).
inline HermiteForm hnf(const IntegerMatrix& a)
{
    HermiteForm out{a, IntegerMatrix::identity(a.rows()), {}};
    IntegerMatrix& h = out.h;
    IntegerMatrix& u = out.u;
    const std::size_t m = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c))))
                    best = i;
            if (best == m)
                break;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0)
                    continue;
                Integer q = detail::fdiv(h(i, c), h(r, c));
                detail::add_row_multiple(h, i, r, q);
                detail::add_row_multiple(u, i, r, q);
                if (h(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0) {
            detail::negate_row(h, r);
            detail::negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = detail::fdiv(h(i, c), h(r, c));
            detail::add_row_multiple(h, i, r, q);
            detail::add_row_multiple(u, i, r, q);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

struct SmithForm {
    IntegerMatrix d; // diagonal, d11 | d22 | …, nonnegative
    IntegerMatrix u; // unimodular (rows)
    IntegerMatrix v; // unimodular (columns), u * a * v == d
    std::vector<Integer> diagonal() const
    {
        std::vector<Integer> r;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
            r.push_back(d(i, i));
        return r;
    }
};

inline SmithForm snf(const IntegerMatrix& a)
{
    SmithForm out{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
    IntegerMatrix& d = out.d;
    const std::size_t m = d.rows(), n = d.cols();

    auto move_smallest_to = [&](std::size_t t) {
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            return false;
        d.swap_rows(t, bi);
        out.u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        out.v.swap_cols(t, bj);
        return true;
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        if (!move_smallest_to(t))
            break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = detail::tdiv(d(i, t), d(t, t));
                detail::add_row_multiple(d, i, t, q);
                detail::add_row_multiple(out.u, i, t, q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = detail::tdiv(d(t, j), d(t, t));
                detail::add_col_multiple(d, j, t, q);
                detail::add_col_multiple(out.v, j, t, q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                move_smallest_to(t);
                continue;
            }
            // Divisibility: fold an offending row into row t and go again.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            detail::add_row_multiple(d, t, bad, Integer(-1));
            detail::add_row_multiple(out.u, t, bad, Integer(-1));
        }
        if (d(t, t) < 0) {
            detail::negate_row(d, t);
            detail::negate_row(out.u, t);
        }
    }
    return out;
}

/// Some integral x with A x == b, or nullopt. Free HNF coordinates are set
/// to zero, which makes the choice deterministic.
inline std::optional<std::vector<Integer>> integer_solve(const IntegerMatrix& a, const std::vector<Integer>& b)
{
    if (b.size() != a.rows())
        raise(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    // U Aᵀ = H, so A Uᵀ = Hᵀ; substitute x = Uᵀ y.
    const HermiteForm hf = hnf(a.transpose());
    const IntegerMatrix& h = hf.h;
    const std::size_t r = hf.rank();
    std::vector<Integer> y(a.cols(), Integer(0));
    std::size_t next = 0; // index of the next pivot row of H
    for (std::size_t j = 0; j < a.rows(); ++j) {
        Integer acc = b[j];
        const std::size_t known = next;
        for (std::size_t i = 0; i < known; ++i)
            acc -= h(i, j) * y[i];
        if (next < r && hf.pivots[next] == j) {
            if (acc % h(next, j) != 0)
                return std::nullopt;
            y[next] = acc / h(next, j);
            ++next;
        } else if (acc != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(a.cols(), Integer(0));
    for (std::size_t k = 0; k < a.cols(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            x[k] += hf.u(i, k) * y[i];
    return x;
}

/// Z-basis of {x ∈ Zⁿ : A x = 0}, returned as the rows of its Hermite form.
inline std::vector<std::vector<Integer>> integer_kernel(const IntegerMatrix& a)
{
    const HermiteForm hf = hnf(a.transpose());
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = hf.rank(); i < hf.u.rows(); ++i)
        rows.push_back(hf.u.row(i));
    if (rows.empty())
        return rows;
    const HermiteForm canon = hnf(IntegerMatrix::from_rows(rows));
    std::vector<std::vector<Integer>> basis;
    for (std::size_t i = 0; i < canon.rank(); ++i)
        basis.push_back(canon.h.row(i));
    return basis;
}

/// Scales each row of a rational matrix by the lcm of its denominators.
inline IntegerMatrix clear_denominators(const RationalMatrix& m, std::vector<Integer>* row_scale = nullptr)
{
    IntegerMatrix out(m.rows(), m.cols());
    if (row_scale)
        row_scale->assign(m.rows(), Integer(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm_of(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational s = m(i, j) * l;
            out(i, j) = s.get_num();
        }
        if (row_scale)
            (*row_scale)[i] = l;
    }
    return out;
}

inline Integer integer_determinant(const IntegerMatrix& m)
{
    RationalMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q(i, j) = m(i, j);
    return determinant(q).get_num();
}

} // namespace quasitoric
