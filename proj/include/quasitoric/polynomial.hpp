#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "quasitoric/rational.hpp"

namespace quasitoric::poly {

// Dense univariate polynomials over Q, coefficients from the constant term up.
using Poly = std::vector<Rational>;

inline void trim(Poly& p)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
}

inline Poly trimmed(Poly p)
{
    trim(p);
    return p;
}

/// Degree of the zero polynomial is -1.
inline int degree(const Poly& p)
{
    for (std::size_t i = p.size(); i-- > 0;)
        if (!is_zero(p[i]))
            return static_cast<int>(i);
    return -1;
}

inline Rational eval(const Poly& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

inline Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

inline Poly add(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]))
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    const int db = degree(b);
    if (db < 0)
        raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    trim(a);
    Poly q;
    const Rational& lead = b[static_cast<std::size_t>(db)];
    while (degree(a) >= db) {
        const int da = degree(a);
        const std::size_t shift = static_cast<std::size_t>(da - db);
        Rational c = a[static_cast<std::size_t>(da)] / lead;
        if (q.size() <= shift)
            q.resize(shift + 1);
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            a[shift + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly monic(Poly p)
{
    trim(p);
    if (p.empty())
        return p;
    Rational lead = p.back();
    for (auto& c : p)
        c /= lead;
    return p;
}

inline Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

/// Extended gcd: returns (g, s) with s*a == g (mod m), g monic.
inline std::pair<Poly, Poly> gcd_cofactor(const Poly& a, const Poly& m)
{
    Poly r0 = trimmed(m), r1 = trimmed(a);
    Poly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.empty())
        return {r0, s0};
    Rational lead = r0.back();
    for (auto& c : r0)
        c /= lead;
    for (auto& c : s0)
        c /= lead;
    return {r0, s0};
}

/// Sturm chain p, p', -rem(p, p'), ...
inline std::vector<Poly> sturm_chain(const Poly& p)
{
    std::vector<Poly> chain{trimmed(p), derivative(p)};
    while (!chain.back().empty()) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r)
            c = -c;
        if (r.empty())
            break;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty())
        chain.pop_back();
    return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& x)
{
    int count = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign(eval(q, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

/// Number of distinct real roots of a squarefree p in the closed interval [lo, hi].
inline int count_roots(const Poly& p, const Rational& lo, const Rational& hi)
{
    auto chain = sturm_chain(p);
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (is_zero(eval(p, lo)))
        ++n;
    return n;
}

struct Interval {
    Rational lo, hi;
};

inline Interval interval_mul(const Interval& a, const Interval& b)
{
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

/// Range enclosure of p over x ∈ [lo, hi] by interval Horner evaluation.
inline Interval eval_interval(const Poly& p, const Interval& x)
{
    Interval acc{0, 0};
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = interval_mul(acc, x);
        acc.lo += p[i];
        acc.hi += p[i];
    }
    return acc;
}

} // namespace quasitoric::poly
