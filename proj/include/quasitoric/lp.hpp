#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/matrix.hpp"

namespace quasitoric {

enum class Relation { Greater, GreaterEqual, Equal };

/// coeffs · x  (relation)  rhs
template <class T>
struct Constraint {
    std::vector<T> coeffs;
    T rhs;
    Relation rel = Relation::GreaterEqual;
};

inline constexpr std::size_t kLpVariableBudget = 16;

template <class T>
bool satisfies(const Constraint<T>& c, const std::vector<T>& x)
{
    const int s = sign(dot(c.coeffs, x) - c.rhs);
    switch (c.rel) {
    case Relation::Greater: return s > 0;
    case Relation::GreaterEqual: return s >= 0;
    case Relation::Equal: return s == 0;
    }
    return false;
}

namespace detail {

template <class T>
bool trivially_true(const Constraint<T>& c)
{
    // 0 rel rhs
    const int s = sign(c.rhs);
    switch (c.rel) {
    case Relation::Greater: return s < 0;
    case Relation::GreaterEqual: return s <= 0;
    case Relation::Equal: return s == 0;
    }
    return false;
}

/// Positive rescaling so that the first nonzero coefficient has absolute
/// value 1 (and value +1 for equalities). Returns false for constant rows.
template <class T>
bool normalize(Constraint<T>& c)
{
    std::size_t k = 0;
    while (k < c.coeffs.size() && is_zero(c.coeffs[k]))
        ++k;
    if (k == c.coeffs.size())
        return false;
    T lead = c.coeffs[k];
    if (c.rel != Relation::Equal && sign(lead) < 0)
        lead = -lead;
    if (lead == T(1))
        return true;
    const T inv = T(1) / lead;
    for (auto& a : c.coeffs)
        a *= inv;
    c.rhs *= inv;
    return true;
}

template <class T>
bool same_constraint(const Constraint<T>& a, const Constraint<T>& b)
{
    return a.rel == b.rel && a.rhs == b.rhs && a.coeffs == b.coeffs;
}

/// Adds the constraint unless an identical one is present. Returns false if
/// the constraint is a constant contradiction.
template <class T>
bool push_unique(std::vector<Constraint<T>>& sys, Constraint<T> c)
{
    if (!normalize(c))
        return trivially_true(c);
    for (const auto& d : sys)
        if (same_constraint(c, d))
            return true;
    sys.push_back(std::move(c));
    return true;
}

} // namespace detail

/// Exact feasibility of a system of strict/weak inequalities and equalities
/// by Fourier–Motzkin elimination. Returns a witness or nullopt.
///
/// Variables are eliminated from the last to the first; the witness is
/// rebuilt forwards, taking the midpoint of each variable's admissible
/// interval (or the bound itself / bound ± 1 when one side is open).
template <class T>
std::optional<std::vector<T>> strict_lp_feasible(const std::vector<Constraint<T>>& constraints, std::size_t num_vars)
{
    if (num_vars > kLpVariableBudget)
        raise(ErrorKind::VariableBudgetExceeded,
              std::to_string(num_vars) + " variables exceed the budget of " + std::to_string(kLpVariableBudget));
    for (const auto& c : constraints)
        if (c.coeffs.size() != num_vars)
            raise(ErrorKind::DimensionMismatch, "constraint width differs from the variable count");

    // levels[k] is the system over x_0..x_k, before x_k is eliminated.
    std::vector<std::vector<Constraint<T>>> levels(num_vars + 1);
    std::vector<Constraint<T>> current;
    for (const auto& c : constraints)
        if (!detail::push_unique(current, c))
            return std::nullopt;

    for (std::size_t k = num_vars; k-- > 0;) {
        levels[k] = current;
        std::vector<Constraint<T>> next;
        const Constraint<T>* pivot_eq = nullptr;
        for (const auto& c : current)
            if (c.rel == Relation::Equal && !is_zero(c.coeffs[k])) {
                pivot_eq = &c;
                break;
            }
        if (pivot_eq) {
            const Constraint<T> e = *pivot_eq;
            for (const auto& c : current) {
                if (&c == pivot_eq)
                    continue;
                Constraint<T> d = c;
                if (!is_zero(d.coeffs[k])) {
                    const T f = d.coeffs[k] / e.coeffs[k];
                    for (std::size_t i = 0; i < num_vars; ++i)
                        d.coeffs[i] -= f * e.coeffs[i];
                    d.rhs -= f * e.rhs;
                    d.coeffs[k] = T(0);
                }
                if (!detail::push_unique(next, std::move(d)))
                    return std::nullopt;
            }
        } else {
            std::vector<const Constraint<T>*> lower, upper;
            for (const auto& c : current) {
                const int s = sign(c.coeffs[k]);
                if (s > 0)
                    lower.push_back(&c);
                else if (s < 0)
                    upper.push_back(&c);
                else if (!detail::push_unique(next, c))
                    return std::nullopt;
            }
            for (const auto* lo : lower)
                for (const auto* up : upper) {
                    const T fl = T(1) / lo->coeffs[k];
                    const T fu = T(-1) / up->coeffs[k];
                    Constraint<T> d;
                    d.coeffs.resize(num_vars, T(0));
                    for (std::size_t i = 0; i < num_vars; ++i)
                        d.coeffs[i] = fl * lo->coeffs[i] + fu * up->coeffs[i];
                    d.coeffs[k] = T(0);
                    d.rhs = fl * lo->rhs + fu * up->rhs;
                    d.rel = (lo->rel == Relation::Greater || up->rel == Relation::Greater) ? Relation::Greater
                                                                                          : Relation::GreaterEqual;
                    if (!detail::push_unique(next, std::move(d)))
                        return std::nullopt;
                }
        }
        current = std::move(next);
    }
    // Whatever remains is constant and was checked on insertion.

    std::vector<T> x(num_vars, T(0));
    for (std::size_t k = 0; k < num_vars; ++k) {
        std::optional<T> fixed, lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : levels[k]) {
            if (is_zero(c.coeffs[k]))
                continue;
            T rest = c.rhs;
            for (std::size_t i = 0; i < k; ++i)
                rest -= c.coeffs[i] * x[i];
            const T bound = rest / c.coeffs[k];
            if (c.rel == Relation::Equal) {
                fixed = bound;
                break;
            }
            const bool strict = c.rel == Relation::Greater;
            if (sign(c.coeffs[k]) > 0) {
                const int cmp = lo ? sign(bound - *lo) : 1;
                if (cmp > 0 || (cmp == 0 && strict)) {
                    lo = bound;
                    lo_strict = strict || (cmp == 0 && lo_strict);
                }
            } else {
                const int cmp = hi ? sign(bound - *hi) : -1;
                if (cmp < 0 || (cmp == 0 && strict)) {
                    hi = bound;
                    hi_strict = strict || (cmp == 0 && hi_strict);
                }
            }
        }
        if (fixed)
            x[k] = *fixed;
        else if (lo && hi)
            x[k] = (*lo == *hi) ? *lo : (*lo + *hi) / T(2);
        else if (lo)
            x[k] = lo_strict ? *lo + T(1) : *lo;
        else if (hi)
            x[k] = hi_strict ? *hi - T(1) : *hi;
    }
    for (const auto& c : constraints)
        if (!satisfies(c, x))
            throw std::logic_error("Fourier-Motzkin witness fails a constraint");
    return x;
}

} // namespace quasitoric
