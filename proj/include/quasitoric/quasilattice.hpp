#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasitoric/matrix.hpp"
#include "quasitoric/normal_form.hpp"

namespace quasitoric {

namespace detail {

/// Field of the first bound entry, or null when everything is rational.
inline Field field_of(const std::vector<Vector>& vs)
{
    Field f;
    for (const auto& v : vs)
        for (const auto& x : v)
            if (x.bound()) {
                if (!f)
                    f = x.field();
                else
                    (void)FieldElement::common_field(FieldElement(f, {}), x);
            }
    return f;
}

inline std::size_t degree_of(const Field& f) { return f ? f->degree() : 1; }

/// Expands each linear form over K (a row of field elements) into δ rational
/// rows, one per power of α.
inline RationalMatrix flatten_forms(const std::vector<Vector>& forms, std::size_t width, const Field& f)
{
    const std::size_t delta = degree_of(f);
    RationalMatrix out(forms.size() * delta, width);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) {
            const auto c = forms[i][j].coefficients_in(f);
            for (std::size_t k = 0; k < delta; ++k)
                out(i * delta + k, j) = c[k];
        }
    return out;
}

inline std::vector<Rational> flatten_vector(const Vector& v, const Field& f)
{
    std::vector<Rational> out;
    for (const auto& x : v)
        for (const auto& c : x.coefficients_in(f))
            out.push_back(c);
    return out;
}

} // namespace detail

/// The Z-span of finitely many vectors in Kⁿ. Alongside the generators it
/// keeps the flattened integer presentation: row (i, k) holds the α^k
/// coefficients of coordinate i, scaled by `row_scale` to clear denominators.
class Quasilattice {
public:
    /// Raises NotSpanning unless the generators span Rⁿ.
    static Quasilattice span(std::vector<Vector> generators, std::size_t n)
    {
        Quasilattice q = presentation(std::move(generators), n);
        if (rank_of(q.generators_) != n)
            raise(ErrorKind::NotSpanning, "generators span a proper subspace of R^" + std::to_string(n));
        return q;
    }

    /// Same as span() without the spanning requirement; used for sub-modules.
    static Quasilattice presentation(std::vector<Vector> generators, std::size_t n)
    {
        if (n == 0)
            raise(ErrorKind::InvalidArgument, "dimension must be positive");
        for (const auto& g : generators)
            if (g.size() != n)
                raise(ErrorKind::DimensionMismatch, "generator of wrong dimension");
        Quasilattice q;
        q.n_ = n;
        q.field_ = detail::field_of(generators);
        q.generators_ = std::move(generators);
        std::vector<Vector> forms(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& g : q.generators_)
                forms[i].push_back(g[i]);
        q.flattened_ = clear_denominators(detail::flatten_forms(forms, q.generators_.size(), q.field_), &q.row_scale_);
        return q;
    }

    std::size_t n() const { return n_; }
    const Field& field() const { return field_; }
    const std::vector<Vector>& generators() const { return generators_; }
    const IntegerMatrix& flattened() const { return flattened_; }
    const std::vector<Integer>& row_scale() const { return row_scale_; }

    /// Rank over Q of the flattened presentation, i.e. the rank of the
    /// abstract Z-module.
    std::size_t flattened_rank() const
    {
        if (generators_.empty())
            return 0;
        return hnf(flattened_).rank();
    }

    /// Discrete iff the Z-rank equals the real span dimension.
    bool is_lattice() const { return flattened_rank() == rank_of(generators_); }

    /// Integer coefficients x with Σ x_i g_i = v, or nullopt.
    std::optional<std::vector<Integer>> contains(const Vector& v) const
    {
        if (v.size() != n_)
            raise(ErrorKind::DimensionMismatch, "vector of wrong dimension");
        if (field_)
            (void)detail::field_of({generators_.front(), v});
        else
            for (const auto& x : v)
                if (!x.is_rational())
                    return std::nullopt; // the Q-span of rational generators is rational
        if (generators_.empty())
            return is_zero_vector(v) ? std::optional<std::vector<Integer>>(std::vector<Integer>{}) : std::nullopt;
        const auto flat = detail::flatten_vector(v, field_);
        std::vector<Integer> b;
        for (std::size_t r = 0; r < flat.size(); ++r) {
            Rational s = flat[r] * row_scale_[r];
            if (s.get_den() != 1)
                return std::nullopt;
            b.push_back(s.get_num());
        }
        return integer_solve(flattened_, b);
    }

    /// Σ x_i g_i.
    Vector combine(const std::vector<Integer>& x) const
    {
        if (x.size() != generators_.size())
            raise(ErrorKind::DimensionMismatch, "coefficient vector length differs from the generator count");
        Vector w(n_, FieldElement(0));
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0)
                w = w + scaled(generators_[j], FieldElement(Rational(x[j])));
        return w;
    }

private:
    Quasilattice() = default;

    std::size_t n_ = 0;
    Field field_;
    std::vector<Vector> generators_;
    IntegerMatrix flattened_;
    std::vector<Integer> row_scale_;
};

inline Quasilattice ql_span(std::vector<Vector> generators, std::size_t n)
{
    return Quasilattice::span(std::move(generators), n);
}

/// True when every generator of each lies in the other.
inline bool ql_equal(const Quasilattice& a, const Quasilattice& b)
{
    for (const auto& g : a.generators())
        if (!b.contains(g))
            return false;
    for (const auto& g : b.generators())
        if (!a.contains(g))
            return false;
    return true;
}

struct RayGenerator {
    Vector w;
    std::vector<Integer> coefficients;
    bool canonical = false; // never set: no choice here is distinguished
};

/// A point of Q on the open ray R_{>0}·u, or nullopt when the ray misses Q.
///
/// The coefficient vectors x with G x ∥ u form a sublattice of Z^p, cut out
/// by the flattened 2×2 minors w_j u_k - w_k u_j = 0. Among the rows of its
/// Hermite basis that do not map to zero, the one of least L1 norm is taken
/// (first on ties) and its sign fixed so that w points along u.
inline std::optional<RayGenerator> ray_generator(const Quasilattice& q, const Vector& u)
{
    const std::size_t n = q.n(), p = q.generators().size();
    if (u.size() != n)
        raise(ErrorKind::DimensionMismatch, "direction of wrong dimension");
    if (is_zero_vector(u))
        raise(ErrorKind::InvalidArgument, "direction must be nonzero");
    if (p == 0)
        return std::nullopt;
    Field f = q.field();
    if (!f)
        f = detail::field_of({u});
    else
        (void)detail::field_of({q.generators().front(), u});

    std::vector<Vector> forms;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            Vector row;
            for (const auto& g : q.generators())
                row.push_back(g[j] * u[k] - g[k] * u[j]);
            forms.push_back(std::move(row));
        }
    std::vector<std::vector<Integer>> basis;
    if (forms.empty()) {
        for (std::size_t i = 0; i < p; ++i) {
            std::vector<Integer> e(p, Integer(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = integer_kernel(clear_denominators(detail::flatten_forms(forms, p, f)));
    }

    std::size_t pivot = 0;
    while (is_zero(u[pivot]))
        ++pivot;
    std::optional<RayGenerator> best;
    Integer best_norm;
    for (const auto& x : basis) {
        Vector w = q.combine(x);
        if (is_zero_vector(w))
            continue;
        Integer norm = 0;
        for (const auto& c : x)
            norm += abs(c);
        if (best && norm >= best_norm)
            continue;
        RayGenerator g{w, x, false};
        if ((w[pivot] / u[pivot]).sign() < 0) {
            g.w = -g.w;
            for (auto& c : g.coefficients)
                c = -c;
        }
        best = std::move(g);
        best_norm = norm;
    }
    return best;
}

} // namespace quasitoric
