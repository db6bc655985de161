#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/polynomial.hpp"
#include "quasitoric/rational.hpp"

namespace quasitoric {

class RealAlgebraicField;
using Field = std::shared_ptr<const RealAlgebraicField>;

/// A real number field Q(α) given by a monic squarefree polynomial and an
/// interval isolating one real root α. Handles are immutable; refinement
/// returns a new handle describing the same field.
class RealAlgebraicField {
public:
    static Field create(std::vector<Rational> minpoly, Rational lo, Rational hi)
    {
        poly::trim(minpoly);
        if (poly::degree(minpoly) < 1)
            raise(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
        if (minpoly.back() != 1)
            raise(ErrorKind::InvalidArgument, "minimal polynomial must be monic");
        if (!(lo < hi))
            raise(ErrorKind::InvalidArgument, "isolating interval needs lo < hi");
        if (poly::degree(poly::gcd(minpoly, poly::derivative(minpoly))) > 0)
            raise(ErrorKind::NotSquarefree, "minimal polynomial has a repeated factor");
        const int roots = poly::count_roots(minpoly, lo, hi);
        if (roots == 0)
            raise(ErrorKind::NoRootInInterval,
                  "no root of the minimal polynomial in [" + to_string(lo) + ", " + to_string(hi) + "]");
        if (roots > 1)
            raise(ErrorKind::MultipleRootsInInterval,
                  std::to_string(roots) + " roots in [" + to_string(lo) + ", " + to_string(hi) + "]");

        auto f = std::shared_ptr<RealAlgebraicField>(new RealAlgebraicField);
        f->minpoly_ = std::move(minpoly);
        f->declared_lo_ = lo;
        f->declared_hi_ = hi;
        f->lo_ = lo;
        f->hi_ = hi;
        f->settle_endpoints();
        // A tight working interval lets most sign queries finish on the first
        // enclosure.
        for (int i = 0; i < 48 && !f->exact(); ++i)
            f->bisect();
        return f;
    }

    /// Q itself, presented as Q(0) with minimal polynomial x.
    static const Field& rationals()
    {
        static const Field q = create({Rational(0), Rational(1)}, Rational(-1), Rational(1));
        return q;
    }

    std::size_t degree() const { return minpoly_.size() - 1; }
    const std::vector<Rational>& minpoly() const { return minpoly_; }
    const Rational& declared_lo() const { return declared_lo_; }
    const Rational& declared_hi() const { return declared_hi_; }
    /// Current isolating interval (always inside the declared one).
    poly::Interval interval() const { return {lo_, hi_}; }
    /// True when the root is rational and pinned exactly (lo == hi).
    bool exact() const { return lo_ == hi_; }

    /// New handle for the same field with the isolating interval halved.
    Field refined() const
    {
        auto f = std::shared_ptr<RealAlgebraicField>(new RealAlgebraicField(*this));
        if (!f->exact())
            f->bisect();
        return f;
    }

    bool same_as(const RealAlgebraicField& other) const
    {
        return this == &other
               || (minpoly_ == other.minpoly_ && declared_lo_ == other.declared_lo_
                   && declared_hi_ == other.declared_hi_);
    }

    /// One bisection step on an interval that isolates the root.
    static poly::Interval bisect(const std::vector<Rational>& p, poly::Interval iv)
    {
        if (iv.lo == iv.hi)
            return iv;
        Rational mid = (iv.lo + iv.hi) / 2;
        const int sm = sign(poly::eval(p, mid));
        if (sm == 0)
            return {mid, mid};
        const int sl = sign(poly::eval(p, iv.lo));
        if (sm * sl < 0)
            return {iv.lo, mid};
        return {mid, iv.hi};
    }

private:
    RealAlgebraicField() = default;
    RealAlgebraicField(const RealAlgebraicField&) = default;

    void settle_endpoints()
    {
        if (degree() == 1) {
            lo_ = hi_ = -minpoly_[0];
            return;
        }
        if (is_zero(poly::eval(minpoly_, lo_)))
            hi_ = lo_;
        else if (is_zero(poly::eval(minpoly_, hi_)))
            lo_ = hi_;
    }

    void bisect()
    {
        auto iv = bisect(minpoly_, {lo_, hi_});
        lo_ = iv.lo;
        hi_ = iv.hi;
    }

    std::vector<Rational> minpoly_;
    Rational declared_lo_, declared_hi_;
    Rational lo_, hi_;
};

/// Element of Q(α) in the power basis 1, α, …, α^(δ-1).
///
/// An element without a field is a rational literal; it combines with any
/// field element by promotion. Bound elements of different fields do not mix.
class FieldElement {
public:
    FieldElement() : coeffs_{Rational(0)} {}
    FieldElement(const Rational& r) : coeffs_{r} { coeffs_[0].canonicalize(); }
    FieldElement(long v) : coeffs_{Rational(v)} {}
    FieldElement(int v) : coeffs_{Rational(v)} {}

    FieldElement(Field field, std::vector<Rational> coeffs)
        : field_(std::move(field))
        , coeffs_(std::move(coeffs))
    {
        for (auto& c : coeffs_)
            c.canonicalize();
        if (!field_) {
            if (coeffs_.size() != 1)
                raise(ErrorKind::DimensionMismatch, "rational literal needs exactly one coefficient");
            return;
        }
        if (coeffs_.size() > field_->degree())
            raise(ErrorKind::DimensionMismatch,
                  "element has " + std::to_string(coeffs_.size()) + " coefficients, field degree is "
                      + std::to_string(field_->degree()));
        coeffs_.resize(field_->degree());
    }

    static FieldElement generator(const Field& field)
    {
        std::vector<Rational> c(field->degree());
        if (c.size() == 1)
            c[0] = field->interval().lo; // the root of a linear minimal polynomial
        else
            c[1] = 1;
        return FieldElement(field, std::move(c));
    }

    static FieldElement from_rational(const Field& field, const Rational& r)
    {
        std::vector<Rational> c(field ? field->degree() : 1);
        c[0] = r;
        return FieldElement(field, std::move(c));
    }

    const Field& field() const { return field_; }
    bool bound() const { return static_cast<bool>(field_); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficients padded to the degree of `f` (for serialization).
    std::vector<Rational> coefficients_in(const Field& f) const
    {
        if (field_ && f && !field_->same_as(*f))
            raise(ErrorKind::MixedFields, "element belongs to a different field");
        std::vector<Rational> c = coeffs_;
        c.resize(f ? f->degree() : 1);
        return c;
    }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!quasitoric::is_zero(c))
                return false;
        return true;
    }

    /// True when the element lies in Q (only the constant coefficient is set).
    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!quasitoric::is_zero(coeffs_[i]))
                return false;
        return true;
    }

    Rational rational_value() const
    {
        if (!is_rational())
            raise(ErrorKind::InvalidArgument, "element is irrational");
        return coeffs_[0];
    }

    FieldElement operator-() const
    {
        FieldElement r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        Field f = common_field(a, b);
        auto ca = a.coefficients_in(f), cb = b.coefficients_in(f);
        for (std::size_t i = 0; i < ca.size(); ++i)
            ca[i] += cb[i];
        return FieldElement(f, std::move(ca));
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b)
    {
        Field f = common_field(a, b);
        auto ca = a.coefficients_in(f), cb = b.coefficients_in(f);
        for (std::size_t i = 0; i < ca.size(); ++i)
            ca[i] -= cb[i];
        return FieldElement(f, std::move(ca));
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        Field f = common_field(a, b);
        if (!f || f->degree() == 1)
            return FieldElement(f, {a.coeffs_[0] * b.coeffs_[0]});
        if (a.is_rational() || b.is_rational()) {
            const bool ar = a.is_rational();
            const Rational s = ar ? a.coeffs_[0] : b.coeffs_[0];
            auto c = (ar ? b : a).coefficients_in(f);
            for (auto& x : c)
                x *= s;
            return FieldElement(f, std::move(c));
        }
        auto prod = poly::mul(a.coefficients_in(f), b.coefficients_in(f));
        return FieldElement(f, poly::divmod(std::move(prod), f->minpoly()).second);
    }

    FieldElement inverse() const
    {
        if (is_zero())
            raise(ErrorKind::DivisionByZero, "inverse of zero");
        if (!field_ || field_->degree() == 1 || is_rational())
            return FieldElement::from_rational(field_, Rational(1) / coeffs_[0]);
        auto [g, s] = poly::gcd_cofactor(coeffs_, field_->minpoly());
        if (poly::degree(g) != 0)
            raise(ErrorKind::NotInvertible, "element shares a factor with a reducible minimal polynomial");
        return FieldElement(field_, poly::divmod(std::move(s), field_->minpoly()).second);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b)
    {
        return a * b.inverse();
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    /// Exact equality of power-basis coefficients (after promotion).
    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        Field f = common_field(a, b);
        return a.coefficients_in(f) == b.coefficients_in(f);
    }

    /// Sign of the real embedding α ↦ root in the isolating interval.
    int sign() const
    {
        if (is_zero())
            return 0;
        if (!field_ || field_->degree() == 1 || is_rational())
            return quasitoric::sign(coeffs_[0]);
        poly::Interval iv = field_->interval();
        if (iv.lo == iv.hi)
            return quasitoric::sign(poly::eval(coeffs_, iv.lo));
        auto e = poly::eval_interval(coeffs_, iv);
        if (e.lo > 0)
            return 1;
        if (e.hi < 0)
            return -1;
        // Refinement terminates only if the element does not vanish at α.
        if (poly::degree(poly::gcd(coeffs_, field_->minpoly())) > 0)
            raise(ErrorKind::NotInvertible, "element vanishes on a factor of a reducible minimal polynomial");
        for (;;) {
            iv = RealAlgebraicField::bisect(field_->minpoly(), iv);
            if (iv.lo == iv.hi)
                return quasitoric::sign(poly::eval(coeffs_, iv.lo));
            e = poly::eval_interval(coeffs_, iv);
            if (e.lo > 0)
                return 1;
            if (e.hi < 0)
                return -1;
        }
    }

    /// Rational enclosure of the value with width at most `width`.
    poly::Interval enclosure(const Rational& width) const
    {
        if (!field_ || field_->degree() == 1 || is_rational())
            return {coeffs_[0], coeffs_[0]};
        poly::Interval iv = field_->interval();
        for (;;) {
            if (iv.lo == iv.hi) {
                Rational v = poly::eval(coeffs_, iv.lo);
                return {v, v};
            }
            auto e = poly::eval_interval(coeffs_, iv);
            if (e.hi - e.lo <= width)
                return e;
            iv = RealAlgebraicField::bisect(field_->minpoly(), iv);
        }
    }

    double to_double() const
    {
        if (is_zero())
            return 0.0;
        auto e = enclosure(Rational(1, 1) / Rational(Integer(1) << 64));
        Rational mid = (e.lo + e.hi) / 2;
        // Relative precision for large magnitudes.
        if (abs(mid) > 1) {
            e = enclosure(abs(mid) / Rational(Integer(1) << 64));
            mid = (e.lo + e.hi) / 2;
        }
        return mid.get_d();
    }

    /// Largest integer not exceeding the element.
    Integer floor() const
    {
        if (is_rational())
            return floor_of(coeffs_[0]);
        Rational width(1, 2);
        for (;;) {
            auto e = enclosure(width);
            Integer a = floor_of(e.lo), b = floor_of(e.hi);
            if (a == b)
                return a;
            // The value is irrational, so it eventually avoids the integer b.
            width /= 2;
        }
    }

    /// Lexicographic order on coefficients; deterministic, not the real order.
    friend bool lex_less(const FieldElement& a, const FieldElement& b)
    {
        Field f = common_field(a, b);
        auto ca = a.coefficients_in(f), cb = b.coefficients_in(f);
        for (std::size_t i = 0; i < ca.size(); ++i)
            if (ca[i] != cb[i])
                return ca[i] < cb[i];
        return false;
    }

    static Field common_field(const FieldElement& a, const FieldElement& b)
    {
        if (!a.field_)
            return b.field_;
        if (!b.field_)
            return a.field_;
        if (a.field_ != b.field_ && !a.field_->same_as(*b.field_))
            raise(ErrorKind::MixedFields, "operands belong to different fields");
        return a.field_;
    }

private:
    Field field_;
    std::vector<Rational> coeffs_;
};

inline int sign(const FieldElement& x) { return x.sign(); }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

inline bool operator<(const FieldElement& a, const FieldElement& b) { return (a - b).sign() < 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return (a - b).sign() > 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return (a - b).sign() <= 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return (a - b).sign() >= 0; }

inline FieldElement abs(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

inline std::string to_string(const FieldElement& x)
{
    std::string s = "[";
    for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
        if (i)
            s += ", ";
        s += x.coefficients()[i].get_str();
    }
    return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x)
{
    return os << to_string(x);
}

} // namespace quasitoric
