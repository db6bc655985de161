#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasitoric/configuration.hpp"

namespace quasitoric::corpus {

/// Q(α) with α = 2 sin(2π/5), root of x⁴ - 5x² + 5 in [3/2, 2]. It contains
/// cos(2π k/5) and sin(2π k/5) for all k.
inline const Field& pentagon_field()
{
    static const Field f = RealAlgebraicField::create(
        {Rational(5), Rational(0), Rational(-5), Rational(0), Rational(1)}, Rational(3, 2), Rational(2));
    return f;
}

/// Y_k = (cos 2πk/5, sin 2πk/5) in the pentagon field.
inline std::vector<Vector> fifth_roots()
{
    const Field& f = pentagon_field();
    const Rational h(1, 2);
    auto el = [&](Rational c0, Rational c1, Rational c2, Rational c3) { return FieldElement(f, {c0, c1, c2, c3}); };
    const FieldElement cos1 = el(Rational(-3, 2), 0, h, 0); // α²/2 - 3/2
    const FieldElement sin1 = el(0, h, 0, 0);               // α/2
    const FieldElement cos2 = el(1, 0, -h, 0);              // 1 - α²/2
    const FieldElement sin2 = el(0, Rational(-3, 2), 0, h); // (α³ - 3α)/2
    return {{FieldElement(f, {Rational(1)}), FieldElement(f, {})}, {cos1, sin1}, {cos2, sin2}, {cos2, -sin2},
            {cos1, -sin1}};
}

/// Tangential polygon {μ : ⟨μ, X_j⟩ ≥ -1}: every facet touches the unit circle
/// when the X_j are unit vectors.
inline HalfspaceRep tangential_polygon(const std::vector<Vector>& normals)
{
    HalfspaceRep h;
    h.n = 2;
    for (const auto& x : normals)
        h.facets.push_back({x, FieldElement(-1)});
    return h;
}

/// Regular pentagon with inward normals -Y_0, …, -Y_4.
inline HalfspaceRep pentagon()
{
    std::vector<Vector> normals;
    for (const auto& y : fifth_roots())
        normals.push_back(-y);
    return tangential_polygon(normals);
}

/// Penrose kite with normals -Y_1, Y_2, -Y_3, Y_4.
inline std::vector<Vector> kite_normals()
{
    const auto y = fifth_roots();
    return {-y[1], y[2], -y[3], y[4]};
}

inline HalfspaceRep kite() { return tangential_polygon(kite_normals()); }

/// Thick rhombus, normals Y_0, Y_4, -Y_0, -Y_4.
inline std::vector<Vector> thick_rhombus_normals()
{
    const auto y = fifth_roots();
    return {y[0], y[4], -y[0], -y[4]};
}

inline HalfspaceRep thick_rhombus() { return tangential_polygon(thick_rhombus_normals()); }

/// Thin rhombus, normals Y_1, Y_4, -Y_1, -Y_4.
inline std::vector<Vector> thin_rhombus_normals()
{
    const auto y = fifth_roots();
    return {y[1], y[4], -y[1], -y[4]};
}

inline HalfspaceRep thin_rhombus() { return tangential_polygon(thin_rhombus_normals()); }

/// Q_5 = Z-span of the fifth roots of unity.
inline Quasilattice q5() { return ql_span(fifth_roots(), 2); }

/// The 4-cycle triangulation {1,4},{4,3},{3,2},{2,1} (0-based here).
inline Triangulation quadrilateral_triangulation()
{
    return Triangulation::closure_of({{0, 3}, {3, 2}, {2, 1}, {1, 0}});
}

/// Kite configuration (-Y_1, Y_2, -Y_3, Y_4, Y_0) with Y_0 as ghost.
inline VectorConfiguration kite_configuration()
{
    auto v = kite_normals();
    v.push_back(fifth_roots()[0]);
    return {2, v, {4}};
}

/// Thick rhombus configuration (Y_0, Y_4, -Y_0, -Y_4, Y_1, Y_2, Y_3 + Y_4 + Y_0).
inline VectorConfiguration thick_rhombus_configuration()
{
    const auto y = fifth_roots();
    auto v = thick_rhombus_normals();
    v.push_back(y[1]);
    v.push_back(y[2]);
    v.push_back(y[3] + y[4] + y[0]);
    return {2, v, {4, 5, 6}};
}

/// Parameter a of the trapezoid: a rational, or √N over the field x² - N.
struct TrapezoidParameter {
    Field field; // null for rational a
    FieldElement a;
    std::string label;

    static TrapezoidParameter rational(const Rational& q) { return {nullptr, FieldElement(q), to_string(q)}; }

    static TrapezoidParameter sqrt_of(long n)
    {
        Rational hi = 1;
        while (hi * hi <= n)
            hi += 1;
        Field f = RealAlgebraicField::create({Rational(-n), Rational(0), Rational(1)}, Rational(0), hi);
        return {f, FieldElement::generator(f), "sqrt(" + std::to_string(n) + ")"};
    }
};

inline std::vector<Vector> trapezoid_normals(const FieldElement& a)
{
    return {{FieldElement(1), FieldElement(0)},
            {FieldElement(0), FieldElement(1)},
            {FieldElement(0), FieldElement(-1)},
            {FieldElement(-1), a}};
}

/// T_a with vertices (0,0), (1,0), (0,1), (a+1,1).
inline HalfspaceRep trapezoid(const FieldElement& a)
{
    HalfspaceRep h;
    h.n = 2;
    const auto normals = trapezoid_normals(a);
    const FieldElement offsets[] = {FieldElement(0), FieldElement(0), FieldElement(-1), FieldElement(-1)};
    for (std::size_t j = 0; j < 4; ++j)
        h.facets.push_back({normals[j], offsets[j]});
    return h;
}

/// Q_a = Z × (Z + aZ).
inline Quasilattice qa(const FieldElement& a)
{
    return ql_span({{FieldElement(1), FieldElement(0)}, {FieldElement(0), FieldElement(1)}, {FieldElement(0), a}}, 2);
}

inline FundamentalTriple hirzebruch_triple(const FieldElement& a)
{
    return {trapezoid(a), qa(a), trapezoid_normals(a)};
}

/// V_a = ((1,0), (0,1), (0,-1), (-1,a), (0,-a)) with the ghost (0,-a).
inline VectorConfiguration hirzebruch_configuration(const FieldElement& a)
{
    auto v = trapezoid_normals(a);
    v.push_back({FieldElement(0), -a});
    return {2, v, {4}};
}

/// Maximal cones of the normal fan of T_a in facet indices.
inline Triangulation hirzebruch_triangulation()
{
    return Triangulation::closure_of({{0, 1}, {1, 3}, {2, 3}, {0, 2}});
}

/// [0, 1] ⊂ R with facets x ≥ 0 and -x ≥ -1, scaled by the given normals.
inline HalfspaceRep unit_interval(const FieldElement& left = FieldElement(1), const FieldElement& right = FieldElement(-1))
{
    HalfspaceRep h;
    h.n = 1;
    h.facets.push_back({{left}, FieldElement(0)});
    h.facets.push_back({{right}, right});
    return h;
}

inline HalfspaceRep unit_square()
{
    HalfspaceRep h;
    h.n = 2;
    h.facets = {{{FieldElement(1), FieldElement(0)}, FieldElement(0)},
                {{FieldElement(0), FieldElement(1)}, FieldElement(0)},
                {{FieldElement(-1), FieldElement(0)}, FieldElement(-1)},
                {{FieldElement(0), FieldElement(-1)}, FieldElement(-1)}};
    return h;
}

inline Quasilattice z_lattice(std::size_t n)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n, FieldElement(0));
        e[i] = FieldElement(1);
        gens.push_back(e);
    }
    return ql_span(gens, n);
}

inline FundamentalTriple square_triple()
{
    const HalfspaceRep h = unit_square();
    std::vector<Vector> normals;
    for (const auto& f : h.facets)
        normals.push_back(f.normal);
    return {h, z_lattice(2), normals};
}

/// Complete simplicial fan over the boundary of a triangular prism whose
/// three square sides are split by diagonals turning the same way round.
/// Rays a_i = (p_i, 1), b_i = (p_i, -1) for p = (1,0), (-1,1), (-1,-1).
inline Fan twisted_prism_fan()
{
    const long px[] = {1, -1, -1}, py[] = {0, 1, -1};
    std::vector<Vector> rays;
    for (long z : {1L, -1L})
        for (int i = 0; i < 3; ++i)
            rays.push_back({FieldElement(px[i]), FieldElement(py[i]), FieldElement(z)});
    std::vector<IndexSet> cones{{0, 1, 2}, {3, 4, 5}};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        cones.push_back({i, j, 3 + j});
        cones.push_back({i, 3 + j, 3 + i});
    }
    return make_fan(3, rays, cones);
}

/// Square pyramid: the apex lies on four facets.
inline HalfspaceRep square_pyramid()
{
    HalfspaceRep h;
    h.n = 3;
    auto v = [](long x, long y, long z) { return Vector{FieldElement(x), FieldElement(y), FieldElement(z)}; };
    h.facets = {{v(0, 0, 1), FieldElement(0)},
                {v(1, 0, -1), FieldElement(-1)},
                {v(-1, 0, -1), FieldElement(-1)},
                {v(0, 1, -1), FieldElement(-1)},
                {v(0, -1, -1), FieldElement(-1)}};
    return h;
}

} // namespace quasitoric::corpus
