#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quasitoric/fan.hpp"
#include "quasitoric/quasilattice.hpp"

namespace quasitoric {

/// (body, Q, normals): a polytope or fan, a quasilattice, and one chosen
/// vector of Q on each facet normal / ray.
struct FundamentalTriple {
    std::variant<HalfspaceRep, Fan> body;
    Quasilattice quasilattice;
    std::vector<Vector> normals;

    bool has_polytope() const { return std::holds_alternative<HalfspaceRep>(body); }
    const HalfspaceRep& polytope() const { return std::get<HalfspaceRep>(body); }
    const Fan& fan() const { return std::get<Fan>(body); }
    std::size_t n() const { return has_polytope() ? polytope().n : fan().n; }
};

/// Facet normals of a polytope, or ray generators of a fan.
inline std::vector<Vector> body_directions(const std::variant<HalfspaceRep, Fan>& body)
{
    if (const auto* h = std::get_if<HalfspaceRep>(&body)) {
        std::vector<Vector> out;
        for (const auto& f : h->facets)
            out.push_back(f.normal);
        return out;
    }
    return std::get<Fan>(body).rays;
}

inline bool is_quasirational(const Fan& f, const Quasilattice& q)
{
    for (const auto& r : f.rays)
        if (!ray_generator(q, r))
            return false;
    return true;
}

/// A polytope is judged through its normal fan.
inline bool is_quasirational(const HalfspaceRep& h, const Quasilattice& q)
{
    return is_quasirational(normal_fan(h), q);
}

struct TripleIssue {
    ErrorKind kind;
    std::string detail;
};

struct TripleReport {
    std::vector<std::optional<std::vector<Integer>>> coefficients; // per normal
    bool simple = false; // simple polytope / simplicial fan
    bool normals_span_quasilattice = false;
    std::vector<TripleIssue> issues;
    std::vector<std::string> warnings;

    bool valid() const { return issues.empty(); }
    /// Raises the first issue, if any.
    void require_valid() const
    {
        if (!issues.empty())
            raise(issues.front().kind, issues.front().detail);
    }
};

inline TripleReport triple_validate(const FundamentalTriple& t)
{
    TripleReport r;
    const auto dirs = body_directions(t.body);
    if (dirs.size() != t.normals.size()) {
        r.issues.push_back({ErrorKind::CountMismatch, std::to_string(t.normals.size()) + " normals for "
                                                          + std::to_string(dirs.size()) + " facets or rays"});
        return r;
    }
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        const std::string which = "normal " + std::to_string(j + 1);
        if (t.normals[j].size() != t.n()) {
            r.issues.push_back({ErrorKind::DimensionMismatch, which + " has wrong length"});
            r.coefficients.emplace_back();
            continue;
        }
        if (!positively_proportional(t.normals[j], dirs[j]))
            r.issues.push_back({ErrorKind::NormalWrongDirection, which + " is not a positive multiple of its facet or ray"});
        auto c = t.quasilattice.contains(t.normals[j]);
        if (!c)
            r.issues.push_back({ErrorKind::NormalNotInQuasilattice, which + " is not in the quasilattice"});
        r.coefficients.push_back(std::move(c));
    }

    if (t.has_polytope()) {
        const VertexRep v = vertices_from_halfspaces(t.polytope());
        r.simple = is_simple(t.polytope(), v);
    } else {
        r.simple = fan_predicates(t.fan()).simplicial;
    }
    if (!r.simple)
        r.warnings.push_back("nonsimple body: stratified case, chart groups are not computed");

    const Quasilattice spanned = Quasilattice::presentation(t.normals, t.n());
    r.normals_span_quasilattice = true;
    for (const auto& g : t.quasilattice.generators())
        if (!spanned.contains(g)) {
            r.normals_span_quasilattice = false;
            break;
        }
    return r;
}

enum class ChartClass { Trivial, Finite, Infinite };

inline std::string to_string(ChartClass c)
{
    switch (c) {
    case ChartClass::Trivial: return "trivial";
    case ChartClass::Finite: return "finite";
    case ChartClass::Infinite: return "infinite";
    }
    return "";
}

struct ChartGroupReport {
    std::size_t vertex = 0;      // vertex index (polytope) or maximal-cone index (fan)
    std::optional<Vector> point; // vertex coordinates for polytopes
    IndexSet active;             // facets / rays at the vertex
    FieldMatrix frame;           // rows: the triple's normals at the vertex
    std::vector<Vector> images;  // generator coordinates in the frame, mod Zⁿ
    ChartClass classification = ChartClass::Trivial;
    std::optional<Integer> order; // for trivial and finite groups
};

namespace detail {

/// Fractional part; exact for any real algebraic x.
inline FieldElement mod_one(const FieldElement& x) { return x - FieldElement(Rational(x.floor())); }

/// Order of the subgroup of (1/D)Zⁿ / Zⁿ generated by rational vectors:
/// D^n divided by the product of the Smith invariants of [D·y_1 … D·y_k | D·I].
inline Integer finite_group_order(const std::vector<std::vector<Rational>>& ys, std::size_t n)
{
    Integer d = 1;
    for (const auto& y : ys)
        for (const auto& c : y)
            d = lcm_of(d, c.get_den());
    IntegerMatrix m(n, ys.size() + n);
    for (std::size_t k = 0; k < ys.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = ys[k][i] * d;
            m(i, k) = s.get_num();
        }
    for (std::size_t i = 0; i < n; ++i)
        m(i, ys.size() + i) = d;
    Integer index = 1;
    for (const auto& x : snf(m).diagonal())
        index *= x;
    Integer total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= d;
    return total / index;
}

} // namespace detail

/// Per-vertex structure groups Γ_v = Q / Z⟨X_j : j active at v⟩, presented
/// inside Rⁿ/Zⁿ through the coordinates of Q's generators in the frame of
/// the active normals (the solutions y of A_vᵀ y = g).
inline std::vector<ChartGroupReport> chart_groups(const FundamentalTriple& t)
{
    const std::size_t n = t.n();
    std::vector<ChartGroupReport> out;
    std::vector<std::pair<IndexSet, std::optional<Vector>>> charts;
    if (t.has_polytope()) {
        const VertexRep v = vertices_from_halfspaces(t.polytope());
        if (!is_simple(t.polytope(), v))
            raise(ErrorKind::NotSimple, "chart groups need a simple polytope");
        for (std::size_t i = 0; i < v.vertices.size(); ++i)
            charts.emplace_back(v.vertex_facets[i], v.vertices[i]);
    } else {
        const FanPredicates p = fan_predicates(t.fan());
        if (!p.simplicial)
            raise(ErrorKind::NotSimple, "chart groups need a simplicial fan");
        for (const auto& c : t.fan().maximal_cones())
            if (c.size() == n)
                charts.emplace_back(c, std::nullopt);
    }
    if (t.normals.size() != body_directions(t.body).size())
        raise(ErrorKind::CountMismatch, "one normal per facet or ray is required");

    for (std::size_t k = 0; k < charts.size(); ++k) {
        ChartGroupReport r;
        r.vertex = k;
        r.active = charts[k].first;
        r.point = charts[k].second;
        std::vector<Vector> rows;
        for (auto j : r.active)
            rows.push_back(t.normals[j]);
        r.frame = FieldMatrix::from_rows(rows);
        const FieldMatrix frame_t = r.frame.transpose();

        bool all_rational = true, all_integral = true;
        std::vector<std::vector<Rational>> rational_images;
        for (const auto& g : t.quasilattice.generators()) {
            auto y = solve_square(frame_t, g);
            if (!y)
                raise(ErrorKind::SingularVertexFrame, "normals at chart " + std::to_string(k + 1) + " are dependent");
            std::vector<Rational> ry;
            for (auto& c : *y) {
                c = detail::mod_one(c);
                if (!c.is_rational())
                    all_rational = false;
                else {
                    ry.push_back(c.rational_value());
                    if (!c.is_zero())
                        all_integral = false;
                }
            }
            if (all_rational)
                rational_images.push_back(std::move(ry));
            r.images.push_back(std::move(*y));
        }
        if (!all_rational) {
            r.classification = ChartClass::Infinite;
        } else if (all_integral) {
            r.classification = ChartClass::Trivial;
            r.order = Integer(1);
        } else {
            r.classification = ChartClass::Finite;
            r.order = detail::finite_group_order(rational_images, n);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace quasitoric
