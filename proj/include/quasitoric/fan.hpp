#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quasitoric/lp.hpp"
#include "quasitoric/polytope.hpp"

namespace quasitoric {

/// A fan stored as a shared ray list plus cones given by sorted ray index
/// sets. The zero cone is the empty index set.
struct Fan {
    std::size_t n = 0;
    std::vector<Vector> rays;
    std::vector<IndexSet> cones;

    std::vector<IndexSet> maximal_cones() const
    {
        std::vector<IndexSet> out;
        for (const auto& c : cones) {
            bool maximal = true;
            for (const auto& d : cones)
                if (d.size() > c.size() && is_subset_of(c, d)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                out.push_back(c);
        }
        return out;
    }

    std::size_t cone_dimension(const IndexSet& c) const
    {
        std::vector<Vector> v;
        for (auto i : c)
            v.push_back(rays[i]);
        return rank_of(v);
    }

    bool has_cone(const IndexSet& c) const { return std::find(cones.begin(), cones.end(), c) != cones.end(); }
};

struct FanPredicates {
    bool valid = false;
    bool simplicial = false;
    std::optional<bool> complete; // absent when n > 3
    std::vector<std::string> problems;
};

inline constexpr std::size_t kConeFaceBudget = 12;

namespace detail {

inline std::vector<Constraint<FieldElement>> sign_pattern(const std::vector<Vector>& rays, const IndexSet& zero,
                                                          const IndexSet& positive, const IndexSet& negative)
{
    std::vector<Constraint<FieldElement>> sys;
    for (auto i : zero)
        sys.push_back({rays[i], FieldElement(0), Relation::Equal});
    for (auto i : positive)
        sys.push_back({rays[i], FieldElement(0), Relation::Greater});
    for (auto i : negative)
        sys.push_back({-rays[i], FieldElement(0), Relation::Greater});
    return sys;
}

inline IndexSet set_difference_of(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline void normalize_index_set(IndexSet& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

} // namespace detail

/// Faces of cone(rays[c]) that are spanned by subsets of the listed rays: S
/// is a face iff some functional vanishes on S and is positive on the rest.
inline std::vector<IndexSet> cone_faces(const std::vector<Vector>& rays, const IndexSet& c, std::size_t n)
{
    std::vector<Vector> gens;
    for (auto i : c)
        gens.push_back(rays[i]);
    std::vector<IndexSet> out;
    if (rank_of(gens) == c.size()) {
        for (std::size_t k = 0; k <= c.size(); ++k)
            for_each_subset(c.size(), k, [&](const IndexSet& s) {
                IndexSet face;
                for (auto i : s)
                    face.push_back(c[i]);
                out.push_back(face);
            });
        return out;
    }
    if (c.size() > kConeFaceBudget)
        raise(ErrorKind::InvalidFan, "non-simplicial cone with more than " + std::to_string(kConeFaceBudget) + " rays");
    for (std::size_t k = 0; k <= c.size(); ++k)
        for_each_subset(c.size(), k, [&](const IndexSet& s) {
            IndexSet face;
            for (auto i : s)
                face.push_back(c[i]);
            auto sys = detail::sign_pattern(rays, face, detail::set_difference_of(c, face), {});
            if (strict_lp_feasible(sys, n))
                out.push_back(face);
        });
    return out;
}

/// Builds a fan from rays and generating cones (1 index set per cone, any
/// order), adding all faces. Rejects zero and repeated rays.
inline Fan make_fan(std::size_t n, std::vector<Vector> rays, std::vector<IndexSet> cones)
{
    Fan f;
    f.n = n;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != n)
            raise(ErrorKind::DimensionMismatch, "ray " + std::to_string(i + 1) + " has wrong length");
        if (is_zero_vector(rays[i]))
            raise(ErrorKind::ZeroRay, "ray " + std::to_string(i + 1) + " is zero");
        for (std::size_t j = 0; j < i; ++j)
            if (positively_proportional(rays[i], rays[j]))
                raise(ErrorKind::RepeatedRay,
                      "rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " span the same ray");
    }
    f.rays = std::move(rays);
    std::set<IndexSet> all;
    all.insert(IndexSet{});
    for (auto& c : cones) {
        detail::normalize_index_set(c);
        for (auto i : c)
            if (i >= f.rays.size())
                raise(ErrorKind::InvalidFan, "cone refers to ray " + std::to_string(i + 1) + " which does not exist");
        all.insert(c);
        for (auto& face : cone_faces(f.rays, c, n))
            all.insert(face);
    }
    f.cones.assign(all.begin(), all.end());
    std::stable_sort(f.cones.begin(), f.cones.end(),
                     [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    return f;
}

/// Normal fan of an irredundant polytope: ray j is the normal of facet j,
/// and every face contributes the cone over the normals of its facets.
inline Fan normal_fan(const HalfspaceRep& h)
{
    const VertexRep v = vertices_from_halfspaces(h);
    if (!v.redundant.empty())
        raise(ErrorKind::RedundantFacet, "facet " + std::to_string(v.redundant.front() + 1) + " is redundant");
    Fan f;
    f.n = h.n;
    for (const auto& facet : h.facets)
        f.rays.push_back(facet.normal);
    for (const auto& face : face_lattice(h, v).faces)
        f.cones.push_back(face.facets);
    std::stable_sort(f.cones.begin(), f.cones.end(),
                     [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    return f;
}

namespace detail {

/// Half-open angular position: 0 for the half-plane y > 0 or (y = 0, x > 0).
inline int half_plane(const Vector& v)
{
    return (sign(v[1]) > 0 || (sign(v[1]) == 0 && sign(v[0]) > 0)) ? 0 : 1;
}

inline FieldElement cross2(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Ray indices sorted counterclockwise from the positive x-axis.
inline IndexSet angular_order(const std::vector<Vector>& rays)
{
    IndexSet idx(rays.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const int ha = half_plane(rays[a]), hb = half_plane(rays[b]);
        if (ha != hb)
            return ha < hb;
        return sign(cross2(rays[a], rays[b])) > 0;
    });
    return idx;
}

inline bool complete_2d(const Fan& f, std::vector<std::string>& problems)
{
    if (f.rays.size() < 3) {
        problems.push_back("fewer than three rays cannot cover the plane");
        return false;
    }
    const IndexSet order = angular_order(f.rays);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t a = order[k], b = order[(k + 1) % order.size()];
        if (sign(cross2(f.rays[a], f.rays[b])) <= 0) {
            problems.push_back("rays " + std::to_string(a + 1) + " and " + std::to_string(b + 1)
                               + " are at least a half-turn apart");
            return false;
        }
        IndexSet c{std::min(a, b), std::max(a, b)};
        if (!f.has_cone(c)) {
            problems.push_back("sector between rays " + std::to_string(a + 1) + " and " + std::to_string(b + 1)
                               + " is not covered");
            return false;
        }
    }
    return true;
}

inline bool complete_3d(const Fan& f, std::vector<std::string>& problems)
{
    std::vector<IndexSet> full;
    for (const auto& c : f.cones)
        if (f.cone_dimension(c) == 3)
            full.push_back(c);
    if (full.empty()) {
        problems.push_back("no three-dimensional cone");
        return false;
    }
    // Walls: two-dimensional faces of full cones, keyed by their ray sets.
    std::map<IndexSet, std::vector<std::size_t>> walls;
    for (std::size_t k = 0; k < full.size(); ++k)
        for (const auto& face : cone_faces(f.rays, full[k], 3))
            if (f.cone_dimension(face) == 2)
                walls[face].push_back(k);
    std::vector<std::vector<std::size_t>> adj(full.size());
    for (const auto& [wall, owners] : walls) {
        if (owners.size() != 2) {
            std::string w;
            for (auto i : wall)
                w += (w.empty() ? "" : ",") + std::to_string(i + 1);
            problems.push_back("wall {" + w + "} lies in " + std::to_string(owners.size()) + " full cones");
            return false;
        }
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(full.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        for (auto m : adj[k])
            if (!seen[m]) {
                seen[m] = true;
                ++reached;
                stack.push_back(m);
            }
    }
    if (reached != full.size()) {
        problems.push_back("full cones do not form a connected complex");
        return false;
    }
    return true;
}

} // namespace detail

/// Validity (face closure, pointed cones with extreme generators, pairwise
/// intersection along common faces), simpliciality and completeness.
/// Completeness is decided for n <= 3 only.
inline FanPredicates fan_predicates(const Fan& f)
{
    FanPredicates out;
    out.valid = true;
    out.simplicial = true;
    auto name = [](const IndexSet& c) {
        std::string s = "{";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + std::to_string(c[i] + 1);
        return s + "}";
    };

    if (!f.has_cone(IndexSet{})) {
        out.valid = false;
        out.problems.push_back("the zero cone is missing");
    }
    for (const auto& c : f.cones) {
        if (f.cone_dimension(c) != c.size())
            out.simplicial = false;
        const auto faces = cone_faces(f.rays, c, f.n);
        if (std::find(faces.begin(), faces.end(), IndexSet{}) == faces.end()) {
            out.valid = false;
            out.problems.push_back("cone " + name(c) + " is not pointed");
            continue;
        }
        for (auto i : c)
            if (std::find(faces.begin(), faces.end(), IndexSet{i}) == faces.end()) {
                out.valid = false;
                out.problems.push_back("ray " + std::to_string(i + 1) + " is not extreme in cone " + name(c));
            }
        for (const auto& face : faces)
            if (!f.has_cone(face)) {
                out.valid = false;
                out.problems.push_back("face " + name(face) + " of cone " + name(c) + " is missing");
            }
    }
    const auto maximal = f.maximal_cones();
    for (std::size_t a = 0; a < maximal.size(); ++a)
        for (std::size_t b = a + 1; b < maximal.size(); ++b) {
            const IndexSet common = set_intersection_of(maximal[a], maximal[b]);
            auto sys = detail::sign_pattern(f.rays, common, detail::set_difference_of(maximal[a], common),
                                            detail::set_difference_of(maximal[b], common));
            if (!strict_lp_feasible(sys, f.n)) {
                out.valid = false;
                out.problems.push_back("cones " + name(maximal[a]) + " and " + name(maximal[b])
                                       + " do not meet in a common face");
            }
        }

    if (f.n == 1) {
        bool pos = false, neg = false;
        for (const auto& r : f.rays)
            (sign(r[0]) > 0 ? pos : neg) = true;
        out.complete = out.valid && pos && neg;
    } else if (f.n == 2) {
        out.complete = out.valid && detail::complete_2d(f, out.problems);
    } else if (f.n == 3) {
        out.complete = out.valid && detail::complete_3d(f, out.problems);
    }
    return out;
}

/// Same as fan_predicates but raises DimensionTooHigh when completeness
/// cannot be decided.
inline FanPredicates fan_predicates_strict(const Fan& f)
{
    FanPredicates p = fan_predicates(f);
    if (!p.complete)
        raise(ErrorKind::DimensionTooHigh, "completeness is decided for n <= 3 only");
    return p;
}

/// Offsets λ (one per ray) such that {μ : ⟨μ, X_j⟩ ≥ λ_j} has normal fan f,
/// or nullopt. Solved as strict convexity of the piecewise-linear support
/// function across every wall, with λ = 0 on the first maximal cone.
inline std::optional<Vector> is_polytopal(const Fan& f)
{
    if (f.n > 3)
        raise(ErrorKind::DimensionTooHigh, "polytopality is decided for n <= 3 only");
    const FanPredicates p = fan_predicates(f);
    if (!p.valid || !p.simplicial || !p.complete || !*p.complete)
        raise(ErrorKind::InvalidFan, "polytopality needs a valid complete simplicial fan");

    const auto maximal = f.maximal_cones();
    const std::size_t d = f.rays.size();
    std::vector<bool> gauged(d, false);
    for (auto i : maximal.front())
        gauged[i] = true;
    std::vector<std::size_t> var_of(d, 0);
    std::size_t num_vars = 0;
    for (std::size_t j = 0; j < d; ++j)
        if (!gauged[j])
            var_of[j] = num_vars++;

    // Vertex of cone σ: m_σ = A_σ⁻¹ λ_σ, i.e. m_σ = Σ_i λ_{σ_i} · (column i of A_σ⁻¹).
    auto vertex_in_lambda = [&](const IndexSet& sigma) {
        std::vector<Vector> rows;
        for (auto i : sigma)
            rows.push_back(f.rays[i]);
        const FieldMatrix a = FieldMatrix::from_rows(rows);
        std::vector<Vector> inv_cols;
        for (std::size_t i = 0; i < f.n; ++i) {
            Vector e = detail::zero_vector(f.n);
            e[i] = FieldElement(1);
            inv_cols.push_back(*solve_square(a, e));
        }
        return inv_cols;
    };

    std::vector<Constraint<FieldElement>> sys;
    for (std::size_t a = 0; a < maximal.size(); ++a) {
        const auto inv_cols = vertex_in_lambda(maximal[a]);
        for (std::size_t b = 0; b < maximal.size(); ++b) {
            if (a == b)
                continue;
            const IndexSet common = set_intersection_of(maximal[a], maximal[b]);
            if (common.size() + 1 != f.n)
                continue;
            // ⟨m_σ, X_k⟩ - λ_k > 0 for the ray k across the wall.
            const std::size_t k = detail::set_difference_of(maximal[b], common).front();
            Constraint<FieldElement> c{Vector(num_vars, FieldElement(0)), FieldElement(0), Relation::Greater};
            for (std::size_t i = 0; i < f.n; ++i) {
                const std::size_t j = maximal[a][i];
                if (!gauged[j])
                    c.coeffs[var_of[j]] += dot(inv_cols[i], f.rays[k]);
            }
            if (!gauged[k])
                c.coeffs[var_of[k]] -= FieldElement(1);
            sys.push_back(std::move(c));
        }
    }
    auto x = strict_lp_feasible(sys, num_vars);
    if (!x)
        return std::nullopt;
    Vector lambda(d, FieldElement(0));
    for (std::size_t j = 0; j < d; ++j)
        if (!gauged[j])
            lambda[j] = (*x)[var_of[j]];
    return lambda;
}

/// Same rays up to positive scaling (matched by index) and the same cones.
inline bool same_fan(const Fan& a, const Fan& b)
{
    if (a.n != b.n || a.rays.size() != b.rays.size())
        return false;
    for (std::size_t i = 0; i < a.rays.size(); ++i)
        if (!positively_proportional(a.rays[i], b.rays[i]))
            return false;
    std::set<IndexSet> ca(a.cones.begin(), a.cones.end()), cb(b.cones.begin(), b.cones.end());
    return ca == cb;
}

} // namespace quasitoric
