#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quasitoric/lp.hpp"
#include "quasitoric/matrix.hpp"

namespace quasitoric {

using IndexSet = std::vector<std::size_t>;

/// Calls `fn` with every k-subset of {0, …, n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& fn)
{
    if (k > n)
        return;
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i)
        s[i] = i;
    while (true) {
        fn(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

inline IndexSet set_intersection_of(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool is_subset_of(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// The half-space ⟨μ, normal⟩ ≥ offset.
struct Facet {
    Vector normal;
    FieldElement offset;
};

struct HalfspaceRep {
    std::size_t n = 0;
    std::vector<Facet> facets;
};

struct VertexRep {
    std::vector<Vector> vertices;
    std::vector<IndexSet> vertex_facets; // active facets per vertex, sorted
    IndexSet redundant;                  // facets whose face is not (n-1)-dimensional
};

struct Face {
    IndexSet facets;   // facets containing the face; empty for the whole polytope
    IndexSet vertices; // vertices of the face
    std::size_t dimension = 0;
};

struct FaceLattice {
    std::vector<Face> faces;

    std::size_t count(std::size_t dim) const
    {
        return static_cast<std::size_t>(
            std::count_if(faces.begin(), faces.end(), [dim](const Face& f) { return f.dimension == dim; }));
    }
};

inline constexpr std::size_t kFacetBudget = 30;

namespace detail {

inline Vector zero_vector(std::size_t n) { return Vector(n, FieldElement(0)); }

inline void check_shape(const HalfspaceRep& h)
{
    if (h.n == 0)
        raise(ErrorKind::InvalidArgument, "dimension must be positive");
    if (h.facets.size() > kFacetBudget)
        raise(ErrorKind::FacetBudgetExceeded,
              std::to_string(h.facets.size()) + " facets exceed the budget of " + std::to_string(kFacetBudget));
    for (std::size_t j = 0; j < h.facets.size(); ++j) {
        if (h.facets[j].normal.size() != h.n)
            raise(ErrorKind::DimensionMismatch, "facet " + std::to_string(j + 1) + " has a normal of wrong length");
        if (is_zero_vector(h.facets[j].normal))
            raise(ErrorKind::InvalidArgument, "facet " + std::to_string(j + 1) + " has a zero normal");
    }
}

/// Rank of the differences v_i - v_0 over the listed vertices.
inline std::size_t affine_rank(const std::vector<Vector>& pts, const IndexSet& idx)
{
    if (idx.size() < 2)
        return 0;
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
        diffs.push_back(pts[idx[i]] - pts[idx[0]]);
    return rank_of(diffs);
}

} // namespace detail

/// Bounded and full-dimensional check; raises UnboundedPolytope or
/// DegenerateDimension. Returns a strictly interior point.
inline Vector interior_point(const HalfspaceRep& h)
{
    detail::check_shape(h);
    // Recession cone {y : ⟨y, X_j⟩ ≥ 0} must be trivial: no y in it with ±y_i > 0.
    for (std::size_t i = 0; i < h.n; ++i)
        for (int s : {1, -1}) {
            std::vector<Constraint<FieldElement>> sys;
            for (const auto& f : h.facets)
                sys.push_back({f.normal, FieldElement(0), Relation::GreaterEqual});
            Vector e = detail::zero_vector(h.n);
            e[i] = FieldElement(s);
            sys.push_back({e, FieldElement(0), Relation::Greater});
            if (strict_lp_feasible(sys, h.n))
                raise(ErrorKind::UnboundedPolytope, "a recession direction exists");
        }
    std::vector<Constraint<FieldElement>> sys;
    for (const auto& f : h.facets)
        sys.push_back({f.normal, f.offset, Relation::Greater});
    auto x = strict_lp_feasible(sys, h.n);
    if (!x)
        raise(ErrorKind::DegenerateDimension, "the half-spaces have no common interior point");
    return *x;
}

/// Vertex enumeration over all n-subsets of facets.
inline VertexRep vertices_from_halfspaces(const HalfspaceRep& h)
{
    interior_point(h);
    const std::size_t n = h.n, d = h.facets.size();
    auto feasible = [&](const Vector& v) {
        for (const auto& f : h.facets)
            if (dot(v, f.normal) < f.offset)
                return false;
        return true;
    };

    VertexRep out;
    for_each_subset(d, n, [&](const IndexSet& s) {
        std::vector<Vector> rows;
        Vector rhs;
        for (auto j : s) {
            rows.push_back(h.facets[j].normal);
            rhs.push_back(h.facets[j].offset);
        }
        auto v = solve_square(FieldMatrix::from_rows(rows), rhs);
        if (!v || !feasible(*v))
            return;
        for (const auto& w : out.vertices)
            if (w == *v)
                return;
        out.vertices.push_back(*v);
    });

    for (const auto& v : out.vertices) {
        IndexSet active;
        for (std::size_t j = 0; j < d; ++j)
            if (dot(v, h.facets[j].normal) == h.facets[j].offset)
                active.push_back(j);
        out.vertex_facets.push_back(std::move(active));
    }

    std::vector<IndexSet> facet_vertices(d);
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (auto j : out.vertex_facets[i])
            facet_vertices[j].push_back(i);
    for (std::size_t j = 0; j < d; ++j) {
        bool duplicate = false;
        for (std::size_t k = 0; k < j && !duplicate; ++k)
            duplicate = facet_vertices[k] == facet_vertices[j];
        if (duplicate || facet_vertices[j].size() < n
            || detail::affine_rank(out.vertices, facet_vertices[j]) + 1 < n)
            out.redundant.push_back(j);
    }
    return out;
}

/// Irredundant inward H-representation of the convex hull of `points`.
/// n = 1 and n = 2 list facets in increasing / counterclockwise order; n = 3
/// lists them in order of discovery over point triples.
inline HalfspaceRep halfspaces_from_vertices(const std::vector<Vector>& points, std::size_t n)
{
    if (n > 3)
        raise(ErrorKind::DimensionTooHigh, "convex hulls are implemented for n <= 3");
    if (n == 0)
        raise(ErrorKind::InvalidArgument, "dimension must be positive");
    for (const auto& p : points)
        if (p.size() != n)
            raise(ErrorKind::DimensionMismatch, "point of wrong dimension");
    IndexSet all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    if (points.empty() || detail::affine_rank(points, all) < n)
        raise(ErrorKind::NotFullDimensional, "points do not span an n-dimensional region");

    HalfspaceRep h;
    h.n = n;
    if (n == 1) {
        FieldElement lo = points[0][0], hi = points[0][0];
        for (const auto& p : points) {
            if (p[0] < lo)
                lo = p[0];
            if (p[0] > hi)
                hi = p[0];
        }
        h.facets.push_back({{FieldElement(1)}, lo});
        h.facets.push_back({{FieldElement(-1)}, -hi});
        return h;
    }

    if (n == 2) {
        auto cross = [](const Vector& o, const Vector& a, const Vector& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<Vector> pts = points;
        std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
            const int s = sign(a[0] - b[0]);
            return s != 0 ? s < 0 : a[1] < b[1];
        });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        // Andrew's monotone chain, dropping collinear points.
        std::vector<Vector> hull;
        for (int pass = 0; pass < 2; ++pass) {
            const std::size_t base = hull.size();
            for (const auto& p : pts) {
                while (hull.size() >= base + 2 && sign(cross(hull[hull.size() - 2], hull.back(), p)) <= 0)
                    hull.pop_back();
                hull.push_back(p);
            }
            hull.pop_back();
            std::reverse(pts.begin(), pts.end());
        }
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Vector& p = hull[i];
            const Vector& q = hull[(i + 1) % hull.size()];
            Vector normal{-(q[1] - p[1]), q[0] - p[0]};
            h.facets.push_back({normal, dot(normal, p)});
        }
        return h;
    }

    auto cross3 = [](const Vector& a, const Vector& b) {
        return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    std::vector<IndexSet> seen;
    for_each_subset(points.size(), 3, [&](const IndexSet& t) {
        Vector normal = cross3(points[t[1]] - points[t[0]], points[t[2]] - points[t[0]]);
        if (is_zero_vector(normal))
            return;
        const FieldElement offset = dot(normal, points[t[0]]);
        int side = 0;
        IndexSet on_plane;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const int s = sign(dot(normal, points[i]) - offset);
            if (s == 0)
                on_plane.push_back(i);
            else if (side == 0)
                side = s;
            else if (s != side)
                return;
        }
        if (std::find(seen.begin(), seen.end(), on_plane) != seen.end())
            return;
        seen.push_back(on_plane);
        if (side < 0)
            h.facets.push_back({-normal, -offset});
        else
            h.facets.push_back({normal, offset});
    });
    return h;
}

/// All faces as intersections of vertex active sets; the whole polytope is
/// the face with no facets. Dimension is n minus the rank of the normals.
inline FaceLattice face_lattice(const HalfspaceRep& h, const VertexRep& v)
{
    std::set<IndexSet> sets(v.vertex_facets.begin(), v.vertex_facets.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IndexSet> current(sets.begin(), sets.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                grew |= sets.insert(set_intersection_of(current[i], current[j])).second;
    }
    sets.insert(IndexSet{});

    FaceLattice lattice;
    for (const auto& s : sets) {
        Face f;
        f.facets = s;
        std::vector<Vector> normals;
        for (auto j : s)
            normals.push_back(h.facets[j].normal);
        f.dimension = h.n - rank_of(normals);
        for (std::size_t i = 0; i < v.vertices.size(); ++i)
            if (is_subset_of(s, v.vertex_facets[i]))
                f.vertices.push_back(i);
        lattice.faces.push_back(std::move(f));
    }
    std::stable_sort(lattice.faces.begin(), lattice.faces.end(),
                     [](const Face& a, const Face& b) { return a.dimension > b.dimension; });
    return lattice;
}

/// Every vertex lies on exactly n facets.
inline bool is_simple(const HalfspaceRep& h, const VertexRep& v)
{
    for (const auto& a : v.vertex_facets)
        if (a.size() != h.n)
            return false;
    return true;
}

} // namespace quasitoric
