#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quasitoric/fan.hpp"
#include "quasitoric/triple.hpp"

namespace quasitoric {

/// Ordered list of vectors in Kⁿ (repetitions allowed) with the indices of
/// the ghost vectors. Indices are 0-based here and 1-based in documents.
struct VectorConfiguration {
    std::size_t n = 0;
    std::vector<Vector> vectors;
    IndexSet ghosts;

    std::size_t p() const { return vectors.size(); }
};

struct Triangulation {
    std::vector<IndexSet> simplices; // sorted index sets, closed under subsets

    /// Closure of the given simplices under taking subsets.
    static Triangulation closure_of(std::vector<IndexSet> generators)
    {
        std::set<IndexSet> all;
        for (auto& s : generators) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (std::size_t k = 0; k <= s.size(); ++k)
                for_each_subset(s.size(), k, [&](const IndexSet& sub) {
                    IndexSet face;
                    for (auto i : sub)
                        face.push_back(s[i]);
                    all.insert(face);
                });
        }
        Triangulation t;
        t.simplices.assign(all.begin(), all.end());
        std::stable_sort(t.simplices.begin(), t.simplices.end(),
                         [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
        return t;
    }

    std::vector<IndexSet> maximal() const
    {
        std::vector<IndexSet> out;
        for (const auto& s : simplices) {
            bool is_max = true;
            for (const auto& t : simplices)
                if (t.size() > s.size() && is_subset_of(s, t)) {
                    is_max = false;
                    break;
                }
            if (is_max)
                out.push_back(s);
        }
        return out;
    }

    IndexSet used_indices() const
    {
        std::set<std::size_t> u;
        for (const auto& s : simplices)
            u.insert(s.begin(), s.end());
        return IndexSet(u.begin(), u.end());
    }
};

struct ConfigurationReport {
    std::size_t p = 0, n = 0;
    bool simplices_independent = false;
    bool face_closed = false;         // axiom 1
    bool cones_intersect_in_faces = false; // axiom 2
    bool covers_cone_of_vectors = false;   // axiom 3
    bool balanced = false;
    Vector sum;
    bool odd = false;
    bool spanning = false;
    bool complete = false;
    bool complete_iff_spanning = false;
    bool ghosts_disjoint = false;
    std::vector<std::string> problems;

    bool axioms_hold() const
    {
        return simplices_independent && face_closed && cones_intersect_in_faces && covers_cone_of_vectors
               && ghosts_disjoint;
    }
};

namespace detail {

inline std::vector<Vector> pick(const std::vector<Vector>& vs, const IndexSet& idx)
{
    std::vector<Vector> out;
    for (auto i : idx)
        out.push_back(vs[i]);
    return out;
}

inline std::string index_name(const IndexSet& s)
{
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i] + 1);
    return r + "}";
}

/// Walls of the top-dimensional simplices with the number of simplices
/// containing each; top dimension is the rank of the whole configuration.
inline std::map<IndexSet, std::vector<std::size_t>> walls_of(const std::vector<IndexSet>& top)
{
    std::map<IndexSet, std::vector<std::size_t>> walls;
    for (std::size_t k = 0; k < top.size(); ++k)
        for (std::size_t drop = 0; drop < top[k].size(); ++drop) {
            IndexSet w = top[k];
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(drop));
            walls[w].push_back(k);
        }
    return walls;
}

/// The functional on span(V) vanishing on the wall and positive on `apex`.
inline Vector wall_functional(const std::vector<Vector>& vectors, const IndexSet& wall, std::size_t apex,
                              std::size_t n)
{
    // f ⊥ wall and f ∈ span(V) = (V^⊥)^⊥.
    std::vector<Vector> rows = pick(vectors, wall);
    for (const auto& k : kernel(FieldMatrix::from_rows(vectors)))
        rows.push_back(k);
    std::vector<Vector> ker;
    if (rows.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            Vector e(n, FieldElement(0));
            e[i] = FieldElement(1);
            ker.push_back(e);
        }
    } else {
        ker = kernel(FieldMatrix::from_rows(rows));
    }
    Vector f = ker.front();
    if (dot(f, vectors[apex]).sign() < 0)
        f = -f;
    return f;
}

} // namespace detail

/// Triangulation axioms, balance, parity, spanning and completeness, all
/// decided exactly. Never raises on well-formed indices.
inline ConfigurationReport config_validate(const VectorConfiguration& v, const Triangulation& t)
{
    ConfigurationReport r;
    r.p = v.p();
    r.n = v.n;
    for (const auto& s : t.simplices)
        for (auto i : s)
            if (i >= v.p())
                raise(ErrorKind::InvalidConfiguration, "simplex refers to vector " + std::to_string(i + 1)
                                                           + " but there are " + std::to_string(v.p()));

    r.simplices_independent = true;
    for (const auto& s : t.simplices)
        if (rank_of(detail::pick(v.vectors, s)) != s.size()) {
            r.simplices_independent = false;
            r.problems.push_back("simplex " + detail::index_name(s) + " indexes dependent vectors");
        }

    r.face_closed = true;
    for (const auto& s : t.simplices)
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            IndexSet face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            if (std::find(t.simplices.begin(), t.simplices.end(), face) == t.simplices.end()) {
                r.face_closed = false;
                r.problems.push_back("face " + detail::index_name(face) + " of " + detail::index_name(s)
                                     + " is missing");
            }
        }
    if (std::find(t.simplices.begin(), t.simplices.end(), IndexSet{}) == t.simplices.end()) {
        r.face_closed = false;
        r.problems.push_back("the empty simplex is missing");
    }

    const auto maximal = t.maximal();
    r.cones_intersect_in_faces = r.simplices_independent;
    if (r.simplices_independent)
        for (std::size_t a = 0; a < maximal.size(); ++a)
            for (std::size_t b = a + 1; b < maximal.size(); ++b) {
                const IndexSet common = set_intersection_of(maximal[a], maximal[b]);
                auto sys = detail::sign_pattern(v.vectors, common, detail::set_difference_of(maximal[a], common),
                                                detail::set_difference_of(maximal[b], common));
                if (!strict_lp_feasible(sys, v.n)) {
                    r.cones_intersect_in_faces = false;
                    r.problems.push_back("cones of " + detail::index_name(maximal[a]) + " and "
                                         + detail::index_name(maximal[b]) + " overlap beyond a common face");
                }
            }

    const std::size_t span_rank = rank_of(v.vectors);
    r.spanning = span_rank == v.n;
    std::vector<IndexSet> top;
    for (const auto& s : maximal)
        if (s.size() == span_rank)
            top.push_back(s);
    bool has_free_wall = false;
    if (span_rank == 0) {
        r.covers_cone_of_vectors = true;
    } else if (top.empty() || !r.simplices_independent) {
        r.covers_cone_of_vectors = false;
        r.problems.push_back("no simplex of full rank " + std::to_string(span_rank));
    } else {
        // The union of the cones is the intersection of the half-spaces of its
        // free walls; it contains cone(V) iff every vector is on their inner side.
        r.covers_cone_of_vectors = true;
        for (const auto& [wall, owners] : detail::walls_of(top)) {
            if (owners.size() != 1)
                continue;
            has_free_wall = true;
            const IndexSet& cell = top[owners.front()];
            const std::size_t apex = detail::set_difference_of(cell, wall).front();
            const Vector f = detail::wall_functional(v.vectors, wall, apex, v.n);
            for (std::size_t i = 0; i < v.p(); ++i)
                if (dot(f, v.vectors[i]).sign() < 0) {
                    r.covers_cone_of_vectors = false;
                    r.problems.push_back("vector " + std::to_string(i + 1) + " lies outside the free wall "
                                         + detail::index_name(wall));
                    break;
                }
        }
    }
    r.complete = r.spanning && r.simplices_independent && r.cones_intersect_in_faces && !top.empty()
                 && !has_free_wall;

    r.sum = Vector(v.n, FieldElement(0));
    for (const auto& x : v.vectors)
        r.sum = r.sum + x;
    r.balanced = is_zero_vector(r.sum);
    r.odd = v.p() > v.n && (v.p() - v.n) % 2 == 1;
    r.complete_iff_spanning = r.complete == r.spanning;

    const IndexSet used = t.used_indices();
    r.ghosts_disjoint = set_intersection_of(used, v.ghosts).empty();
    if (!r.ghosts_disjoint)
        r.problems.push_back("a ghost vector is indexed by a simplex");
    return r;
}

/// (V, T) together with the calibration: vector i of the configuration is
/// the image of the i-th standard basis vector, and J lists the ghosts.
struct AugmentedTriple {
    VectorConfiguration configuration;
    Triangulation triangulation;
    std::size_t rays = 0; // vectors 0..rays-1 are the ray generators

    const IndexSet& ghosts() const { return configuration.ghosts; }
};

/// Extends the ray generators of a complete simplicial triple by ghost
/// vectors until they generate Q, sum to zero, and p - n is odd.
inline AugmentedTriple augment(const FundamentalTriple& t)
{
    const Fan fan = t.has_polytope() ? normal_fan(t.polytope()) : t.fan();
    const FanPredicates pred = fan_predicates(fan);
    if (!pred.simplicial)
        raise(ErrorKind::FanNotSimplicial, "augmentation needs a simplicial fan");
    if (!pred.complete || !*pred.complete)
        raise(ErrorKind::FanNotComplete, "augmentation needs a complete fan");
    triple_validate(t).require_valid();

    const std::size_t n = t.n();
    AugmentedTriple out;
    VectorConfiguration& v = out.configuration;
    v.n = n;
    v.vectors = t.normals;
    out.rays = v.vectors.size();

    for (const auto& g : t.quasilattice.generators())
        if (!Quasilattice::presentation(v.vectors, n).contains(g)) {
            v.ghosts.push_back(v.vectors.size());
            v.vectors.push_back(g);
        }

    Vector s(n, FieldElement(0));
    for (const auto& x : v.vectors)
        s = s + x;
    const auto& gens = t.quasilattice.generators();
    const bool even = (v.vectors.size() - n) % 2 == 0;
    std::vector<Vector> batch;
    if (!is_zero_vector(s) && even) {
        batch.push_back(-s);
    } else if (!is_zero_vector(s)) {
        std::optional<Vector> g1;
        for (const auto& g : gens)
            if (!is_zero_vector(-s - g)) {
                g1 = g;
                break;
            }
        if (!g1)
            g1 = scaled(gens.front(), FieldElement(2));
        batch.push_back(*g1);
        batch.push_back(-s - *g1);
    } else if (even) {
        batch.push_back(gens.front());
        batch.push_back(gens.front());
        batch.push_back(scaled(gens.front(), FieldElement(-2)));
    }
    for (auto& x : batch) {
        if (is_zero_vector(x) || !t.quasilattice.contains(x))
            throw std::logic_error("ghost vector is zero or outside the quasilattice");
        v.ghosts.push_back(v.vectors.size());
        v.vectors.push_back(std::move(x));
    }
    out.triangulation = Triangulation::closure_of(fan.cones);
    return out;
}

/// Decodes (V, T): the fan of T on the indexed vectors, the quasilattice
/// spanned by all of V, and the indexed vectors as normals.
inline FundamentalTriple decode(const VectorConfiguration& v, const Triangulation& t)
{
    const ConfigurationReport r = config_validate(v, t);
    if (!r.axioms_hold())
        raise(ErrorKind::InvalidConfiguration,
              r.problems.empty() ? std::string("triangulation axioms fail") : r.problems.front());
    const IndexSet used = t.used_indices();
    std::vector<std::size_t> ray_of(v.p(), 0);
    std::vector<Vector> rays;
    for (std::size_t k = 0; k < used.size(); ++k) {
        ray_of[used[k]] = k;
        rays.push_back(v.vectors[used[k]]);
    }
    std::vector<IndexSet> cones;
    for (const auto& s : t.simplices) {
        IndexSet c;
        for (auto i : s)
            c.push_back(ray_of[i]);
        cones.push_back(std::move(c));
    }
    Fan fan = make_fan(v.n, rays, std::move(cones));
    return FundamentalTriple{std::move(fan), ql_span(v.vectors, v.n), rays};
}

struct GaleDual {
    std::size_t m = 0;
    std::vector<Vector> kernel_rows; // all-ones first, then the paired rows
    std::vector<std::pair<Vector, Vector>> points; // Λ_j = (Re, Im), each of length m
    std::vector<IndexSet> virtual_chamber;
};

/// Gale dual of a balanced odd spanning configuration. The kernel of the
/// n×p matrix of V is presented by the all-ones row followed by the first
/// 2m rows of its reduced echelon basis; rows 2k+1 and 2k+2 give the real
/// and imaginary parts of the k-th complex coordinate.
inline GaleDual gale_dual(const VectorConfiguration& v, const std::optional<Triangulation>& t = std::nullopt)
{
    const std::size_t p = v.p(), n = v.n;
    Vector sum(n, FieldElement(0));
    for (const auto& x : v.vectors)
        sum = sum + x;
    if (!is_zero_vector(sum))
        raise(ErrorKind::NotBalanced, "the vectors do not sum to zero");
    if (!(p > n && (p - n) % 2 == 1))
        raise(ErrorKind::NotOdd, "p - n = " + std::to_string(static_cast<long>(p) - static_cast<long>(n))
                                     + " is not a positive odd number");
    if (rank_of(v.vectors) != n)
        raise(ErrorKind::NotSpanning, "the vectors do not span");

    const FieldMatrix a = FieldMatrix::from_columns(v.vectors, n);
    const auto basis = kernel(a);
    const auto reduced = row_reduce(FieldMatrix::from_rows(basis)).rref.to_rows();
    // In reduced form the all-ones vector is the sum of all rows, so any
    // single row may be traded for it; the last one is.
    GaleDual g;
    g.m = (p - n - 1) / 2;
    g.kernel_rows.push_back(Vector(p, FieldElement(1)));
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i)
        g.kernel_rows.push_back(reduced[i]);
    for (std::size_t j = 0; j < p; ++j) {
        Vector re, im;
        for (std::size_t k = 0; k < g.m; ++k) {
            re.push_back(g.kernel_rows[1 + 2 * k][j]);
            im.push_back(g.kernel_rows[2 + 2 * k][j]);
        }
        g.points.emplace_back(std::move(re), std::move(im));
    }
    if (t)
        for (const auto& s : t->maximal()) {
            IndexSet c;
            for (std::size_t i = 0; i < p; ++i)
                if (!std::binary_search(s.begin(), s.end(), i))
                    c.push_back(i);
            g.virtual_chamber.push_back(std::move(c));
        }
    return g;
}

struct ChamberEntry {
    IndexSet sigma;
    bool interior = false;
    std::optional<Vector> weights;
};

/// Heuristic interior condition: for each σ, whether the base point z
/// (Re parts then Im parts, 2m values; 0 when omitted) is a convex
/// combination of {Λ_i : i ∈ σ} with all weights strictly positive.
inline std::vector<ChamberEntry> chamber_check(const GaleDual& g, const std::optional<Vector>& z = std::nullopt)
{
    std::vector<ChamberEntry> out;
    for (const auto& sigma : g.virtual_chamber) {
        const std::size_t k = sigma.size();
        std::vector<Constraint<FieldElement>> sys;
        for (std::size_t i = 0; i < k; ++i) {
            Vector e(k, FieldElement(0));
            e[i] = FieldElement(1);
            sys.push_back({e, FieldElement(0), Relation::Greater});
        }
        sys.push_back({Vector(k, FieldElement(1)), FieldElement(1), Relation::Equal});
        for (int part = 0; part < 2; ++part)
            for (std::size_t c = 0; c < g.m; ++c) {
                Vector row;
                for (auto i : sigma)
                    row.push_back(part == 0 ? g.points[i].first[c] : g.points[i].second[c]);
                sys.push_back({row, z ? (*z)[part * g.m + c] : FieldElement(0), Relation::Equal});
            }
        ChamberEntry e{sigma, false, std::nullopt};
        if (k <= kLpVariableBudget) {
            e.weights = strict_lp_feasible(sys, k);
            e.interior = e.weights.has_value();
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// A point z (Re parts then Im parts) lying strictly inside every simplex
/// conv{Λ_i : i ∈ σ} of the virtual chamber, or nullopt when there is none.
/// The Λ_j are only defined up to translation (the all-ones row is in the
/// kernel), so this, not the test at 0, is the invariant question. Each σ
/// must have 2m + 1 members; the barycentric coordinates of z are then
/// affine in z and the search is one strict LP in 2m variables.
inline std::optional<Vector> chamber_point(const GaleDual& g)
{
    const std::size_t d = 2 * g.m;
    if (d > kLpVariableBudget)
        raise(ErrorKind::VariableBudgetExceeded, "chamber search in " + std::to_string(d) + " variables");
    std::vector<Constraint<FieldElement>> sys;
    for (const auto& sigma : g.virtual_chamber) {
        if (sigma.size() != d + 1)
            return std::nullopt;
        FieldMatrix b(d + 1, d + 1);
        for (std::size_t j = 0; j <= d; ++j) {
            const auto& [re, im] = g.points[sigma[j]];
            b(0, j) = FieldElement(1);
            for (std::size_t c = 0; c < g.m; ++c) {
                b(1 + c, j) = re[c];
                b(1 + g.m + c, j) = im[c];
            }
        }
        // Column k of the inverse: the barycentric response to coordinate k.
        std::vector<Vector> inv;
        for (std::size_t k = 0; k <= d; ++k) {
            Vector e(d + 1, FieldElement(0));
            e[k] = FieldElement(1);
            auto u = solve_square(b, e);
            if (!u)
                return std::nullopt; // flat simplex: empty interior
            inv.push_back(std::move(*u));
        }
        for (std::size_t j = 0; j <= d; ++j) {
            Vector row;
            for (std::size_t c = 0; c < d; ++c)
                row.push_back(inv[1 + c][j]);
            sys.push_back({row, -inv[0][j], Relation::Greater});
        }
    }
    if (d == 0)
        return Vector{};
    return strict_lp_feasible(sys, d);
}

} // namespace quasitoric
