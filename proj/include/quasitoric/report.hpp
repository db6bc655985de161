#pragma once

#include <string>
#include <vector>

#include "quasitoric/document.hpp"

namespace quasitoric {

/// Machine-readable reports behind the command line. Exact values use the
/// document's element encoding; indices are 1-based.
namespace report {

inline Json integers(const std::vector<Integer>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(to_string(x));
    return out;
}

inline Json strings(const std::vector<std::string>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(x);
    return out;
}

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline Json predicates(const FanPredicates& p)
{
    return {{"valid", p.valid}, {"simplicial", p.simplicial}, {"complete", optional_bool(p.complete)},
            {"problems", strings(p.problems)}};
}

inline Json fan(const Fan& f, const Field& field)
{
    return {{"rays", vectors_to_json(f.rays, field)}, {"maximal_cones", index_sets_to_json(f.maximal_cones())}};
}

inline Json quasilattice(const Quasilattice& q)
{
    return {{"generators", q.generators().size()},
            {"flattened_rank", q.flattened_rank()},
            {"real_rank", rank_of(q.generators())},
            {"is_lattice", q.is_lattice()}};
}

inline Json polytopal(const Fan& f, const Field& field)
{
    if (f.n > 3)
        return {{"polytopal", nullptr}, {"reason", "dimension above 3"}};
    const auto heights = is_polytopal(f);
    return {{"polytopal", heights.has_value()}, {"heights", heights ? vector_to_json(*heights, field) : Json(nullptr)}};
}

/// Polytope pipeline for a polytope document, predicates for a fan document.
inline Json analyze(const Document& d)
{
    Json r = {{"name", d.name}, {"n", d.n}};
    if (d.polytope) {
        const VertexRep v = vertices_from_halfspaces(*d.polytope);
        Json vertices = Json::array();
        for (std::size_t i = 0; i < v.vertices.size(); ++i)
            vertices.push_back({{"point", vector_to_json(v.vertices[i], d.field)},
                                {"facets", index_set_to_json(v.vertex_facets[i])}});
        r["vertices"] = vertices;
        r["redundant_facets"] = index_set_to_json(v.redundant);
        const FaceLattice faces = face_lattice(*d.polytope, v);
        Json counts = Json::array();
        for (std::size_t k = 0; k <= d.n; ++k)
            counts.push_back(faces.count(k));
        r["faces"] = {{"by_dimension", counts}, {"total", faces.faces.size()}};
        r["simple"] = is_simple(*d.polytope, v);
        if (v.redundant.empty()) {
            const Fan nf = normal_fan(*d.polytope);
            const FanPredicates p = fan_predicates(nf);
            r["normal_fan"] = fan(nf, d.field);
            r["normal_fan"]["predicates"] = predicates(p);
            r["simple_iff_simplicial"] = r["simple"].get<bool>() == p.simplicial;
        } else {
            r["normal_fan"] = nullptr;
        }
    }
    if (d.fan) {
        const FanPredicates p = fan_predicates(*d.fan);
        r["fan"] = fan(*d.fan, d.field);
        r["fan"]["predicates"] = predicates(p);
        if (p.valid && p.simplicial && p.complete.value_or(false))
            r["fan"]["polytopal"] = polytopal(*d.fan, d.field);
    }
    if (!d.polytope && !d.fan)
        raise(ErrorKind::ParseError, "document has neither a polytope nor a fan");
    return r;
}

inline Json check_triple(const Document& d)
{
    const FundamentalTriple t = document_triple(d);
    const TripleReport tr = triple_validate(t);
    Json issues = Json::array();
    for (const auto& i : tr.issues)
        issues.push_back({{"kind", std::string(to_string(i.kind))}, {"detail", i.detail}});
    Json coeffs = Json::array();
    for (const auto& c : tr.coefficients)
        coeffs.push_back(c ? integers(*c) : Json(nullptr));
    return {{"name", d.name},
            {"valid", tr.valid()},
            {"issues", issues},
            {"warnings", strings(tr.warnings)},
            {"coefficients", coeffs},
            {"simple", tr.simple},
            {"normals_span_quasilattice", tr.normals_span_quasilattice},
            {"quasilattice", quasilattice(t.quasilattice)}};
}

/// Body of `d` against the quasilattice of `q`.
inline Json quasirational(const Document& d, const Document& q)
{
    // Q embeds in every field, so only two declared fields can clash.
    if (d.field && q.field && !d.field->same_as(*q.field))
        raise(ErrorKind::FieldMismatch, "body and quasilattice are declared over different fields");
    if (!q.quasilattice)
        raise(ErrorKind::ParseError, "quasilattice document has no quasilattice");
    if (q.n != d.n)
        raise(ErrorKind::DimensionMismatch, "body and quasilattice live in different dimensions");
    const Quasilattice ql = ql_span(*q.quasilattice, q.n);
    const Field field = d.field ? d.field : q.field;
    Fan f;
    if (d.polytope)
        f = normal_fan(*d.polytope);
    else if (d.fan)
        f = *d.fan;
    else
        raise(ErrorKind::ParseError, "document has neither a polytope nor a fan");
    Json rays = Json::array();
    bool all = true;
    for (const auto& u : f.rays) {
        const auto g = ray_generator(ql, u);
        all = all && g.has_value();
        rays.push_back(g ? Json{{"ray", vector_to_json(u, field)},
                                {"generator", vector_to_json(g->w, field)},
                                {"coefficients", integers(g->coefficients)},
                                {"canonical", g->canonical}}
                         : Json{{"ray", vector_to_json(u, field)}, {"generator", nullptr}});
    }
    return {{"name", d.name}, {"quasirational", all}, {"rays", rays}, {"quasilattice", quasilattice(ql)}};
}

inline Json charts(const Document& d)
{
    const FundamentalTriple t = document_triple(d);
    triple_validate(t).require_valid();
    Json out = Json::array();
    for (const auto& c : chart_groups(t)) {
        out.push_back({{"chart", c.vertex + 1},
                       {"vertex", c.point ? vector_to_json(*c.point, d.field) : Json(nullptr)},
                       {"active", index_set_to_json(c.active)},
                       {"images", vectors_to_json(c.images, d.field)},
                       {"class", to_string(c.classification)},
                       {"order", c.order ? Json(to_string(*c.order)) : Json(nullptr)}});
    }
    return {{"name", d.name}, {"quasilattice", quasilattice(t.quasilattice)}, {"charts", out}};
}

inline Json configuration(const ConfigurationReport& c, const Field& field)
{
    return {{"p", c.p},
            {"n", c.n},
            {"balanced", c.balanced},
            {"sum", vector_to_json(c.sum, field)},
            {"odd", c.odd},
            {"spanning", c.spanning},
            {"complete", c.complete},
            {"complete_iff_spanning", c.complete_iff_spanning},
            {"axioms",
             {{"simplices_independent", c.simplices_independent},
              {"face_closed", c.face_closed},
              {"cones_intersect_in_faces", c.cones_intersect_in_faces},
              {"covers_cone_of_vectors", c.covers_cone_of_vectors},
              {"ghosts_disjoint", c.ghosts_disjoint},
              {"hold", c.axioms_hold()}}},
            {"problems", strings(c.problems)}};
}

inline const VectorConfiguration& require_configuration(const Document& d)
{
    if (!d.configuration)
        raise(ErrorKind::ParseError, "document has no configuration");
    return *d.configuration;
}

inline Json validate_config(const Document& d)
{
    const VectorConfiguration& v = require_configuration(d);
    if (!d.triangulation)
        raise(ErrorKind::ParseError, "configuration has no triangulation");
    Json r = configuration(config_validate(v, *d.triangulation), d.field);
    r["name"] = d.name;
    return r;
}

/// The augmented configuration as a document, followed by its validation.
inline Document augment_document(const Document& d)
{
    const AugmentedTriple a = augment(document_triple(d));
    Document out;
    out.name = d.name.empty() ? std::string() : d.name + "-augmented";
    out.field = d.field;
    out.n = d.n;
    out.configuration = a.configuration;
    out.triangulation = a.triangulation;
    out.note = "vectors 1.." + std::to_string(a.rays) + " are the ray generators";
    return out;
}

inline Json augment(const Document& d)
{
    const Document out = augment_document(d);
    Json r = document_to_json(out);
    r["validation"] = configuration(config_validate(*out.configuration, *out.triangulation), d.field);
    return r;
}

inline Json gale(const Document& d)
{
    const VectorConfiguration& v = require_configuration(d);
    const GaleDual g = gale_dual(v, d.triangulation);
    // Every kernel row must be orthogonal to every coordinate row of V.
    bool kernel_exact = true;
    for (const auto& row : g.kernel_rows)
        for (std::size_t i = 0; i < v.n; ++i) {
            FieldElement s(0);
            for (std::size_t j = 0; j < v.p(); ++j)
                s = s + v.vectors[j][i] * row[j];
            kernel_exact = kernel_exact && s.is_zero();
        }
    Json points = Json::array();
    for (const auto& [re, im] : g.points)
        points.push_back({{"re", vector_to_json(re, d.field)}, {"im", vector_to_json(im, d.field)}});
    const auto z = chamber_point(g);
    Json chamber = Json::array();
    for (const auto& e : chamber_check(g, z))
        chamber.push_back({{"sigma", index_set_to_json(e.sigma)},
                           {"interior", e.interior},
                           {"weights", e.weights ? vector_to_json(*e.weights, d.field) : Json(nullptr)}});
    return {{"name", d.name},
            {"p", v.p()},
            {"n", v.n},
            {"m", g.m},
            {"kernel_dimension", g.kernel_rows.size()},
            {"kernel_rows", vectors_to_json(g.kernel_rows, d.field)},
            {"kernel_exact", kernel_exact},
            {"points", points},
            {"virtual_chamber", index_sets_to_json(g.virtual_chamber)},
            {"chamber_point", z ? vector_to_json(*z, d.field) : Json(nullptr)},
            {"chamber_check", chamber}};
}

inline Json polytopal_report(const Document& d)
{
    if (!d.fan)
        raise(ErrorKind::ParseError, "document has no fan");
    Json r = polytopal(*d.fan, d.field);
    r["name"] = d.name;
    return r;
}

/// True when every member of `fragment` occurs in `value`. Objects are
/// compared key by key, lists of equal length entry by entry, anything else
/// exactly.
inline bool matches(const Json& value, const Json& fragment)
{
    if (fragment.is_array()) {
        if (!value.is_array() || value.size() != fragment.size())
            return false;
        for (std::size_t i = 0; i < fragment.size(); ++i)
            if (!matches(value[i], fragment[i]))
                return false;
        return true;
    }
    if (!fragment.is_object())
        return value == fragment;
    if (!value.is_object())
        return false;
    for (const auto& [k, v] : fragment.items())
        if (!value.contains(k) || !matches(value.at(k), v))
            return false;
    return true;
}

} // namespace report

} // namespace quasitoric
