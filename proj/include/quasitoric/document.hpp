#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasitoric/configuration.hpp"

namespace quasitoric {

using Json = nlohmann::ordered_json;

/// One JSON corpus file. Every part except the dimension is optional; the
/// commands pick the parts they need. Indices are 1-based in the JSON text
/// and 0-based here.
struct Document {
    std::string name;
    Field field; // null means Q
    std::size_t n = 0;
    std::optional<HalfspaceRep> polytope;
    std::optional<Fan> fan;
    std::optional<std::vector<Vector>> quasilattice;
    std::optional<std::vector<Vector>> normals;
    std::optional<VectorConfiguration> configuration;
    std::optional<Triangulation> triangulation;
    std::string note;
    Json expected = Json::object(); // report fragments checked by the regression suite
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what)
{
    raise(ErrorKind::ParseError, where + ": " + what);
}

inline Rational rational_from_json(const Json& j, const std::string& where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    parse_fail(where, "expected a rational as \"p/q\" text or an integer");
}

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline const Json& member(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(where, std::string("missing \"") + key + "\"");
    return j.at(key);
}

inline const Json& array_at(const Json& j, const std::string& where)
{
    if (!j.is_array())
        parse_fail(where, "expected a list");
    return j;
}

} // namespace detail

inline Field field_from_json(const Json& j)
{
    if (j.is_null())
        return nullptr;
    const Json& mp = detail::array_at(detail::member(j, "minpoly", "field"), "field.minpoly");
    const Json& iv = detail::array_at(detail::member(j, "interval", "field"), "field.interval");
    if (iv.size() != 2)
        detail::parse_fail("field.interval", "expected [lo, hi]");
    std::vector<Rational> coeffs;
    for (const auto& c : mp)
        coeffs.push_back(detail::rational_from_json(c, "field.minpoly"));
    if (coeffs.size() < 2)
        detail::parse_fail("field.minpoly", "degree must be at least 1");
    return RealAlgebraicField::create(std::move(coeffs), detail::rational_from_json(iv[0], "field.interval"),
                                      detail::rational_from_json(iv[1], "field.interval"));
}

inline Json field_to_json(const Field& f)
{
    if (!f)
        return nullptr;
    Json mp = Json::array();
    for (const auto& c : f->minpoly())
        mp.push_back(detail::rational_to_json(c));
    return {{"minpoly", mp},
            {"interval", {detail::rational_to_json(f->declared_lo()), detail::rational_to_json(f->declared_hi())}}};
}

/// A coefficient list in the basis 1, α, α², …, or a bare rational.
inline FieldElement element_from_json(const Json& j, const Field& f, const std::string& where)
{
    if (!j.is_array())
        return f ? FieldElement::from_rational(f, detail::rational_from_json(j, where))
                 : FieldElement(detail::rational_from_json(j, where));
    const std::size_t degree = f ? f->degree() : 1;
    if (j.empty())
        detail::parse_fail(where, "empty coefficient list");
    if (j.size() > degree)
        raise(ErrorKind::FieldMismatch, where + ": " + std::to_string(j.size())
                                            + " coefficients for a field of degree " + std::to_string(degree));
    std::vector<Rational> c;
    for (const auto& x : j)
        c.push_back(detail::rational_from_json(x, where));
    if (!f)
        return FieldElement(c[0]);
    return FieldElement(f, std::move(c));
}

/// Rationals are written bare when the document has no field.
inline Json element_to_json(const FieldElement& x, const Field& f)
{
    if (x.bound() && !(f && x.field()->same_as(*f)))
        raise(ErrorKind::FieldMismatch, "element lives in a different field than the document");
    if (!f)
        return detail::rational_to_json(x.coefficients()[0]);
    Json out = Json::array();
    for (const auto& c : x.coefficients_in(f))
        out.push_back(detail::rational_to_json(c));
    return out;
}

inline Vector vector_from_json(const Json& j, const Field& f, std::size_t n, const std::string& where)
{
    detail::array_at(j, where);
    if (j.size() != n)
        raise(ErrorKind::DimensionMismatch, where + ": expected " + std::to_string(n) + " coordinates, got "
                                                + std::to_string(j.size()));
    Vector v;
    for (const auto& x : j)
        v.push_back(element_from_json(x, f, where));
    return v;
}

inline Json vector_to_json(const Vector& v, const Field& f)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(element_to_json(x, f));
    return out;
}

inline std::vector<Vector> vectors_from_json(const Json& j, const Field& f, std::size_t n, const std::string& where)
{
    std::vector<Vector> out;
    std::size_t k = 0;
    for (const auto& v : detail::array_at(j, where))
        out.push_back(vector_from_json(v, f, n, where + "[" + std::to_string(++k) + "]"));
    return out;
}

inline Json vectors_to_json(const std::vector<Vector>& vs, const Field& f)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(vector_to_json(v, f));
    return out;
}

/// 1-based index list in the document, bounds-checked against `count`.
inline IndexSet index_set_from_json(const Json& j, std::size_t count, const std::string& where)
{
    IndexSet s;
    for (const auto& x : detail::array_at(j, where)) {
        if (!x.is_number_integer())
            detail::parse_fail(where, "indices must be integers");
        const long i = x.get<long>();
        if (i < 1 || static_cast<std::size_t>(i) > count)
            detail::parse_fail(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(count));
        s.push_back(static_cast<std::size_t>(i - 1));
    }
    return s;
}

inline Json index_set_to_json(const IndexSet& s)
{
    Json out = Json::array();
    for (auto i : s)
        out.push_back(i + 1);
    return out;
}

inline std::vector<IndexSet> index_sets_from_json(const Json& j, std::size_t count, const std::string& where)
{
    std::vector<IndexSet> out;
    for (const auto& s : detail::array_at(j, where))
        out.push_back(index_set_from_json(s, count, where));
    return out;
}

inline Json index_sets_to_json(const std::vector<IndexSet>& ss)
{
    Json out = Json::array();
    for (const auto& s : ss)
        out.push_back(index_set_to_json(s));
    return out;
}

namespace detail {

/// Nested parts may repeat the field and dimension; they must agree.
inline void check_nested(const Json& part, const Document& d, const std::string& where)
{
    if (!part.is_object())
        parse_fail(where, "expected an object");
    if (part.contains("field")) {
        const Field f = field_from_json(part.at("field"));
        const bool same = (!f && !d.field) || (f && d.field && f->same_as(*d.field));
        if (!same)
            raise(ErrorKind::FieldMismatch, where + " declares a different field");
    }
    if (part.contains("n") && part.at("n") != Json(d.n))
        raise(ErrorKind::DimensionMismatch, where + " declares a different dimension");
}

inline HalfspaceRep polytope_from_json(const Json& j, const Document& d)
{
    check_nested(j, d, "polytope");
    HalfspaceRep h;
    h.n = d.n;
    std::size_t k = 0;
    for (const auto& f : array_at(member(j, "facets", "polytope"), "polytope.facets")) {
        const std::string where = "polytope.facets[" + std::to_string(++k) + "]";
        h.facets.push_back({vector_from_json(member(f, "normal", where), d.field, d.n, where + ".normal"),
                            element_from_json(member(f, "offset", where), d.field, where + ".offset")});
    }
    return h;
}

inline Fan fan_from_json(const Json& j, const Document& d)
{
    check_nested(j, d, "fan");
    auto rays = vectors_from_json(member(j, "rays", "fan"), d.field, d.n, "fan.rays");
    auto cones = index_sets_from_json(member(j, "cones", "fan"), rays.size(), "fan.cones");
    return make_fan(d.n, std::move(rays), std::move(cones));
}

} // namespace detail

/// Reads a document. Besides the nested layout written by
/// document_to_json, a bare polytope ({"n", "facets"}) or a bare
/// configuration ({"vectors", "triangulation", "ghosts"}) is accepted.
inline Document document_from_json(const Json& j)
{
    using detail::member;
    if (!j.is_object())
        detail::parse_fail("document", "expected a JSON object");
    Document d;
    if (j.contains("name"))
        d.name = j.at("name").get<std::string>();
    if (j.contains("note"))
        d.note = j.at("note").get<std::string>();
    if (j.contains("expected"))
        d.expected = j.at("expected");
    d.field = j.contains("field") ? field_from_json(j.at("field")) : nullptr;

    const Json& n = member(j, "n", "document");
    if (!n.is_number_integer() || n.get<long>() < 1)
        detail::parse_fail("n", "expected a positive integer");
    d.n = n.get<std::size_t>();

    if (j.contains("polytope"))
        d.polytope = detail::polytope_from_json(j.at("polytope"), d);
    else if (j.contains("facets"))
        d.polytope = detail::polytope_from_json(j, d);
    if (j.contains("fan"))
        d.fan = detail::fan_from_json(j.at("fan"), d);
    if (j.contains("quasilattice"))
        d.quasilattice = vectors_from_json(member(j.at("quasilattice"), "generators", "quasilattice"), d.field, d.n,
                                           "quasilattice.generators");
    if (j.contains("normals"))
        d.normals = vectors_from_json(j.at("normals"), d.field, d.n, "normals");

    const Json* config = j.contains("configuration") ? &j.at("configuration") : j.contains("vectors") ? &j : nullptr;
    if (config) {
        VectorConfiguration v;
        v.n = d.n;
        v.vectors = vectors_from_json(member(*config, "vectors", "configuration"), d.field, d.n, "configuration.vectors");
        if (config->contains("ghosts"))
            v.ghosts = index_set_from_json(config->at("ghosts"), v.p(), "configuration.ghosts");
        std::sort(v.ghosts.begin(), v.ghosts.end());
        if (config->contains("triangulation"))
            d.triangulation = Triangulation::closure_of(
                index_sets_from_json(config->at("triangulation"), v.p(), "configuration.triangulation"));
        d.configuration = std::move(v);
    }
    return d;
}

/// Fans and triangulations are written through their maximal cells, so a
/// written document reads back to the same closed sets.
inline Json document_to_json(const Document& d)
{
    Json j = Json::object();
    if (!d.name.empty())
        j["name"] = d.name;
    j["field"] = field_to_json(d.field);
    j["n"] = d.n;
    if (d.polytope) {
        Json facets = Json::array();
        for (const auto& f : d.polytope->facets)
            facets.push_back({{"normal", vector_to_json(f.normal, d.field)}, {"offset", element_to_json(f.offset, d.field)}});
        j["polytope"] = {{"facets", facets}};
    }
    if (d.fan)
        j["fan"] = {{"rays", vectors_to_json(d.fan->rays, d.field)}, {"cones", index_sets_to_json(d.fan->maximal_cones())}};
    if (d.quasilattice)
        j["quasilattice"] = {{"generators", vectors_to_json(*d.quasilattice, d.field)}};
    if (d.normals)
        j["normals"] = vectors_to_json(*d.normals, d.field);
    if (d.configuration) {
        Json c = {{"vectors", vectors_to_json(d.configuration->vectors, d.field)}};
        if (d.triangulation)
            c["triangulation"] = index_sets_to_json(d.triangulation->maximal());
        c["ghosts"] = index_set_to_json(d.configuration->ghosts);
        j["configuration"] = c;
    }
    if (!d.note.empty())
        j["note"] = d.note;
    if (!d.expected.empty())
        j["expected"] = d.expected;
    return j;
}

inline Document parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorKind::ParseError, e.what());
    }
    try {
        return document_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, e.what());
    }
}

namespace detail {

inline bool has_object(const Json& j)
{
    if (j.is_object())
        return true;
    if (j.is_array())
        for (const auto& x : j)
            if (has_object(x))
                return true;
    return false;
}

inline void pretty(const Json& j, std::string& out, std::size_t indent)
{
    const std::string pad(indent + 2, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            pretty(value, out, indent + 2);
            out += ++k < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "}";
        return;
    }
    const std::string flat = j.dump();
    if (!j.is_array() || j.empty() || (!has_object(j) && flat.size() + indent <= 100)) {
        out += flat;
        return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        pretty(j[i], out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
}

} // namespace detail

/// Indented JSON with short lists of values kept on one line.
inline std::string dump_pretty(const Json& j)
{
    std::string out;
    detail::pretty(j, out, 0);
    return out + "\n";
}

inline std::string serialize_document(const Document& d) { return dump_pretty(document_to_json(d)); }

inline Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

/// The fundamental triple stored in a document: its polytope (or fan), its
/// quasilattice, and its normals.
inline FundamentalTriple document_triple(const Document& d)
{
    if (!d.quasilattice)
        raise(ErrorKind::ParseError, "document has no quasilattice");
    if (!d.normals)
        raise(ErrorKind::ParseError, "document has no normals");
    if (d.polytope)
        return {*d.polytope, ql_span(*d.quasilattice, d.n), *d.normals};
    if (d.fan)
        return {*d.fan, ql_span(*d.quasilattice, d.n), *d.normals};
    raise(ErrorKind::ParseError, "document has neither a polytope nor a fan");
}

inline Document document_of(const std::string& name, const FundamentalTriple& t)
{
    Document d;
    d.name = name;
    d.field = t.quasilattice.field();
    d.n = t.n();
    if (t.has_polytope())
        d.polytope = t.polytope();
    else
        d.fan = t.fan();
    d.quasilattice = t.quasilattice.generators();
    d.normals = t.normals;
    return d;
}

} // namespace quasitoric
