#pragma once

#include <string>
#include <vector>

#include "quasitoric/corpus.hpp"
#include "quasitoric/document.hpp"

namespace quasitoric::corpus {

/// Parses the trapezoid parameter: "p/q", an integer, or "sqrt(N)".
inline TrapezoidParameter parse_parameter(const std::string& text)
{
    if (text.rfind("sqrt(", 0) == 0 && text.size() > 6 && text.back() == ')') {
        const Rational n = parse_rational(text.substr(5, text.size() - 6));
        if (n.get_den() != 1 || n <= 0)
            raise(ErrorKind::ParseError, "sqrt() takes a positive integer");
        const long k = n.get_num().get_si();
        long r = 0;
        while ((r + 1) * (r + 1) <= k)
            ++r;
        if (r * r == k)
            return TrapezoidParameter::rational(Rational(r));
        return TrapezoidParameter::sqrt_of(k);
    }
    return TrapezoidParameter::rational(parse_rational(text));
}

inline Json element_fragment(const FieldElement& x, const Field& f) { return element_to_json(x, f); }

/// Named corpus entries written by `quasitoric examples`.
inline std::vector<std::string> example_names()
{
    return {"interval",      "interval-sqrt2", "interval-orbifold", "square",        "pentagon",
            "kite",          "thick-rhombus",  "thin-rhombus",      "hirzebruch-1",  "hirzebruch-2",
            "hirzebruch-3",  "hirzebruch-1_2", "hirzebruch-sqrt2",  "twisted-prism"};
}

inline Document interval_example(const std::string& name, const Quasilattice& q, const FieldElement& left)
{
    const HalfspaceRep h = unit_interval(left, FieldElement(-1));
    return document_of(name, FundamentalTriple{h, q, {{left}, {FieldElement(-1)}}});
}

inline Document hirzebruch_example(const TrapezoidParameter& a, const std::string& name)
{
    Document d = document_of(name, hirzebruch_triple(a.a));
    d.field = a.field;
    d.configuration = hirzebruch_configuration(a.a);
    d.triangulation = hirzebruch_triangulation();
    d.note = "trapezoid with a = " + a.label + "; the configuration is V_a with the ghost (0,-a)";
    Json charts = Json::object();
    charts["quasilattice"] = {{"is_lattice", !a.field}};
    d.expected["charts"] = charts;
    d.expected["validate-config"] = {{"balanced", true}, {"odd", true}, {"p", 5}, {"n", 2}};
    d.expected["analyze"] = {{"simple", true}, {"simple_iff_simplicial", true}};
    return d;
}

/// Builds a named entry; `a` applies to "hirzebruch".
inline Document example(const std::string& name, const std::string& a = "1")
{
    const Field& pf = pentagon_field();
    if (name == "interval") {
        Document d = interval_example(name, z_lattice(1), FieldElement(1));
        d.expected["charts"] = Json{{"charts", Json::array({{{"class", "trivial"}}, {{"class", "trivial"}}})}};
        return d;
    }
    if (name == "interval-sqrt2") {
        const auto p = TrapezoidParameter::sqrt_of(2);
        const Quasilattice q = ql_span({{FieldElement::from_rational(p.field, 1)}, {p.a}}, 1);
        Document d = interval_example(name, q, FieldElement(1));
        d.note = "Q = Z + sqrt(2) Z is dense in R";
        d.expected["charts"] = Json{{"quasilattice", {{"is_lattice", false}}},
                                    {"charts", Json::array({{{"class", "infinite"}}, {{"class", "infinite"}}})}};
        return d;
    }
    if (name == "interval-orbifold") {
        Document d = interval_example(name, z_lattice(1), FieldElement(2));
        d.note = "normal 2 at the left end: an orbifold point of order 2";
        d.expected["charts"] = Json{{"charts", Json::array({{{"class", "finite"}, {"order", "2"}},
                                                            {{"class", "trivial"}, {"order", "1"}}})}};
        return d;
    }
    if (name == "square") {
        Document d = document_of(name, square_triple());
        d.expected["analyze"] = {{"faces", {{"by_dimension", {4, 4, 1}}, {"total", 9}}}, {"simple", true}};
        return d;
    }
    if (name == "pentagon") {
        const HalfspaceRep h = pentagon();
        std::vector<Vector> normals;
        for (const auto& f : h.facets)
            normals.push_back(f.normal);
        Document d = document_of(name, {h, q5(), normals});
        d.field = pf;
        d.note = "regular pentagon with normals -Y_0..-Y_4, Y_k the fifth roots of unity";
        d.expected["quasirational"] = {{"quasirational", true}, {"quasilattice", {{"flattened_rank", 4}, {"is_lattice", false}}}};
        d.expected["analyze"] = {{"simple", true},
                                 {"simple_iff_simplicial", true},
                                 {"normal_fan", {{"predicates", {{"valid", true}, {"simplicial", true}, {"complete", true}}}}}};
        return d;
    }
    if (name == "kite") {
        Document d = document_of(name, {kite(), q5(), kite_normals()});
        d.field = pf;
        d.configuration = kite_configuration();
        d.triangulation = quadrilateral_triangulation();
        d.note = "configuration as printed: its exact sum is (1, 2 sin(4pi/5) - 2 sin(2pi/5)), not zero";
        d.expected["validate-config"] = {
            {"balanced", false},
            {"sum", {element_fragment(FieldElement(1), pf), element_fragment(FieldElement(pf, {0, -4, 0, 1}), pf)}}};
        d.expected["check-triple"] = {{"valid", true}};
        return d;
    }
    if (name == "thick-rhombus") {
        Document d = document_of(name, {thick_rhombus(), q5(), thick_rhombus_normals()});
        d.field = pf;
        d.configuration = thick_rhombus_configuration();
        d.triangulation = quadrilateral_triangulation();
        d.note = "configuration (Y_0, Y_4, -Y_0, -Y_4, Y_1, Y_2, Y_3 + Y_4 + Y_0) with ghosts 5, 6, 7";
        d.expected["validate-config"] = {{"balanced", true}, {"odd", true}, {"p", 7}, {"n", 2}};
        d.expected["check-triple"] = {{"valid", true}};
        return d;
    }
    if (name == "thin-rhombus") {
        Document d = document_of(name, {thin_rhombus(), q5(), thin_rhombus_normals()});
        d.field = pf;
        d.note = "triple only; run augment for a configuration";
        d.expected["check-triple"] = {{"valid", true}};
        return d;
    }
    if (name == "hirzebruch")
        return hirzebruch_example(parse_parameter(a), name);
    if (name.rfind("hirzebruch-", 0) == 0) {
        std::string tag = name.substr(11);
        std::replace(tag.begin(), tag.end(), '_', '/');
        if (tag == "sqrt2")
            tag = "sqrt(2)";
        return hirzebruch_example(parse_parameter(tag), name);
    }
    if (name == "twisted-prism") {
        Document d;
        d.name = name;
        d.n = 3;
        d.fan = twisted_prism_fan();
        d.note = "complete simplicial fan over a twisted triangular prism; not the normal fan of any polytope";
        d.expected["analyze"] = {{"fan",
                                  {{"predicates", {{"valid", true}, {"simplicial", true}, {"complete", true}}},
                                   {"polytopal", {{"polytopal", false}}}}}};
        return d;
    }
    raise(ErrorKind::InvalidArgument, "unknown example '" + name + "'");
}

} // namespace quasitoric::corpus
