// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "quasitoric/examples.hpp"
#include "quasitoric/report.hpp"

using namespace quasitoric;
namespace qc = quasitoric::corpus;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = QUASITORIC_SOURCE_DIR;

/// Collects failed checks with a short reason each.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

Document corpus_entry(const std::string& name) { return load_document((kSource / "corpus" / (name + ".json")).string()); }

std::vector<Document> all_entries()
{
    std::vector<Document> out;
    for (const auto& name : qc::example_names())
        out.push_back(corpus_entry(name));
    return out;
}

Vector v2(const FieldElement& x, const FieldElement& y) { return {x, y}; }

const std::vector<std::string> kParameters{"1", "2", "3", "1/2", "sqrt(2)"};

void criterion1(Check& c)
{
    const Json r = report::validate_config(corpus_entry("thick-rhombus"));
    c.expect(r["balanced"] == true, "balanced");
    c.expect(r["odd"] == true, "odd");
    c.expect(r["p"] == 7 && r["n"] == 2, "p = 7, n = 2");
    for (const auto& x : r["sum"])
        for (const auto& coeff : x)
            c.expect(coeff == "0", "exact zero sum");
}

void criterion2(Check& c)
{
    const FundamentalTriple t3 = document_triple(corpus_entry("hirzebruch-3"));
    c.expect(t3.quasilattice.is_lattice(), "Q_3 is a lattice");
    for (const auto& g : chart_groups(t3))
        c.expect(g.classification == ChartClass::Trivial && g.order == Integer(1), "a = 3 chart trivial");

    const FundamentalTriple ts = document_triple(corpus_entry("hirzebruch-sqrt2"));
    c.expect(!ts.quasilattice.is_lattice(), "Q_sqrt2 is not a lattice");
    bool seen = false;
    for (const auto& g : chart_groups(ts))
        if (g.point && (*g.point)[0].is_zero() && (*g.point)[1].is_zero()) {
            seen = true;
            c.expect(g.classification == ChartClass::Infinite, "chart at (0,0) infinite");
        }
    c.expect(seen, "vertex (0,0) present");
}

void criterion3(Check& c)
{
    for (const auto& text : kParameters) {
        const auto a = qc::parse_parameter(text).a;
        const HalfspaceRep h = qc::trapezoid(a);
        const VertexRep v = vertices_from_halfspaces(h);
        const std::vector<Vector> want{v2(0, 0), v2(1, 0), v2(0, 1), v2(a + FieldElement(1), 1)};
        c.expect(v.vertices.size() == 4, "four vertices for a = " + text);
        for (const auto& w : want)
            c.expect(std::find(v.vertices.begin(), v.vertices.end(), w) != v.vertices.end(),
                     "vertex present for a = " + text);
        const Fan f = normal_fan(h);
        c.expect(f.maximal_cones().size() == 4, "four maximal cones for a = " + text);
        const std::vector<Vector> dirs{v2(1, 0), v2(0, 1), v2(0, -1), v2(-1, a)};
        c.expect(f.rays.size() == 4, "four rays for a = " + text);
        for (const auto& d : dirs) {
            bool found = false;
            for (const auto& r : f.rays)
                found = found || positively_proportional(r, d);
            c.expect(found, "ray direction present for a = " + text);
        }
    }
}

void criterion4(Check& c)
{
    for (const auto& text : kParameters) {
        const auto a = qc::parse_parameter(text).a;
        const FundamentalTriple t = qc::hirzebruch_triple(a);
        const AugmentedTriple aug = augment(t);
        const std::vector<Vector> want{v2(1, 0), v2(0, 1), v2(0, -1), v2(-1, a), v2(0, -a)};
        c.expect(aug.configuration.vectors == want, "V_a reproduced in order for a = " + text);
        const FundamentalTriple back = decode(aug.configuration, aug.triangulation);
        c.expect(same_fan(back.fan(), normal_fan(t.polytope())), "decode returns the fan for a = " + text);
        c.expect(ql_equal(back.quasilattice, t.quasilattice), "decode returns Q_a for a = " + text);
    }
}

void criterion5(Check& c)
{
    const Document pentagon = corpus_entry("pentagon");
    const FundamentalTriple t = document_triple(pentagon);
    c.expect(is_quasirational(t.polytope(), qc::q5()), "pentagon quasirational in Q_5");
    c.expect(qc::q5().flattened_rank() == 4, "Q_5 flattened rank 4");
    c.expect(!qc::q5().is_lattice(), "Q_5 not a lattice");
    const Fan f = normal_fan(t.polytope());
    const FanPredicates p = fan_predicates(f);
    c.expect(f.rays.size() == 5, "five rays");
    c.expect(p.valid && p.simplicial && p.complete == true, "valid, complete, simplicial");
    for (const auto& d : all_entries())
        if (d.polytope) {
            const VertexRep v = vertices_from_halfspaces(*d.polytope);
            c.expect(is_simple(*d.polytope, v) == fan_predicates(normal_fan(*d.polytope)).simplicial,
                     "simple iff simplicial on " + d.name);
        }
}

/// Gale contract on one configuration.
void gale_contract(Check& c, const VectorConfiguration& v, const std::optional<Triangulation>& t,
                   const std::string& name)
{
    const GaleDual g = gale_dual(v, t);
    const std::size_t p = v.p(), n = v.n;
    c.expect(g.kernel_rows.size() == p - n && p - n == 2 * g.m + 1, "kernel dimension on " + name);
    for (const auto& row : g.kernel_rows)
        for (std::size_t i = 0; i < n; ++i) {
            FieldElement s(0);
            for (std::size_t j = 0; j < p; ++j)
                s = s + v.vectors[j][i] * row[j];
            c.expect(s.is_zero(), "V times kernel row is zero on " + name);
        }
    c.expect(rank_of(g.kernel_rows) == p - n, "kernel rows independent on " + name);
    // The rows are (all-ones, Re, Im): check them against the points.
    for (std::size_t j = 0; j < p; ++j) {
        c.expect(g.kernel_rows[0][j] == FieldElement(1), "all-ones row on " + name);
        for (std::size_t k = 0; k < g.m; ++k)
            c.expect(g.kernel_rows[1 + 2 * k][j] == g.points[j].first[k]
                         && g.kernel_rows[2 + 2 * k][j] == g.points[j].second[k],
                     "Re/Im rows on " + name);
    }
    for (const auto& s : g.virtual_chamber)
        c.expect(s.size() == p - n, "chamber member size on " + name);
}

void criterion6(Check& c, std::string& detail)
{
    std::size_t configurations = 0;
    for (const auto& d : all_entries()) {
        if (d.configuration) {
            const Json r = report::validate_config(d);
            if (r["balanced"] == true) {
                gale_contract(c, *d.configuration, d.triangulation, d.name);
                ++configurations;
            } else {
                // The printed kite configuration: no Gale dual exists.
                bool refused = false;
                try {
                    gale_dual(*d.configuration, d.triangulation);
                } catch (const Error& e) {
                    refused = e.kind() == ErrorKind::NotBalanced;
                }
                c.expect(refused, "unbalanced " + d.name + " refused");
            }
        }
        if (d.quasilattice && d.normals && d.n == 2) {
            const AugmentedTriple aug = augment(document_triple(d));
            gale_contract(c, aug.configuration, aug.triangulation, d.name + " (augmented)");
            ++configurations;
        }
    }
    detail = std::to_string(configurations) + " configurations";
}

void criterion7(Check& c)
{
    const Json r = report::validate_config(corpus_entry("kite"));
    c.expect(r["balanced"] == false, "kite reported unbalanced");
    const Field& f = qc::pentagon_field();
    const FieldElement sx = element_from_json(r["sum"][0], f, "sum"), sy = element_from_json(r["sum"][1], f, "sum");
    c.expect(sx == FieldElement(f, {1}), "x-sum exactly 1");
    c.expect(!sy.is_zero(), "y-sum nonzero");
    const double pi = std::acos(-1.0);
    c.expect(std::abs(sy.to_double() - (2 * std::sin(4 * pi / 5) - 2 * std::sin(2 * pi / 5))) < 1e-12,
             "y-sum is 2 sin(4pi/5) - 2 sin(2pi/5)");
    // Inputs are never normalized: the stored vectors are the printed ones.
    const Document d = corpus_entry("kite");
    c.expect(d.configuration->vectors == qc::kite_configuration().vectors, "kite vectors unchanged");
    const Json golden = Json::parse(std::ifstream(kSource / "tests" / "golden" / "kite.validate-config.json"));
    c.expect(golden["report"]["sum"] == r["sum"], "golden file records the exact sum");
    c.expect(golden.contains("note") && golden["note"].get<std::string>().find("open question") != std::string::npos,
             "golden file links the open question");
}

void criterion8(Check& c)
{
    const std::pair<const char*, const char*> suites[] = {
        {QUASITORIC_TEST_FIELD, "FieldProperties.AxiomsAndSignMultiplicativity"},
        {QUASITORIC_TEST_LINALG, "Hermite.AgreesWithBruteForceOn2x2:Hermite.ContractOnRandomRectangular:"
                                 "Smith.DeterminantalDivisorOracle:IntegerSolve.AgreesWithExhaustiveBoxSearch"},
        {QUASITORIC_TEST_POLYTOPE, "PolygonProperties.*:Polytopal.NormalFansRoundtrip"},
        {QUASITORIC_TEST_TRIPLE, "ChartGroupProperties.RandomDelzantParallelograms:ChartGroups.DelzantSquareIsTrivial"},
    };
    for (const auto& [binary, filter] : suites) {
        const std::string cmd = std::string(binary) + " --gtest_filter='" + filter + "' > /dev/null 2>&1";
        c.expect(std::system(cmd.c_str()) == 0, std::string(filter));
    }
}

void criterion9(Check& c)
{
    const FundamentalTriple t = document_triple(corpus_entry("interval-orbifold"));
    const auto groups = chart_groups(t);
    c.expect(!groups.empty() && groups[0].point && (*groups[0].point)[0].is_zero(), "first chart at vertex 0");
    c.expect(groups[0].classification == ChartClass::Finite && groups[0].order == Integer(2), "order exactly 2");
    // SNF oracle: Q = Z over the sublattice spanned by the normal 2.
    IntegerMatrix frame(1, 1);
    frame(0, 0) = 2;
    Integer index = 1;
    for (const auto& x : snf(frame).diagonal())
        index *= x;
    c.expect(index == 2, "SNF index 2");
    // Orbit oracle: multiples of the image 1/2 modulo 1.
    std::set<Rational> orbit;
    const Rational y = groups[0].images[0][0].rational_value();
    for (int k = 0; k < 12; ++k) {
        Rational r = k * y;
        r -= Rational(floor_of(r));
        orbit.insert(r);
    }
    c.expect(orbit.size() == 2, "orbit of the generator image has 2 points");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* summary;
        std::function<void(Check&, std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "thick rhombus configuration balanced and odd, p = 7, n = 2", [](Check& c, std::string&) { criterion1(c); }},
        {2, "Q_3 lattice with trivial charts; Q_sqrt2 dense with infinite chart at (0,0)",
         [](Check& c, std::string&) { criterion2(c); }},
        {3, "T_a vertices exact; normal fan with 4 cones and the expected rays", [](Check& c, std::string&) { criterion3(c); }},
        {4, "augment reproduces V_a in order; decode inverts it", [](Check& c, std::string&) { criterion4(c); }},
        {5, "pentagon quasirational in Q_5, rank 4, fan valid/complete/simplicial; simple iff simplicial",
         [](Check& c, std::string&) { criterion5(c); }},
        {6, "Gale rows annihilated by V, kernel dimension 2m + 1, chamber members of size p - n", criterion6},
        {7, "kite configuration reported with its exact nonzero sum", [](Check& c, std::string&) { criterion7(c); }},
        {8, "randomized property suites (fixed seed, 1000 cases each)", [](Check& c, std::string&) { criterion8(c); }},
        {9, "orbifold interval: chart group of order 2 at vertex 0", [](Check& c, std::string&) { criterion9(c); }},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        std::string detail;
        try {
            cr.run(c, detail);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.summary;
        if (!detail.empty())
            std::cout << " [" << detail << "]";
        std::cout << "\n";
        for (const auto& f : c.failures)
            std::cout << "    failed: " << f << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
