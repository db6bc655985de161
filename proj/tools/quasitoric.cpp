// Command-line front end: reads JSON documents, prints JSON reports.
//
// Exit status: 0 on success, 1 when a computation rejects its input,
// 2 for unreadable documents and usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quasitoric/examples.hpp"
#include "quasitoric/report.hpp"
#include "quasitoric/svg.hpp"

namespace fs = std::filesystem;
using namespace quasitoric;

namespace {

std::string corpus_dir()
{
    const char* env = std::getenv("QUASITORIC_CORPUS");
    return env ? std::string(env) : std::string();
}

/// A path as given, or else relative to $QUASITORIC_CORPUS (with or without
/// the .json suffix).
std::string resolve(const std::string& path)
{
    if (fs::exists(path))
        return path;
    const std::string dir = corpus_dir();
    if (!dir.empty()) {
        for (const auto& candidate : {fs::path(dir) / path, fs::path(dir) / (path + ".json")})
            if (fs::exists(candidate))
                return candidate.string();
    }
    raise(ErrorKind::ParseError, "no such document: " + path);
}

Document load(const std::string& path) { return load_document(resolve(path)); }

void emit(const Json& j) { std::cout << dump_pretty(j); }

int exit_code(ErrorKind k) { return (k == ErrorKind::ParseError || k == ErrorKind::FieldMismatch) ? 2 : 1; }

Json analyze_all(const std::string& dir, int& status)
{
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    Json entries = Json::array();
    for (const auto& f : files) {
        try {
            entries.push_back(report::analyze(load_document(f.string())));
        } catch (const Error& e) {
            status = std::max(status, exit_code(e.kind()));
            entries.push_back({{"file", f.filename().string()}, {"error", e.what()}});
        }
    }
    return {{"entries", entries}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact toolkit for nonrational polytopes, fans, quasilattices and vector configurations"};
    app.require_subcommand(1);

    std::string file, ql_file, out_file, target, all_dir, name, a = "1", dir;
    bool no_labels = false;

    auto* analyze = app.add_subcommand("analyze", "vertices, faces, simplicity, normal fan and its predicates");
    analyze->add_option("file", file, "polytope or fan document");
    analyze->add_option("--all", all_dir, "analyze every .json document in a directory");

    auto* check = app.add_subcommand("check-triple", "validate a fundamental triple");
    check->add_option("file", file)->required();

    auto* quasi = app.add_subcommand("quasirational", "ray generators of the body inside a quasilattice");
    quasi->add_option("file", file)->required();
    quasi->add_option("--ql", ql_file, "document holding the quasilattice (default: the same file)");

    auto* charts = app.add_subcommand("charts", "chart structure groups at the vertices");
    charts->add_option("file", file)->required();

    auto* aug = app.add_subcommand("augment", "configuration and triangulation from a triple");
    aug->add_option("file", file)->required();

    auto* gale = app.add_subcommand("gale", "Gale dual and virtual chamber of a configuration");
    gale->add_option("file", file)->required();

    auto* validate = app.add_subcommand("validate-config", "axioms, balance, parity and spanning of a configuration");
    validate->add_option("file", file)->required();

    auto* polytopal = app.add_subcommand("polytopal", "is a complete simplicial fan a normal fan");
    polytopal->add_option("file", file)->required();

    auto* render = app.add_subcommand("render", "SVG drawing of a planar document");
    render->add_option("file", file)->required();
    render->add_option("--out", out_file, "output path")->required();
    render->add_option("--target", target, "polytope, fan or configuration")
        ->check(CLI::IsMember({"polytope", "fan", "configuration"}));
    render->add_flag("--no-labels", no_labels);

    auto* examples = app.add_subcommand("examples", "write a corpus entry (or 'all') as JSON");
    examples->add_option("name", name)->required();
    examples->add_option("--a", a, "trapezoid parameter for 'hirzebruch': p/q or sqrt(N)");
    examples->add_option("--dir", dir, "output directory (default: $QUASITORIC_CORPUS or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            if (all_dir.empty() && file.empty())
                raise(ErrorKind::ParseError, "analyze needs a file or --all <dir>");
            if (!all_dir.empty()) {
                int status = 0;
                emit(analyze_all(all_dir, status));
                return status;
            }
            emit(report::analyze(load(file)));
        } else if (check->parsed()) {
            emit(report::check_triple(load(file)));
        } else if (quasi->parsed()) {
            const Document d = load(file);
            emit(report::quasirational(d, ql_file.empty() ? d : load(ql_file)));
        } else if (charts->parsed()) {
            emit(report::charts(load(file)));
        } else if (aug->parsed()) {
            emit(report::augment(load(file)));
        } else if (gale->parsed()) {
            emit(report::gale(load(file)));
        } else if (validate->parsed()) {
            emit(report::validate_config(load(file)));
        } else if (polytopal->parsed()) {
            emit(report::polytopal_report(load(file)));
        } else if (render->parsed()) {
            RenderSpec spec;
            spec.labels = !no_labels;
            if (target == "polytope")
                spec.target = RenderSpec::Target::Polytope;
            else if (target == "fan")
                spec.target = RenderSpec::Target::Fan;
            else if (target == "configuration")
                spec.target = RenderSpec::Target::Configuration;
            const std::string svg = render_svg(load(file), spec);
            std::ofstream out(out_file);
            if (!out)
                raise(ErrorKind::ParseError, "cannot write " + out_file);
            out << svg;
            emit({{"out", out_file}, {"bytes", svg.size()}});
        } else if (examples->parsed()) {
            if (dir.empty())
                dir = corpus_dir().empty() ? "." : corpus_dir();
            fs::create_directories(dir);
            std::vector<std::string> names = name == "all" ? corpus::example_names() : std::vector<std::string>{name};
            Json written = Json::array();
            for (const auto& n : names) {
                const fs::path path = fs::path(dir) / (n + ".json");
                std::ofstream out(path);
                if (!out)
                    raise(ErrorKind::ParseError, "cannot write " + path.string());
                out << serialize_document(corpus::example(n, a));
                written.push_back(path.string());
            }
            emit({{"written", written}});
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
