// Command-line front end. Prints one JSON document on stdout.
// Exit status: 0 success or passing audit, 1 failing audit, 2 bad input.

#include "surfmeasure/enumeration.hpp"
#include "surfmeasure/errors.hpp"
#include "surfmeasure/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace fs = std::filesystem;
using namespace surfmeasure;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kAuditFailure = 1;
constexpr int kInputError = 2;

struct Options {
    int genus = 2;
    std::string file;
    std::string second_file;
    std::string nu = "complexity";
    std::uint64_t budget = AuditOptions{}.max_selections;
    std::uint64_t seed = 0;
    bool json = true;
};

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string error_kind(const Error& e)
{
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const SceneMismatch*>(&e)) return "SceneMismatch";
    if (dynamic_cast<const GraphMismatch*>(&e)) return "GraphMismatch";
    if (dynamic_cast<const DisjointnessViolation*>(&e)) return "DisjointnessViolation";
    if (dynamic_cast<const InconsistentCoorientation*>(&e)) return "InconsistentCoorientation";
    if (dynamic_cast<const AmbiguousEmptyBoundary*>(&e)) return "AmbiguousEmptyBoundary";
    if (dynamic_cast<const AlternationViolation*>(&e)) return "AlternationViolation";
    if (dynamic_cast<const NotDiskFree*>(&e)) return "NotDiskFree";
    if (dynamic_cast<const EnumerationBudgetExceeded*>(&e)) return "EnumerationBudgetExceeded";
    if (dynamic_cast<const MissingEntry*>(&e)) return "MissingEntry";
    if (dynamic_cast<const NormalizationError*>(&e)) return "NormalizationError";
    if (dynamic_cast<const RangeError*>(&e)) return "RangeError";
    if (dynamic_cast<const NestingViolation*>(&e)) return "NestingViolation";
    return "ValidationError";
}

AdditiveFunction load_nu(const std::string& source, std::shared_ptr<const PantsGraph> graph)
{
    if (source == "complexity") {
        return AdditiveFunction::complexity(std::move(graph));
    }
    return io::additive_function_from_json(io::load_file(source), std::move(graph));
}

fs::path dir_of(const std::string& file)
{
    return fs::path(file).parent_path();
}

int cmd_graph_new(const Options& o)
{
    emit(io::to_json(PantsGraph::canonical(o.genus)));
    return kPass;
}

int cmd_scene_validate(const Options& o)
{
    const auto scene = io::scene_or_graph_from_json(io::load_file(o.file));
    Json regions = Json::array();
    for (const auto& r : scene->regions()) {
        const char* kind = r.kind == RegionKind::Surface ? "surface" : r.kind == RegionKind::Gap ? "gap" : "disk";
        regions.push_back({{"id", r.id}, {"kind", kind}, {"euler", r.euler}});
    }
    Json curves = Json::array();
    for (const auto& c : scene->curves()) {
        curves.push_back({{"id", c.id},
                          {"first", scene->regions()[c.region(CurveSide::First)].id},
                          {"second", scene->regions()[c.region(CurveSide::Second)].id}});
    }
    emit({{"status", "valid"}, {"genus", scene->graph().genus()}, {"regions", regions}, {"curves", curves}});
    return kPass;
}

int cmd_normalize(const Options& o)
{
    const auto w = io::submanifold_from_json(io::load_file(o.file), dir_of(o.file));
    emit({{"class", io::to_json(normalize(w))}});
    return kPass;
}

int cmd_eval(const Options& o)
{
    const auto w = io::submanifold_from_json(io::load_file(o.second_file), dir_of(o.second_file));
    const TopologicalMeasure m(load_nu(o.file, w.scene().graph_ptr()));
    const Rational value = tau(m, w);
    emit({{"tau", format_rational(value)}, {"decimal", format_decimal(value)}, {"class", io::to_json(normalize(w))}});
    return kPass;
}

int cmd_audit(const Options& o, bool nu_given)
{
    const auto scene = io::scene_or_graph_from_json(io::load_file(o.file));
    AuditOptions options;
    options.max_selections = o.budget;
    const auto normalization = audit_normalization(scene, options);
    Json out;
    bool passed = normalization.passed;
    if (nu_given) {
        const TopologicalMeasure m(load_nu(o.nu, scene->graph_ptr()));
        const auto report = audit_tau(m, scene, options);
        out = io::to_json(report);
        passed = passed && report.passed;
        out["status"] = passed ? "pass" : "fail";
    } else {
        out = {{"status", passed ? "pass" : "fail"}};
    }
    out["normalization"] = io::to_json(normalization);
    emit(out);
    return passed ? kPass : kAuditFailure;
}

int cmd_zeta(const Options& o)
{
    const auto f = io::filtration_from_json(io::load_file(o.file), dir_of(o.file));
    const auto nu = load_nu(o.nu, f.scene_ptr()->graph_ptr());
    const Rational z = zeta(f, nu);
    Json breakpoints = Json::array();
    for (const auto& b : b_function(f, nu)) {
        breakpoints.push_back({{"t", format_rational(b.t)}, {"value", format_rational(b.value)}});
    }
    const auto essential = essential_values(f);
    Json values = Json::array();
    for (const auto& v : essential.values) {
        values.push_back(format_rational(v));
    }
    emit({{"zeta", format_rational(z)},
          {"decimal", format_decimal(z)},
          {"breakpoints", breakpoints},
          {"essentialValues", values},
          {"morseGeneric", essential.morse_generic},
          {"warnings", f.warnings()}});
    return kPass;
}

int cmd_enumerate(const Options& o)
{
    const auto scene = io::scene_or_graph_from_json(io::load_file(o.file));
    const SceneEnumeration en(scene, o.budget);
    Json items = Json::array();
    for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
        items.push_back({{"in", en.region_ids(m)}, {"class", io::to_json(en.phi(m))}, {"normal", en.normal(m)}});
    }
    emit({{"count", en.size()}, {"submanifolds", items}});
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"surfmeasure: normal classes and topological measures on closed surfaces"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--budget", o.budget, "enumeration cap (number of selections)");
    app.add_option("--seed", o.seed, "cross-check ordering seed; results do not depend on it");
    app.add_flag("--json", o.json, "JSON output (the only format)");

    auto* graph_new = app.add_subcommand("graph-new", "emit the canonical pants graph of a genus");
    graph_new->add_option("--genus,genus", o.genus)->required();

    auto* scene_validate = app.add_subcommand("scene-validate", "validate a graph or scene and list its regions");
    scene_validate->add_option("file", o.file)->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "normal class of a submanifold");
    normalize_cmd->add_option("file", o.file)->required();

    auto* eval = app.add_subcommand("eval", "evaluate tau on a submanifold");
    eval->add_option("measure", o.file, "additive function file or \"complexity\"")->required();
    eval->add_option("submanifold", o.second_file)->required();

    auto* audit = app.add_subcommand("audit", "exhaustive normalization and measure audit");
    audit->add_option("file", o.file, "graph or scene file")->required();
    auto* nu_opt = audit->add_option("--nu", o.nu, "additive function file or \"complexity\"");

    auto* zeta_cmd = app.add_subcommand("zeta", "quasi-state value of a filtration");
    zeta_cmd->add_option("file", o.file)->required();
    zeta_cmd->add_option("--nu", o.nu, "additive function file or \"complexity\"");

    auto* enumerate = app.add_subcommand("enumerate", "list every submanifold of a scene with its class");
    enumerate->add_option("file", o.file)->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*graph_new) return cmd_graph_new(o);
        if (*scene_validate) return cmd_scene_validate(o);
        if (*normalize_cmd) return cmd_normalize(o);
        if (*eval) return cmd_eval(o);
        if (*audit) return cmd_audit(o, nu_opt->count() > 0);
        if (*zeta_cmd) return cmd_zeta(o);
        if (*enumerate) return cmd_enumerate(o);
    } catch (const Error& e) {
        emit({{"status", "error"}, {"error", {{"kind", error_kind(e)}, {"message", e.what()}}}});
        return kInputError;
    } catch (const std::exception& e) {
        emit({{"status", "error"}, {"error", {{"kind", "Error"}, {"message", e.what()}}}});
        return kInputError;
    }
    return kInputError;
}
