#include "surfmeasure/json_io.hpp"

#include "surfmeasure/errors.hpp"

#include <fstream>
#include <sstream>

namespace surfmeasure::io {

namespace {

/// Runs a decoding step, turning library type errors into ParseError.
template <typename F>
auto decoding(std::string_view what, F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed " + std::string(what) + ": " + e.what());
    }
}

const Json& require(const Json& j, const char* key, std::string_view what)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + " lacks field \"" + key + "\"");
    }
    return j.at(key);
}

Rational rational_from(const Json& j)
{
    if (!j.is_string()) {
        throw ParseError("rationals must be strings \"p/q\", got " + j.dump());
    }
    return parse_rational(j.get<std::string>());
}

Json rational_to(const Rational& r)
{
    return format_rational(r);
}

std::shared_ptr<const Scene> scene_ref(const Json& j, const std::filesystem::path& base_dir)
{
    const Json& ref = require(j, "sceneRef", "document");
    if (ref.is_string()) {
        return scene_from_json(load_file(base_dir / ref.get<std::string>()));
    }
    return scene_from_json(ref);
}

std::vector<std::string> strings_from(const Json& j, std::string_view what)
{
    return decoding(what, [&] { return j.get<std::vector<std::string>>(); });
}

} // namespace

Json parse_text(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Json load_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json to_json(const PantsGraph& graph)
{
    Json vertices = Json::array();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        vertices.push_back(v);
    }
    Json edges = Json::array();
    for (const auto& e : graph.edges()) {
        edges.push_back({{"id", e.id}, {"ends", {e.first, e.second}}});
    }
    return {{"genus", graph.genus()}, {"vertices", vertices}, {"edges", edges}};
}

PantsGraph graph_from_json(const Json& j)
{
    return decoding("graph", [&] {
        const int genus = require(j, "genus", "graph").get<int>();
        if (genus < 2) {
            throw DomainError("genus at least two is required, got " + std::to_string(genus));
        }
        if (j.contains("vertices")) {
            const auto vs = j.at("vertices").get<std::vector<int>>();
            if (static_cast<int>(vs.size()) != 2 * genus - 2) {
                throw ValidationError("expected " + std::to_string(2 * genus - 2) + " vertices, got "
                                      + std::to_string(vs.size()));
            }
            for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
                if (vs[i] != i) {
                    throw ValidationError("vertices must be listed as 0.." + std::to_string(2 * genus - 3));
                }
            }
        }
        std::vector<PantsEdge> edges;
        for (const auto& e : require(j, "edges", "graph")) {
            const auto ends = require(e, "ends", "edge").get<std::vector<int>>();
            if (ends.size() != 2) {
                throw ValidationError("edge ends must list two vertices");
            }
            edges.push_back({require(e, "id", "edge").get<std::string>(), ends[0], ends[1]});
        }
        return PantsGraph(genus, std::move(edges));
    });
}

Json to_json(const Scene& scene)
{
    const auto& g = scene.graph();
    Json stacks = Json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!scene.stacks()[e].empty()) {
            stacks[g.edge(e).id] = scene.stacks()[e];
        }
    }
    Json disks = Json::array();
    for (const auto& d : scene.disks()) {
        Json anchor = std::visit(
            [&](const auto& a) -> Json {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, PantsAnchor>) {
                    return {{"pants", a.vertex}};
                } else if constexpr (std::is_same_v<T, GapAnchor>) {
                    return {{"gap", {{"edge", g.edge(a.edge).id}, {"index", a.gap}}}};
                } else {
                    return {{"disk", scene.disks()[a.parent].id}};
                }
            },
            d.anchor);
        disks.push_back({{"id", d.id}, {"anchor", anchor}});
    }
    return {{"graph", to_json(g)}, {"scene", {{"stacks", stacks}, {"disks", disks}}}};
}

ScenePtr scene_from_json(const Json& j)
{
    auto graph = std::make_shared<const PantsGraph>(graph_from_json(require(j, "graph", "scene document")));
    const Json& s = require(j, "scene", "scene document");
    return decoding("scene", [&] {
        std::vector<std::vector<std::string>> stacks(graph->edge_count());
        if (s.contains("stacks")) {
            for (const auto& [edge, curves] : s.at("stacks").items()) {
                stacks[graph->edge_index(edge)] = strings_from(curves, "stack");
            }
        }
        std::vector<DiskNode> disks;
        std::vector<std::string> parents; // resolved once every id is known
        if (s.contains("disks")) {
            for (const auto& d : s.at("disks")) {
                DiskNode node;
                node.id = require(d, "id", "disk").get<std::string>();
                const Json& a = require(d, "anchor", "disk");
                std::string parent;
                if (a.contains("pants")) {
                    node.anchor = PantsAnchor{a.at("pants").get<int>()};
                } else if (a.contains("gap")) {
                    const Json& gap = a.at("gap");
                    node.anchor = GapAnchor{graph->edge_index(require(gap, "edge", "gap anchor").get<std::string>()),
                                            require(gap, "index", "gap anchor").get<int>()};
                } else if (a.contains("disk")) {
                    parent = a.at("disk").get<std::string>();
                } else {
                    throw ParseError("disk " + node.id + " has an anchor of unknown kind");
                }
                disks.push_back(std::move(node));
                parents.push_back(std::move(parent));
            }
        }
        for (std::size_t i = 0; i < disks.size(); ++i) {
            if (parents[i].empty()) {
                continue;
            }
            std::size_t p = 0;
            while (p < disks.size() && disks[p].id != parents[i]) {
                ++p;
            }
            if (p == disks.size()) {
                throw ValidationError("disk " + disks[i].id + " nested in unknown disk " + parents[i]);
            }
            disks[i].anchor = DiskAnchor{p};
        }
        return make_scene(graph, std::move(stacks), std::move(disks));
    });
}

ScenePtr scene_or_graph_from_json(const Json& j)
{
    if (j.is_object() && j.contains("scene")) {
        return scene_from_json(j);
    }
    return std::make_shared<const Scene>(std::make_shared<const PantsGraph>(graph_from_json(j)));
}

Json to_json(const Submanifold& w)
{
    return {{"sceneRef", to_json(w.scene())}, {"in", w.in_region_ids()}};
}

Submanifold submanifold_from_json(const Json& j, const std::filesystem::path& base_dir)
{
    auto scene = scene_ref(j, base_dir);
    const auto ids = strings_from(require(j, "in", "submanifold"), "submanifold");
    return Submanifold::from_region_ids(std::move(scene), ids);
}

Json to_json(const NormalClass& cls)
{
    return {{"members", cls.members()}};
}

Json to_json(const MeasureWeights& weights, const PantsGraph& graph)
{
    Json a = Json::object();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        a[std::to_string(v)] = rational_to(weights.pants.at(v));
    }
    Json b = Json::object();
    Json w = Json::object();
    Json c = Json::object();
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto& id = graph.edge(e).id;
        b[id] = rational_to(weights.curve.at(e));
        w[id] = rational_to(weights.weight.at(e));
        c[id] = weights.coorientation.at(e) == Coorientation::TowardFirst ? "first" : "second";
    }
    return {{"a", a}, {"b", b}, {"w", w}, {"c", c}};
}

MeasureWeights weights_from_json(const Json& j, const PantsGraph& graph)
{
    if (!j.is_object()) {
        throw ParseError("weights must be an object");
    }
    MeasureWeights out = MeasureWeights::zero(graph);
    return decoding("weights", [&] {
        if (j.contains("a")) {
            for (const auto& [key, value] : j.at("a").items()) {
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(key, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != key.size() || v < 0 || v >= graph.vertex_count()) {
                    throw ValidationError("weights reference unknown vertex " + key);
                }
                out.pants[v] = rational_from(value);
            }
        }
        if (j.contains("b")) {
            for (const auto& [key, value] : j.at("b").items()) {
                out.curve[graph.edge_index(key)] = rational_from(value);
            }
        }
        if (j.contains("w")) {
            for (const auto& [key, value] : j.at("w").items()) {
                out.weight[graph.edge_index(key)] = rational_from(value);
            }
        }
        if (j.contains("c")) {
            for (const auto& [key, value] : j.at("c").items()) {
                const auto s = value.get<std::string>();
                if (s != "first" && s != "second") {
                    throw ValidationError("coorientation must be \"first\" or \"second\", got \"" + s + "\"");
                }
                out.coorientation[graph.edge_index(key)] =
                    s == "first" ? Coorientation::TowardFirst : Coorientation::TowardSecond;
            }
        }
        return out;
    });
}

Json to_json(const AdditiveFunction& nu)
{
    switch (nu.kind()) {
    case AdditiveFunction::Kind::Complexity:
        return {{"kind", "complexity"}};
    case AdditiveFunction::Kind::Weighted:
        return {{"kind", "weighted"}, {"weights", to_json(nu.weights(), nu.graph())}};
    case AdditiveFunction::Kind::Table:
        break;
    }
    Json entries = Json::array();
    for (const auto& [mask, value] : nu.values()) {
        entries.push_back({{"members", NormalClass(nu.graph_ptr(), mask).members()}, {"value", rational_to(value)}});
    }
    return {{"kind", "table"}, {"entries", entries}};
}

AdditiveFunction additive_function_from_json(const Json& j, std::shared_ptr<const PantsGraph> graph)
{
    if (j.is_string() && j.get<std::string>() == "complexity") {
        return AdditiveFunction::complexity(std::move(graph));
    }
    if (!j.is_object()) {
        throw ParseError("additive function must be \"complexity\" or an object");
    }
    if (!j.contains("kind")) {
        return af_from_weights(graph, weights_from_json(j, *graph));
    }
    const auto kind = decoding("additive function", [&] { return j.at("kind").get<std::string>(); });
    if (kind == "complexity") {
        return AdditiveFunction::complexity(std::move(graph));
    }
    if (kind == "weighted") {
        return af_from_weights(graph, weights_from_json(require(j, "weights", "weighted function"), *graph));
    }
    if (kind == "table") {
        AdditiveFunction::Table table;
        decoding("table", [&] {
            for (const auto& entry : require(j, "entries", "table")) {
                const NormalClass cls(graph, require(entry, "members", "table entry").get<std::vector<int>>());
                if (!table.emplace(cls.mask(), rational_from(require(entry, "value", "table entry"))).second) {
                    throw ValidationError("duplicate table entry");
                }
            }
            return 0;
        });
        return AdditiveFunction::table(std::move(graph), std::move(table));
    }
    throw ParseError("unknown additive function kind \"" + kind + "\"");
}

Json to_json(const Filtration& f)
{
    Json steps = Json::array();
    for (const auto& s : f.steps()) {
        steps.push_back({{"t", rational_to(s.t)}, {"in", s.level.in_region_ids()}});
    }
    return {{"sceneRef", to_json(*f.scene_ptr())},
            {"tMin", rational_to(f.t_min())},
            {"tMax", rational_to(f.t_max())},
            {"steps", steps}};
}

Filtration filtration_from_json(const Json& j, const std::filesystem::path& base_dir)
{
    auto scene = scene_ref(j, base_dir);
    const Rational t_min = rational_from(require(j, "tMin", "filtration"));
    const Rational t_max = rational_from(require(j, "tMax", "filtration"));
    std::vector<FiltrationStep> steps;
    for (const auto& s : require(j, "steps", "filtration")) {
        const auto ids = strings_from(require(s, "in", "filtration step"), "filtration step");
        steps.push_back({rational_from(require(s, "t", "filtration step")), Submanifold::from_region_ids(scene, ids)});
    }
    return Filtration(scene, t_min, t_max, std::move(steps));
}

Json to_json(const Counterexample& ce)
{
    Json j = {{"clause", ce.clause}, {"subject", ce.subject}, {"first", ce.first}};
    if (!ce.second.empty()) {
        j["second"] = ce.second;
    }
    j["detail"] = ce.detail;
    return j;
}

Json to_json(const NormalizationAudit& report)
{
    Json j = {{"status", report.passed ? "pass" : "fail"},
              {"checkedCount", report.checked},
              {"enumerated", report.enumerated}};
    if (report.counterexample) {
        j["counterexample"] = to_json(*report.counterexample);
    }
    return j;
}

Json to_json(const TauAudit& report)
{
    Json j = {{"status", report.passed ? "pass" : "fail"},
              {"axioms",
               {{"normalized", report.axioms.normalized},
                {"monotone", report.axioms.monotone},
                {"additive", report.axioms.additive},
                {"regular", report.axioms.regular}}},
              {"checkedCount", report.checked},
              {"enumerated", report.enumerated}};
    if (report.counterexample) {
        j["counterexample"] = to_json(*report.counterexample);
    }
    return j;
}

Json to_json(const AfValidation& report)
{
    Json j = {{"status", report.passed ? "pass" : "fail"}, {"checkedCount", report.checked}};
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        j["counterexample"] = {{"clause", ce.clause}, {"first", ce.first}, {"second", ce.second}, {"detail", ce.detail}};
    }
    return j;
}

Json to_json(const AffinityReport& report)
{
    Json j = {{"status", report.passed ? "pass" : "fail"}, {"checkedCount", report.checked}};
    if (report.counterexample) {
        j["counterexample"] = to_json(*report.counterexample);
    }
    return j;
}

} // namespace surfmeasure::io
