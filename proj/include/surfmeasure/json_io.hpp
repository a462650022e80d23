#pragma once

#include "surfmeasure/additive_function.hpp"
#include "surfmeasure/measure.hpp"
#include "surfmeasure/normalization.hpp"
#include "surfmeasure/quasistate.hpp"

#include <json.hpp>

#include <filesystem>
#include <string_view>

namespace surfmeasure::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError with the byte offset of malformed input.
Json parse_text(std::string_view text);
Json load_file(const std::filesystem::path& path);

Json to_json(const PantsGraph& graph);
PantsGraph graph_from_json(const Json& j);

/// {"graph": ..., "scene": {"stacks": {edge: [curve ids]}, "disks": [{id, anchor}]}}.
/// Anchors: {"pants": v} | {"gap": {"edge": id, "index": i}} | {"disk": parent id}.
Json to_json(const Scene& scene);
ScenePtr scene_from_json(const Json& j);
/// Accepts a scene document or a bare graph document (giving the empty scene).
ScenePtr scene_or_graph_from_json(const Json& j);

/// {"sceneRef": <scene document>, "in": [region ids]}.
Json to_json(const Submanifold& w);
/// `sceneRef` may also be a path, resolved against `base_dir`.
Submanifold submanifold_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"members": [vertices]}.
Json to_json(const NormalClass& cls);

/// {"a": {vertex: "p/q"}, "b": {edge: "p/q"}, "w": {edge: "p/q"}, "c": {edge: "first"|"second"}};
/// absent entries are 0 (masses, weights) or "first".
Json to_json(const MeasureWeights& weights, const PantsGraph& graph);
MeasureWeights weights_from_json(const Json& j, const PantsGraph& graph);

/// "complexity" | {"kind": "complexity"} | {"kind": "weighted", "weights": {...}} |
/// {"kind": "table", "entries": [{"members": [...], "value": "p/q"}]} | a bare weights object.
Json to_json(const AdditiveFunction& nu);
AdditiveFunction additive_function_from_json(const Json& j, std::shared_ptr<const PantsGraph> graph);

/// {"sceneRef": ..., "tMin": "p/q", "tMax": "p/q", "steps": [{"t": "p/q", "in": [region ids]}]}.
Json to_json(const Filtration& f);
Filtration filtration_from_json(const Json& j, const std::filesystem::path& base_dir = {});

Json to_json(const Counterexample& ce);
Json to_json(const NormalizationAudit& report);
Json to_json(const TauAudit& report);
Json to_json(const AfValidation& report);
Json to_json(const AffinityReport& report);

} // namespace surfmeasure::io
