#include "scenes.hpp"

#include "surfmeasure/errors.hpp"
#include "surfmeasure/json_io.hpp"

#include <doctest.h>

using namespace surfmeasure;
using fixtures::theta;
namespace io = surfmeasure::io;
using io::Json;

namespace {

const std::filesystem::path data_dir = SURFMEASURE_TEST_DATA;

} // namespace

TEST_CASE("theta graph document")
{
    const auto g = io::graph_from_json(io::load_file(data_dir / "theta.json"));
    CHECK(g == PantsGraph::canonical(2));
    CHECK(io::graph_from_json(io::to_json(g)) == g);
}

TEST_CASE("graph documents are validated")
{
    const auto bad_degree = io::parse_text(
        R"({"genus": 2, "edges": [{"id": "A", "ends": [0, 1]}, {"id": "B", "ends": [0, 1]}, {"id": "C", "ends": [1, 1]}]})");
    try {
        io::graph_from_json(bad_degree);
        FAIL("accepted wrong degree");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("at vertex 0") != std::string::npos);
    }
    CHECK_THROWS_AS(io::graph_from_json(io::parse_text(R"({"genus": 1, "edges": []})")), DomainError);
    CHECK_THROWS_AS(io::graph_from_json(io::parse_text(R"({"genus": "two", "edges": []})")), ParseError);
    CHECK_THROWS_AS(io::graph_from_json(io::parse_text(R"({"edges": []})")), ParseError);
}

TEST_CASE("malformed JSON reports the byte offset")
{
    try {
        io::parse_text(R"({"genus": 2,, })");
        FAIL("accepted malformed JSON");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 13);
    }
    CHECK_THROWS_AS(io::load_file(data_dir / "does-not-exist.json"), ParseError);
}

TEST_CASE("scenes round trip")
{
    for (const auto& s : fixtures::theta_family(3, 3)) {
        const auto back = io::scene_from_json(io::parse_text(io::to_json(*s).dump()));
        CHECK(*back == *s);
    }
    const auto g3 = fixtures::canonical(3);
    const auto s3 = make_stack_scene(g3, {0, 2, 1, 0, 3, 1}, {{"x", GapAnchor{4, 2}}, {"y", DiskAnchor{0}}});
    CHECK(*io::scene_from_json(io::to_json(*s3)) == *s3);
}

TEST_CASE("a stack on an unknown edge is rejected")
{
    const auto doc = io::parse_text(R"({"graph": {"genus": 2, "edges": [
        {"id": "A", "ends": [0, 1]}, {"id": "B", "ends": [0, 1]}, {"id": "C", "ends": [0, 1]}]},
        "scene": {"stacks": {"Q": ["Q.1"]}}})");
    CHECK_THROWS_AS(io::scene_from_json(doc), ValidationError);
    const auto unknown_parent = io::parse_text(R"({"graph": {"genus": 2, "edges": [
        {"id": "A", "ends": [0, 1]}, {"id": "B", "ends": [0, 1]}, {"id": "C", "ends": [0, 1]}]},
        "scene": {"disks": [{"id": "d", "anchor": {"disk": "nope"}}]}})");
    CHECK_THROWS_AS(io::scene_from_json(unknown_parent), ValidationError);
}

TEST_CASE("submanifolds round trip and resolve scene references")
{
    const auto w = io::submanifold_from_json(io::load_file(data_dir / "decorated_pants.json"), data_dir);
    CHECK(w.in_region_ids() == std::vector<std::string>{"surface:0", "gap:A:1"});
    CHECK(io::submanifold_from_json(io::to_json(w)) == w);
    const auto bad = io::parse_text(R"({"sceneRef": "decorated_pants_scene.json", "in": ["surface:7"]})");
    CHECK_THROWS_AS(io::submanifold_from_json(bad, data_dir), ValidationError);
}

TEST_CASE("weights documents")
{
    const auto g = theta();
    const auto m = io::weights_from_json(io::load_file(data_dir / "weights_7_12.json"), *g);
    CHECK(m.pants == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
    CHECK(m.curve[0] == Rational(1, 3));
    CHECK(m.weight[0] == Rational(1, 4));
    CHECK(m.coorientation[0] == Coorientation::TowardFirst);
    CHECK(m.curve[1] == 0);
    CHECK(io::weights_from_json(io::to_json(m, *g), *g) == m);
    CHECK_NOTHROW(af_from_weights(g, m));

    CHECK_THROWS_AS(io::weights_from_json(io::parse_text(R"({"a": {"0": 0.5}})"), *g), ParseError);
    CHECK_THROWS_AS(io::weights_from_json(io::parse_text(R"({"a": {"2": "1"}})"), *g), ValidationError);
    CHECK_THROWS_AS(io::weights_from_json(io::parse_text(R"({"c": {"A": "up"}})"), *g), ValidationError);
    try {
        io::additive_function_from_json(io::parse_text(R"({"a": {"0": "1/2"}, "b": {"A": "1/3"}})"), g);
        FAIL("accepted unnormalized weights");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("mass sums to 5/6") != std::string::npos);
    }
}

TEST_CASE("additive function documents round trip")
{
    const auto g = theta();
    const auto m = io::weights_from_json(io::load_file(data_dir / "weights_7_12.json"), *g);
    const std::vector<AdditiveFunction> nus{AdditiveFunction::complexity(g), af_from_weights(g, m),
                                            tabulate(af_from_weights(g, m))};
    for (const auto& nu : nus) {
        const auto back = io::additive_function_from_json(io::parse_text(io::to_json(nu).dump()), g);
        CHECK(back.kind() == nu.kind());
        for (NormalClass::Mask s = 0; s < 4; ++s) {
            CHECK(af_eval(back, NormalClass(g, s)) == af_eval(nu, NormalClass(g, s)));
        }
    }
    CHECK(io::additive_function_from_json(Json("complexity"), g).kind() == AdditiveFunction::Kind::Complexity);
    const auto broken = io::additive_function_from_json(io::load_file(data_dir / "broken_table.json"), g);
    CHECK(broken.values().at(1) == Rational(9, 10));
    CHECK_THROWS_AS(io::additive_function_from_json(io::parse_text(R"({"kind": "magic"})"), g), ParseError);
}

TEST_CASE("filtrations round trip")
{
    const auto f = io::filtration_from_json(io::load_file(data_dir / "filtration_3_7.json"), data_dir);
    CHECK(f.steps().size() == 2);
    CHECK(f.steps()[0].t == Rational(3, 10));
    const auto back = io::filtration_from_json(io::parse_text(io::to_json(f).dump()));
    CHECK(back.t_min() == f.t_min());
    CHECK(back.t_max() == f.t_max());
    REQUIRE(back.steps().size() == f.steps().size());
    for (std::size_t i = 0; i < f.steps().size(); ++i) {
        CHECK(back.steps()[i].t == f.steps()[i].t);
        CHECK(back.steps()[i].level == f.steps()[i].level);
    }
}

TEST_CASE("reports keep a stable field order")
{
    NormalizationAudit report;
    report.checked = 3;
    report.enumerated = 4;
    const auto j = io::to_json(report);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"status", "checkedCount", "enumerated"});
    CHECK(j.dump() == io::to_json(report).dump());
}
