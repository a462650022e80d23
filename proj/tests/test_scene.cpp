#include "scenes.hpp"

#include "surfmeasure/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace surfmeasure;
using fixtures::theta;

namespace {

// surface components of (vertices, edges without curves) by union-find, plus one
// region per interior gap and per disk
std::size_t expected_region_count(const Scene& s)
{
    const auto& g = s.graph();
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            v = parent[v] = parent[parent[v]];
        }
        return v;
    };
    std::size_t gaps = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const int m = s.stack_length(e);
        if (m == 0) {
            parent[find(g.edge(e).first)] = find(g.edge(e).second);
        } else {
            gaps += static_cast<std::size_t>(m - 1);
        }
    }
    std::size_t components = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        components += find(v) == v ? 1 : 0;
    }
    return components + gaps + s.disks().size();
}

} // namespace

TEST_CASE("empty theta scene is one surface region")
{
    const auto s = make_scene(theta());
    REQUIRE(s->region_count() == 1);
    CHECK(s->regions()[0].kind == RegionKind::Surface);
    CHECK(s->regions()[0].vertices == std::vector<VertexId>{0, 1});
    CHECK(s->regions()[0].euler == -2);
    CHECK_FALSE(s->has_curves());
}

TEST_CASE("a single curve sees the same region on both sides")
{
    const auto s = make_stack_scene(theta(), {1, 0, 0});
    REQUIRE(s->region_count() == 1);
    REQUIRE(s->curve_count() == 1);
    const auto& c = s->curves()[0];
    CHECK(c.id == "A.1");
    CHECK(c.region(CurveSide::First) == 0);
    CHECK(c.region(CurveSide::Second) == 0);
}

TEST_CASE("two parallel curves cut off a gap region")
{
    const auto s = make_stack_scene(theta(), {2, 0, 0});
    REQUIRE(s->region_count() == 2);
    CHECK(s->regions()[0].id == "surface:0");
    CHECK(s->regions()[1].id == "gap:A:1");
    CHECK(s->regions()[1].euler == 0);
    const std::size_t gap = s->gap_region(0, 1);
    for (const auto& c : s->curves()) {
        CHECK(c.region(CurveSide::First) != c.region(CurveSide::Second));
        CHECK((c.region(CurveSide::First) == gap || c.region(CurveSide::Second) == gap));
    }
}

TEST_CASE("stack curves face their first endpoint on the first side")
{
    const auto s = make_stack_scene(theta(), {3, 1, 1});
    const auto& a1 = s->curves()[s->stack_curve(0, 1)];
    const auto& a3 = s->curves()[s->stack_curve(0, 3)];
    CHECK(a1.region(CurveSide::First) == s->surface_region(0));
    CHECK(a1.region(CurveSide::Second) == s->gap_region(0, 1));
    CHECK(a3.region(CurveSide::First) == s->gap_region(0, 2));
    CHECK(a3.region(CurveSide::Second) == s->surface_region(1));
}

TEST_CASE("region counts and Euler characteristics over the theta family")
{
    for (const auto& s : fixtures::theta_family(3, 3)) {
        CHECK(s->region_count() == expected_region_count(*s));
        int chi = 0;
        for (const auto& r : s->regions()) {
            chi += r.euler;
        }
        CHECK(chi == -2);
        for (const auto& c : s->curves()) {
            CHECK(c.region(CurveSide::First) < s->region_count());
            CHECK(c.region(CurveSide::Second) < s->region_count());
        }
    }
}

TEST_CASE("Euler characteristics sum to 2-2g at genus three")
{
    const auto g = fixtures::canonical(3);
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            const auto bare = make_stack_scene(g, {a, b, 0, 1, 0, 2});
            for (auto& forest : fixtures::disk_forests(*bare, 2)) {
                const auto s = make_stack_scene(g, {a, b, 0, 1, 0, 2}, std::move(forest));
                int chi = 0;
                for (const auto& r : s->regions()) {
                    chi += r.euler;
                }
                CHECK(chi == -4);
                CHECK(s->region_count() == expected_region_count(*s));
            }
        }
    }
}

TEST_CASE("disk regions and curves")
{
    const auto s = make_stack_scene(theta(), {1, 1, 1}, {{"d0", PantsAnchor{0}}, {"d1", DiskAnchor{0}}});
    const std::size_t d0 = s->disk_region(0);
    const std::size_t d1 = s->disk_region(1);
    CHECK(s->regions()[d0].id == "disk:d0");
    CHECK(s->regions()[d0].euler == 0);
    CHECK(s->regions()[d1].euler == 1);
    CHECK(s->regions()[s->surface_region(0)].euler == -2);
    const auto& c0 = s->curves()[s->disk_curve(0)];
    CHECK(c0.region(CurveSide::First) == s->surface_region(0));
    CHECK(c0.region(CurveSide::Second) == d0);
    CHECK(s->disk_subtree(0) == std::vector<std::size_t>{0, 1});
    CHECK(s->is_root_disk(0));
    CHECK_FALSE(s->is_root_disk(1));
}

TEST_CASE("invalid scenes are rejected")
{
    const auto g = theta();
    CHECK_THROWS_AS(make_scene(g, {{"x"}, {"x"}, {}}), ValidationError);
    CHECK_THROWS_AS(make_scene(g, {{""}, {}, {}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {1, 1}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {2, 0, 0}, {{"d", GapAnchor{0, 2}}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {1, 0, 0}, {{"d", GapAnchor{0, 1}}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {0, 0, 0}, {{"d", PantsAnchor{2}}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {0, 0, 0}, {{"d", DiskAnchor{0}}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {0, 0, 0}, {{"d", DiskAnchor{1}}, {"e", DiskAnchor{0}}}), ValidationError);
    CHECK_THROWS_AS(make_stack_scene(g, {0, 0, 0}, {{"d", PantsAnchor{0}}, {"d", PantsAnchor{0}}}), ValidationError);
}

TEST_CASE("pants anchors are stored at the smallest vertex of their region")
{
    const auto g = theta();
    const auto a = make_stack_scene(g, {0, 0, 0}, {{"d", PantsAnchor{1}}});
    const auto b = make_stack_scene(g, {0, 0, 0}, {{"d", PantsAnchor{0}}});
    CHECK(*a == *b);
    const auto c = make_stack_scene(g, {1, 1, 1}, {{"d", PantsAnchor{1}}});
    const auto d = make_stack_scene(g, {1, 1, 1}, {{"d", PantsAnchor{0}}});
    CHECK_FALSE(*c == *d);
}

TEST_CASE("lookups by id")
{
    const auto s = make_stack_scene(theta(), {2, 1, 1}, {{"d0", GapAnchor{0, 1}}});
    CHECK(s->region_index("gap:A:1") == s->gap_region(0, 1));
    CHECK(s->curve_index("A.2") == s->stack_curve(0, 2));
    CHECK(s->curve_index("d0") == s->disk_curve(0));
    CHECK(s->find_disk("d0") == std::optional<std::size_t>{0});
    CHECK_THROWS_AS(s->region_index("gap:B:1"), ValidationError);
    CHECK(s->anchor_region(GapAnchor{0, 1}) == s->gap_region(0, 1));
}
