#include "oracles.hpp"
#include "scenes.hpp"

#include "surfmeasure/enumeration.hpp"
#include "surfmeasure/errors.hpp"
#include "surfmeasure/normalization.hpp"

#include <doctest.h>

using namespace surfmeasure;
using fixtures::theta;

namespace {

Submanifold select(const ScenePtr& s, std::vector<std::string> ids)
{
    return Submanifold::from_region_ids(s, ids);
}

NormalClass cls(std::vector<VertexId> members)
{
    return NormalClass(theta(), members);
}

bool has_disk_boundary(const Submanifold& w)
{
    for (std::size_t d = 0; d < w.scene().disks().size(); ++d) {
        if (w.is_boundary_curve(w.scene().disk_curve(d))) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("disk elimination")
{
    const auto root = make_stack_scene(theta(), {0, 0, 0}, {{"d0", PantsAnchor{0}}});
    CHECK(eliminate_disks(select(root, {"disk:d0"})).is_empty_set());
    CHECK(eliminate_disks(select(root, {"surface:0"})).is_whole_surface());

    const auto nested = make_stack_scene(theta(), {0, 0, 0}, {{"d0", PantsAnchor{0}}, {"d1", DiskAnchor{0}}});
    CHECK(eliminate_disks(select(nested, {"disk:d0"})).is_empty_set());

    const auto ones = make_stack_scene(theta(), {1, 1, 1});
    const auto pants = select(ones, {"surface:0"});
    CHECK(eliminate_disks(pants) == pants);
}

TEST_CASE("disk elimination leaves no contractible boundary and is dominated by its input")
{
    for (const auto& s : fixtures::theta_family(2, 3)) {
        const SceneEnumeration en(s, 1 << 12);
        for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
            const auto w = canonicalize(en.submanifold(m));
            const auto u = eliminate_disks(w);
            CHECK_FALSE(has_disk_boundary(u));
            CHECK(u.is_canonical());
            const auto out_u = outward_coorientation(u);
            const auto out_w = outward_coorientation(w);
            for (std::size_t c = 0; c < u.scene().curve_count(); ++c) {
                const auto id = u.scene().curves()[c].id;
                const auto in_w = w.scene().find_curve(id);
                REQUIRE(in_w.has_value());
                CHECK(out_u[c] == out_w[*in_w]);
            }
        }
    }
}

TEST_CASE("stack classification")
{
    const auto two = make_stack_scene(theta(), {2, 0, 0});
    auto outer = classify_stacks(select(two, {"gap:A:1"}));
    REQUIRE(outer.size() == 1);
    CHECK(outer[0].kind == StackKind::Outer);
    CHECK(outer[0].k == 2);

    auto inner = classify_stacks(select(two, {"surface:0"}));
    REQUIRE(inner.size() == 1);
    CHECK(inner[0].kind == StackKind::Inner);
    CHECK(inner[0].k == 2);

    const auto s = make_stack_scene(theta(), {3, 1, 1});
    const auto w = select(s, {"surface:0", "gap:A:2"});
    const auto all = classify_stacks(w);
    REQUIRE(all.size() == 3);
    CHECK(all[0].kind == StackKind::Intermediate);
    CHECK(all[0].k == 3);
    CHECK(all[0].inner_end == CurveSide::First);
    CHECK(all[1].kind == StackKind::Intermediate);
    CHECK(all[1].k == 1);
    CHECK(all[2].kind == StackKind::Intermediate);
    CHECK(classify_stack(select(s, {"surface:1"}), 1).inner_end == CurveSide::Second);
    CHECK(classify_stack(select(two, {"gap:A:1"}), 1).kind == StackKind::Absent);
    CHECK_THROWS_AS(classify_stack(Submanifold::empty(s), 0), AlternationViolation);
}

TEST_CASE("stack parity over the theta family")
{
    for (const auto& s : fixtures::theta_family(3, 0)) {
        const SceneEnumeration en(s, 1 << 12);
        for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
            for (const auto& c : classify_stacks(canonicalize(en.submanifold(m)))) {
                CHECK(c.k >= 1);
                if (c.kind == StackKind::Intermediate) {
                    CHECK(c.k % 2 == 1);
                } else {
                    CHECK(c.k % 2 == 0);
                }
            }
        }
    }
}

TEST_CASE("associated normal submanifolds")
{
    const auto two = make_stack_scene(theta(), {2, 0, 0});
    const auto annulus = associated_normals(select(two, {"gap:A:1"}));
    CHECK(annulus.minimal.cls.is_empty());
    for (const auto& v : annulus.all) {
        CHECK(v.cls.is_empty());
    }
    CHECK(associated_normals(select(two, {"surface:0"})).minimal.cls.is_whole());

    const auto s = make_stack_scene(theta(), {3, 1, 1});
    const auto a = associated_normals(select(s, {"surface:0", "gap:A:2"}));
    REQUIRE(a.all.size() == 2);
    CHECK(a.all[0].indices == std::vector<int>{1});
    CHECK(a.all[1].indices == std::vector<int>{3});
    CHECK(a.all[0].cls == cls({0}));
    CHECK(a.all[1].cls == cls({0}));
    CHECK(a.minimal.cls == a.maximal.cls);
    // the two representatives keep different curves
    CHECK_FALSE(a.all[0].normal == a.all[1].normal);

    const auto ones = make_stack_scene(theta(), {1, 1, 1});
    const auto pants = select(ones, {"surface:0"});
    CHECK(associated_normals(pants).minimal.normal == pants);

    const auto disk = make_stack_scene(theta(), {0, 0, 0}, {{"d0", PantsAnchor{0}}});
    CHECK_THROWS_AS(associated_normals(select(disk, {"disk:d0"})), NotDiskFree);
}

TEST_CASE("normalize on the worked examples")
{
    CHECK(normalize(Submanifold::empty(make_scene(theta()))).is_empty());
    const auto holed = make_stack_scene(theta(), {0, 0, 0}, {{"d0", PantsAnchor{0}}});
    CHECK(normalize(select(holed, {"surface:0"})).is_whole());

    const auto decorated = make_scene(theta(), {{"A.1", "A.2"}, {"B.1"}, {"C.1"}}, {{"d0", PantsAnchor{0}}});
    CHECK(normalize(select(decorated, {"surface:0", "gap:A:1"})) == cls({0}));
    CHECK(normalize(select(decorated, {"surface:0"})) == cls({0}));
}

TEST_CASE("normalize agrees with the removal oracle on every theta-family submanifold")
{
    std::mt19937_64 rng(7);
    std::size_t checked = 0;
    for (const auto& s : fixtures::theta_family(3, 3)) {
        const SceneEnumeration en(s, 1 << 12);
        for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
            const auto w = en.submanifold(m);
            const auto expected = oracle::phi(*s, w.selection());
            CHECK(normalize(w).mask() == expected);
            CHECK(oracle::phi(*s, w.selection(), &rng) == expected);
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("normalize agrees with the removal oracle at genus three")
{
    const auto g = fixtures::canonical(3);
    std::mt19937_64 rng(11);
    for (const auto& lengths : std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1}, {2, 1, 0, 1, 3, 1}, {0, 2, 1, 1, 0, 2}}) {
        const auto bare = make_stack_scene(g, lengths);
        for (auto& forest : fixtures::disk_forests(*bare, 1)) {
            const auto s = make_stack_scene(g, lengths, std::move(forest));
            const SceneEnumeration en(s, 1 << 12);
            for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
                const auto w = en.submanifold(m);
                CHECK(normalize(w).mask() == oracle::phi(*s, w.selection(), &rng));
            }
        }
    }
}

TEST_CASE("all associated variants share the class")
{
    for (const auto& s : fixtures::theta_family(3, 0)) {
        const SceneEnumeration en(s, 1 << 12);
        for (SceneEnumeration::Mask m = 0; m <= en.full(); ++m) {
            const auto a = associated_normals(canonicalize(en.submanifold(m)));
            for (const auto& v : a.all) {
                CHECK(v.cls == a.minimal.cls);
                CHECK(is_normal(v.normal));
            }
        }
    }
}

TEST_CASE("complexity is monotone and strictly so unless the class is unchanged")
{
    for (const auto& s : fixtures::theta_family(3, 2)) {
        const SceneEnumeration en(s, 1 << 12);
        for (SceneEnumeration::Mask b = 0; b <= en.full(); ++b) {
            for_each_submask(b, [&](SceneEnumeration::Mask a) {
                const auto& pa = en.phi(a);
                const auto& pb = en.phi(b);
                CHECK(pa.complexity() <= pb.complexity());
                CHECK((pa.complexity() == pb.complexity()) == (pa == pb));
                return true;
            });
        }
    }
}

TEST_CASE("normalization audit")
{
    CHECK(audit_normalization(make_stack_scene(theta(), {1, 1, 1})).passed);
    const auto report = audit_normalization(make_stack_scene(theta(), {3, 1, 1}));
    CHECK(report.passed);
    CHECK(report.enumerated == 16);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(audit_normalization(fixtures::uniform_scene(3, 1)).passed);
    CHECK(audit_normalization(fixtures::uniform_scene(3, 2), {1 << 12}).passed);

    AuditOptions tight;
    tight.max_selections = 4;
    CHECK_THROWS_AS(audit_normalization(make_stack_scene(theta(), {3, 1, 1}), tight), EnumerationBudgetExceeded);
}
