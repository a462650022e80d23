#include "surfmeasure/normalization.hpp"

#include "surfmeasure/enumeration.hpp"
#include "surfmeasure/errors.hpp"

namespace surfmeasure {

Submanifold eliminate_disks(const Submanifold& w)
{
    const Submanifold c = canonicalize(w);
    const Scene& s = c.scene();
    if (s.disks().empty()) {
        return c;
    }
    std::vector<bool> in = c.selection();
    for (std::size_t d = 0; d < s.disks().size(); ++d) {
        if (!s.is_root_disk(d)) {
            continue;
        }
        // In a canonical submanifold every root is a maximal contractible boundary curve.
        const bool outside = c.is_in(s.anchor_region(s.disks()[d].anchor));
        for (std::size_t inner : s.disk_subtree(d)) {
            in[s.disk_region(inner)] = outside;
        }
    }
    return canonicalize(Submanifold(c.scene_ptr(), std::move(in)));
}

StackClassification classify_stack(const Submanifold& w, std::size_t edge)
{
    const Scene& s = w.scene();
    StackClassification out;
    out.edge = edge;
    out.k = s.stack_length(edge);
    if (out.k == 0) {
        return out;
    }
    for (int i = 1; i <= out.k; ++i) {
        if (!w.is_boundary_curve(s.stack_curve(edge, i))) {
            throw AlternationViolation("stack of edge " + s.graph().edge(edge).id + " does not alternate at copy "
                                       + std::to_string(i));
        }
    }
    const auto& e = s.graph().edge(edge);
    const bool first_in = w.is_in(s.surface_region(e.first));
    const bool second_in = w.is_in(s.surface_region(e.second));
    if (first_in != second_in) {
        out.kind = StackKind::Intermediate;
        out.inner_end = first_in ? CurveSide::First : CurveSide::Second;
        if (out.k % 2 != 1) {
            throw AlternationViolation("intermediate stack with even length on edge " + e.id);
        }
    } else {
        out.kind = first_in ? StackKind::Inner : StackKind::Outer;
        if (out.k % 2 != 0) {
            throw AlternationViolation("inner/outer stack with odd length on edge " + e.id);
        }
    }
    return out;
}

std::vector<StackClassification> classify_stacks(const Submanifold& w)
{
    std::vector<StackClassification> out;
    for (std::size_t e = 0; e < w.scene().stacks().size(); ++e) {
        if (w.scene().stack_length(e) > 0) {
            out.push_back(classify_stack(w, e));
        }
    }
    return out;
}

namespace {

struct Choice {
    std::size_t edge;
    int k;
    CurveSide inner_end;
};

/// `indices[j]` picks the copy kept on `choices[j]`, counted from its inner end.
AssociatedVariant flood(const Submanifold& w, const std::vector<StackClassification>& classes,
                        const std::vector<Choice>& choices, const std::vector<int>& indices)
{
    const Scene& s = w.scene();
    std::vector<bool> in = w.selection();
    for (const auto& c : classes) {
        if (c.kind == StackKind::Inner || c.kind == StackKind::Outer) {
            for (int g = 1; g < c.k; ++g) {
                in[s.gap_region(c.edge, g)] = c.kind == StackKind::Inner;
            }
        }
    }
    for (std::size_t j = 0; j < choices.size(); ++j) {
        const auto& c = choices[j];
        const int keep = c.inner_end == CurveSide::First ? indices[j] : c.k + 1 - indices[j];
        const auto& e = s.graph().edge(c.edge);
        const bool first_value = w.is_in(s.surface_region(e.first));
        for (int g = 1; g < c.k; ++g) {
            in[s.gap_region(c.edge, g)] = g < keep ? first_value : !first_value;
        }
    }
    Submanifold flooded(w.scene_ptr(), std::move(in));
    Submanifold normal = canonicalize(flooded);
    NormalClass cls = class_of_normal(normal);
    return {indices, std::move(flooded), std::move(normal), std::move(cls)};
}

void require_disk_free(const Submanifold& w)
{
    if (!w.scene().disks().empty()) {
        throw NotDiskFree("submanifold still has contractible boundary curves");
    }
}

std::vector<Choice> intermediate_choices(const std::vector<StackClassification>& classes)
{
    std::vector<Choice> out;
    for (const auto& c : classes) {
        if (c.kind == StackKind::Intermediate && c.k >= 3) {
            out.push_back({c.edge, c.k, c.inner_end});
        }
    }
    return out;
}

} // namespace

AssociatedNormals associated_normals(const Submanifold& w)
{
    require_disk_free(w);
    const auto classes = classify_stacks(w);
    const auto choices = intermediate_choices(classes);

    std::vector<int> lowest(choices.size(), 1);
    std::vector<int> highest;
    for (const auto& c : choices) {
        highest.push_back(c.k);
    }

    std::vector<AssociatedVariant> all;
    std::vector<int> idx = lowest;
    while (true) {
        all.push_back(flood(w, classes, choices, idx));
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (idx[j] + 2 <= choices[j].k) {
                idx[j] += 2;
                break;
            }
            idx[j] = 1;
        }
        if (j == idx.size()) {
            break;
        }
    }
    return {flood(w, classes, choices, lowest), flood(w, classes, choices, highest), std::move(all)};
}

NormalClass normalize(const Submanifold& w)
{
    const Submanifold u = eliminate_disks(w);
    const auto classes = classify_stacks(u);
    const auto choices = intermediate_choices(classes);
    return flood(u, classes, choices, std::vector<int>(choices.size(), 1)).cls;
}

NormalizationAudit audit_normalization(const ScenePtr& scene, const AuditOptions& options)
{
    using Mask = SceneEnumeration::Mask;
    const SceneEnumeration en(scene, options.max_selections);
    NormalizationAudit report;
    report.enumerated = en.size();
    const Mask full = en.full();

    auto fail = [&](std::string clause, Mask a, std::optional<Mask> b, std::string detail) {
        report.passed = false;
        report.counterexample =
            Counterexample{std::move(clause), "submanifolds", en.region_ids(a), b ? en.region_ids(*b) : std::vector<std::string>{},
                           std::move(detail)};
    };
    auto members = [](const NormalClass& c) {
        std::string s = "{";
        for (VertexId v : c.members()) {
            s += (s.size() > 1 ? "," : "") + std::to_string(v);
        }
        return s + "}";
    };

    // (i) disjoint additivity
    for (Mask a = 0; a <= full && report.passed; ++a) {
        const Mask free = full & ~(a | en.neighbours(a));
        for_each_submask(free, [&](Mask b) {
            ++report.checked;
            const auto& pa = en.phi(a);
            const auto& pb = en.phi(b);
            if (!pa.is_disjoint_from(pb)) {
                fail("disjoint", a, b, "classes " + members(pa) + " and " + members(pb) + " overlap");
                return false;
            }
            if (!(en.phi(a | b) == pa + pb)) {
                fail("disjoint", a, b,
                     "union normalizes to " + members(en.phi(a | b)) + ", expected " + members(pa + pb));
                return false;
            }
            return true;
        });
    }
    // (ii) containment
    for (Mask a = 0; a <= full && report.passed; ++a) {
        for_each_submask(full & ~a, [&](Mask extra) {
            ++report.checked;
            const Mask b = a | extra;
            if (!en.phi(a).is_contained_in(en.phi(b))) {
                fail("monotone", a, b, members(en.phi(a)) + " not contained in " + members(en.phi(b)));
                return false;
            }
            return true;
        });
    }
    // (iii) inversion
    for (Mask a = 0; a <= full && report.passed; ++a) {
        ++report.checked;
        if (!(en.phi(full & ~a) == en.phi(a).inversion())) {
            fail("inversion", a, std::nullopt,
                 "inverse normalizes to " + members(en.phi(full & ~a)) + ", expected "
                     + members(en.phi(a).inversion()));
        }
    }
    // (iv) normal submanifolds are fixed
    for (Mask a = 0; a <= full && report.passed; ++a) {
        if (!en.normal(a)) {
            continue;
        }
        ++report.checked;
        const NormalClass own = class_of_normal(canonicalize(en.submanifold(a)));
        if (!(en.phi(a) == own)) {
            fail("fixes-normal", a, std::nullopt, "normal class " + members(own) + " mapped to " + members(en.phi(a)));
        }
    }
    return report;
}

} // namespace surfmeasure
