#include "surfmeasure/submanifold.hpp"

#include "surfmeasure/errors.hpp"

#include <optional>

namespace surfmeasure {

Submanifold::Submanifold(ScenePtr scene, std::vector<bool> in) : scene_(std::move(scene)), in_(std::move(in))
{
    if (!scene_) {
        throw ValidationError("submanifold without a scene");
    }
    if (in_.size() != scene_->region_count()) {
        throw ValidationError("selection has " + std::to_string(in_.size()) + " entries for "
                              + std::to_string(scene_->region_count()) + " regions");
    }
}

Submanifold Submanifold::empty(ScenePtr scene)
{
    const auto n = scene->region_count();
    return Submanifold(std::move(scene), std::vector<bool>(n, false));
}

Submanifold Submanifold::whole(ScenePtr scene)
{
    const auto n = scene->region_count();
    return Submanifold(std::move(scene), std::vector<bool>(n, true));
}

Submanifold Submanifold::from_region_ids(ScenePtr scene, std::span<const std::string> ids)
{
    std::vector<bool> in(scene->region_count(), false);
    for (const auto& id : ids) {
        in[scene->region_index(id)] = true;
    }
    return Submanifold(std::move(scene), std::move(in));
}

std::vector<std::size_t> Submanifold::in_regions() const
{
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < in_.size(); ++r) {
        if (in_[r]) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<std::string> Submanifold::in_region_ids() const
{
    std::vector<std::string> out;
    for (std::size_t r : in_regions()) {
        out.push_back(scene_->regions()[r].id);
    }
    return out;
}

bool Submanifold::is_boundary_curve(std::size_t curve) const
{
    const auto& c = scene_->curves()[curve];
    return in_[c.sides[0]] != in_[c.sides[1]];
}

bool Submanifold::is_canonical() const
{
    for (std::size_t c = 0; c < scene_->curve_count(); ++c) {
        if (!is_boundary_curve(c)) {
            return false;
        }
    }
    return true;
}

bool Submanifold::is_empty_set() const
{
    for (bool b : in_) {
        if (b) {
            return false;
        }
    }
    return true;
}

bool Submanifold::is_whole_surface() const
{
    for (bool b : in_) {
        if (!b) {
            return false;
        }
    }
    return true;
}

bool Submanifold::operator==(const Submanifold& other) const
{
    return in_ == other.in_ && *scene_ == *other.scene_;
}

Submanifold canonicalize(const Submanifold& w)
{
    const Scene& old = w.scene();
    if (w.is_canonical()) {
        return w;
    }
    std::vector<bool> keep(old.curve_count());
    for (std::size_t c = 0; c < old.curve_count(); ++c) {
        keep[c] = w.is_boundary_curve(c);
    }

    std::vector<std::vector<std::string>> stacks(old.stacks().size());
    // kept_before[e][j]: kept curves among positions 1..j of edge e
    std::vector<std::vector<int>> kept_before(old.stacks().size());
    for (std::size_t e = 0; e < old.stacks().size(); ++e) {
        const int m = old.stack_length(e);
        kept_before[e].assign(m + 1, 0);
        for (int j = 1; j <= m; ++j) {
            const bool k = keep[old.stack_curve(e, j)];
            kept_before[e][j] = kept_before[e][j - 1] + (k ? 1 : 0);
            if (k) {
                stacks[e].push_back(old.stacks()[e][j - 1]);
            }
        }
    }

    std::vector<int> new_length(stacks.size());
    for (std::size_t e = 0; e < stacks.size(); ++e) {
        new_length[e] = static_cast<int>(stacks[e].size());
    }

    std::vector<std::optional<std::size_t>> new_disk_index(old.disks().size());
    std::size_t kept_disks = 0;
    for (std::size_t d = 0; d < old.disks().size(); ++d) {
        if (keep[old.disk_curve(d)]) {
            new_disk_index[d] = kept_disks++;
        }
    }

    // Region mapping is expressed through anchors so it can be resolved once the
    // new scene exists; removed disks inherit the target of their own anchor.
    auto placement = [&](std::size_t region, auto&& self) -> Anchor {
        const Region& r = old.regions()[region];
        switch (r.kind) {
        case RegionKind::Surface:
            return PantsAnchor{r.vertices.front()};
        case RegionKind::Gap: {
            const int p = kept_before[r.edge][r.gap];
            const int m_new = new_length[r.edge];
            const auto& edge = old.graph().edge(r.edge);
            if (p == 0) {
                return PantsAnchor{edge.first};
            }
            if (p == m_new) {
                return PantsAnchor{edge.second};
            }
            return GapAnchor{r.edge, p};
        }
        case RegionKind::Disk:
            break;
        }
        if (new_disk_index[r.disk]) {
            return DiskAnchor{*new_disk_index[r.disk]};
        }
        return self(old.anchor_region(old.disks()[r.disk].anchor), self);
    };

    std::vector<DiskNode> disks;
    for (std::size_t d = 0; d < old.disks().size(); ++d) {
        if (new_disk_index[d]) {
            disks.push_back({old.disks()[d].id, placement(old.anchor_region(old.disks()[d].anchor), placement)});
        }
    }
    auto scene = make_scene(old.graph_ptr(), std::move(stacks), std::move(disks));

    std::vector<bool> in(scene->region_count(), false);
    for (std::size_t r = 0; r < old.region_count(); ++r) {
        if (w.is_in(r)) {
            in[scene->anchor_region(placement(r, placement))] = true;
        }
    }
    return Submanifold(std::move(scene), std::move(in));
}

Submanifold invert(const Submanifold& w)
{
    std::vector<bool> in = w.selection();
    in.flip();
    return Submanifold(w.scene_ptr(), std::move(in));
}

namespace {

void require_same_scene(const Submanifold& a, const Submanifold& b)
{
    if (!(a.scene() == b.scene())) {
        throw SceneMismatch("operands live on different scenes");
    }
}

/// Id of a region or curve shared by a and b, if any.
std::optional<std::string> contact_witness(const Submanifold& a, const Submanifold& b)
{
    const Scene& s = a.scene();
    for (std::size_t r = 0; r < s.region_count(); ++r) {
        if (a.is_in(r) && b.is_in(r)) {
            return s.regions()[r].id;
        }
    }
    for (const auto& c : s.curves()) {
        if ((a.is_in(c.sides[0]) && b.is_in(c.sides[1])) || (a.is_in(c.sides[1]) && b.is_in(c.sides[0]))) {
            return c.id;
        }
    }
    return std::nullopt;
}

} // namespace

bool are_disjoint(const Submanifold& w, const Submanifold& other)
{
    require_same_scene(w, other);
    return !contact_witness(w, other);
}

Submanifold disjoint_union(const Submanifold& w, const Submanifold& other)
{
    require_same_scene(w, other);
    if (auto witness = contact_witness(w, other)) {
        throw DisjointnessViolation("submanifolds meet at " + *witness, *witness);
    }
    std::vector<bool> in = w.selection();
    for (std::size_t r = 0; r < in.size(); ++r) {
        in[r] = in[r] || other.is_in(r);
    }
    return canonicalize(Submanifold(w.scene_ptr(), std::move(in)));
}

bool is_contained(const Submanifold& w, const Submanifold& outer)
{
    require_same_scene(w, outer);
    for (std::size_t r = 0; r < w.selection().size(); ++r) {
        if (w.is_in(r) && !outer.is_in(r)) {
            return false;
        }
    }
    return true;
}

std::vector<CurveSide> outward_coorientation(const Submanifold& w)
{
    std::vector<CurveSide> out;
    out.reserve(w.scene().curve_count());
    for (std::size_t c = 0; c < w.scene().curve_count(); ++c) {
        if (!w.is_boundary_curve(c)) {
            throw ValidationError("curve " + w.scene().curves()[c].id + " is not a boundary curve");
        }
        out.push_back(w.is_in(w.scene().curves()[c].sides[0]) ? CurveSide::Second : CurveSide::First);
    }
    return out;
}

Submanifold from_cooriented_boundary(ScenePtr scene, std::span<const CurveSide> outward)
{
    if (!scene->has_curves()) {
        throw AmbiguousEmptyBoundary("empty boundary: both the empty set and the whole surface qualify");
    }
    if (outward.size() != scene->curve_count()) {
        throw ValidationError("coorientation must name one side for each of the "
                              + std::to_string(scene->curve_count()) + " curves");
    }
    std::vector<std::optional<bool>> value(scene->region_count());
    auto force = [&](std::size_t region, bool in) {
        if (value[region] && *value[region] != in) {
            throw InconsistentCoorientation("region " + scene->regions()[region].id + " forced both In and Out",
                                            scene->regions()[region].id);
        }
        value[region] = in;
    };
    for (std::size_t c = 0; c < scene->curve_count(); ++c) {
        const auto& curve = scene->curves()[c];
        force(curve.region(outward[c]), false);
        force(curve.region(opposite(outward[c])), true);
    }
    std::vector<bool> in(scene->region_count(), false);
    for (std::size_t r = 0; r < in.size(); ++r) {
        // Every region of a connected surface borders some curve once there is one.
        in[r] = value[r].value();
    }
    return Submanifold(std::move(scene), std::move(in));
}

int euler_characteristic(const Submanifold& w)
{
    int chi = 0;
    for (std::size_t r : w.in_regions()) {
        chi += w.scene().regions()[r].euler;
    }
    return chi;
}

} // namespace surfmeasure
