#include "surfmeasure/scene.hpp"

#include "surfmeasure/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surfmeasure {

namespace {

int find_root(std::vector<int>& parent, int v)
{
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

} // namespace

Scene::Scene(std::shared_ptr<const PantsGraph> graph) : Scene(std::move(graph), {}, {}) {}

Scene::Scene(std::shared_ptr<const PantsGraph> graph, std::vector<std::vector<std::string>> stacks,
             std::vector<DiskNode> disks)
    : graph_(std::move(graph)), stacks_(std::move(stacks)), disks_(std::move(disks))
{
    if (!graph_) {
        throw ValidationError("scene without a graph");
    }
    if (stacks_.empty()) {
        stacks_.resize(graph_->edge_count());
    }
    build();
}

void Scene::build()
{
    const auto& g = *graph_;
    const int n = g.vertex_count();
    if (stacks_.size() != g.edge_count()) {
        throw ValidationError("scene has " + std::to_string(stacks_.size()) + " stacks for "
                              + std::to_string(g.edge_count()) + " edges");
    }

    std::set<std::string, std::less<>> curve_ids;
    auto claim_id = [&](const std::string& id) {
        if (id.empty()) {
            throw ValidationError("curve with empty id");
        }
        if (!curve_ids.insert(id).second) {
            throw ValidationError("duplicate curve id " + id);
        }
    };
    for (const auto& stack : stacks_) {
        for (const auto& id : stack) {
            claim_id(id);
        }
    }
    for (const auto& d : disks_) {
        claim_id(d.id);
    }

    // Pants joined along uncut edges form one region.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (stacks_[e].empty()) {
            parent[find_root(parent, g.edge(e).first)] = find_root(parent, g.edge(e).second);
        }
    }
    std::map<int, std::vector<VertexId>> components; // keyed by root, filled in vertex order
    for (int v = 0; v < n; ++v) {
        components[find_root(parent, v)].push_back(v);
    }
    std::vector<std::vector<VertexId>> surface_parts;
    for (auto& [root, verts] : components) {
        surface_parts.push_back(std::move(verts));
    }
    std::sort(surface_parts.begin(), surface_parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    surface_of_vertex_.assign(n, 0);
    for (std::size_t r = 0; r < surface_parts.size(); ++r) {
        for (VertexId v : surface_parts[r]) {
            surface_of_vertex_[v] = r;
        }
    }

    // Disk forest validation and anchor normalization.
    const std::size_t nd = disks_.size();
    for (std::size_t i = 0; i < nd; ++i) {
        auto& d = disks_[i];
        if (auto* p = std::get_if<PantsAnchor>(&d.anchor)) {
            if (p->vertex < 0 || p->vertex >= n) {
                throw ValidationError("disk " + d.id + " anchored at unknown vertex " + std::to_string(p->vertex));
            }
            p->vertex = surface_parts[surface_of_vertex_[p->vertex]].front();
        } else if (auto* gap = std::get_if<GapAnchor>(&d.anchor)) {
            if (gap->edge >= g.edge_count()) {
                throw ValidationError("disk " + d.id + " anchored at unknown edge");
            }
            const int m = static_cast<int>(stacks_[gap->edge].size());
            if (m < 2 || gap->gap < 1 || gap->gap > m - 1) {
                throw ValidationError("disk " + d.id + " anchored at invalid gap " + std::to_string(gap->gap)
                                      + " of edge " + g.edge(gap->edge).id + " (stack length "
                                      + std::to_string(m) + ")");
            }
        } else {
            const auto& da = std::get<DiskAnchor>(d.anchor);
            if (da.parent >= nd || da.parent == i) {
                throw ValidationError("disk " + d.id + " has an invalid parent");
            }
        }
    }
    for (std::size_t i = 0; i < nd; ++i) {
        std::size_t cur = i;
        for (std::size_t steps = 0; !is_root_disk(cur); ++steps) {
            if (steps > nd) {
                throw ValidationError("disk forest has a cycle through " + disks_[i].id);
            }
            cur = std::get<DiskAnchor>(disks_[cur].anchor).parent;
        }
    }
    children_.assign(nd, {});
    for (std::size_t i = 0; i < nd; ++i) {
        if (const auto* da = std::get_if<DiskAnchor>(&disks_[i].anchor)) {
            children_[da->parent].push_back(i);
        }
    }

    // Regions: surface components, then gaps in edge order, then disks.
    regions_.clear();
    for (const auto& part : surface_parts) {
        Region r;
        r.kind = RegionKind::Surface;
        r.id = "surface:" + std::to_string(part.front());
        r.vertices = part;
        r.euler = -static_cast<int>(part.size());
        regions_.push_back(std::move(r));
    }
    gap_base_.assign(g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        gap_base_[e] = regions_.size();
        const int m = static_cast<int>(stacks_[e].size());
        for (int i = 1; i < m; ++i) {
            Region r;
            r.kind = RegionKind::Gap;
            r.id = "gap:" + g.edge(e).id + ":" + std::to_string(i);
            r.edge = e;
            r.gap = i;
            regions_.push_back(std::move(r));
        }
    }
    disk_region_base_ = regions_.size();
    for (std::size_t i = 0; i < nd; ++i) {
        Region r;
        r.kind = RegionKind::Disk;
        r.id = "disk:" + disks_[i].id;
        r.disk = i;
        r.euler = 1 - static_cast<int>(children_[i].size());
        regions_.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < nd; ++i) {
        if (is_root_disk(i)) {
            regions_[anchor_region(disks_[i].anchor)].euler -= 1;
        }
    }

    // Curves: stacks in edge order, then disks.
    curves_.clear();
    stack_curve_base_.assign(g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        stack_curve_base_[e] = curves_.size();
        const auto& edge = g.edge(e);
        const int m = static_cast<int>(stacks_[e].size());
        for (int i = 1; i <= m; ++i) {
            Curve c;
            c.id = stacks_[e][i - 1];
            c.kind = CurveKind::Stack;
            c.edge = e;
            c.position = i;
            c.sides[0] = i == 1 ? surface_region(edge.first) : gap_region(e, i - 1);
            c.sides[1] = i == m ? surface_region(edge.second) : gap_region(e, i);
            curves_.push_back(std::move(c));
        }
    }
    disk_curve_base_ = curves_.size();
    for (std::size_t i = 0; i < nd; ++i) {
        Curve c;
        c.id = disks_[i].id;
        c.kind = CurveKind::Disk;
        c.disk = i;
        c.sides[0] = anchor_region(disks_[i].anchor);
        c.sides[1] = disk_region(i);
        curves_.push_back(std::move(c));
    }
}

std::size_t Scene::gap_region(std::size_t edge, int gap) const
{
    if (edge >= stacks_.size() || gap < 1 || gap >= stack_length(edge)) {
        throw ValidationError("no gap " + std::to_string(gap) + " on edge index " + std::to_string(edge));
    }
    return gap_base_[edge] + static_cast<std::size_t>(gap - 1);
}

std::size_t Scene::anchor_region(const Anchor& anchor) const
{
    return std::visit(
        [&](const auto& a) -> std::size_t {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, PantsAnchor>) {
                return surface_region(a.vertex);
            } else if constexpr (std::is_same_v<T, GapAnchor>) {
                return gap_region(a.edge, a.gap);
            } else {
                return disk_region(a.parent);
            }
        },
        anchor);
}

Anchor Scene::anchor_in(std::size_t region) const
{
    const Region& r = regions_.at(region);
    switch (r.kind) {
    case RegionKind::Surface:
        return PantsAnchor{r.vertices.front()};
    case RegionKind::Gap:
        return GapAnchor{r.edge, r.gap};
    case RegionKind::Disk:
        break;
    }
    return DiskAnchor{r.disk};
}

std::size_t Scene::stack_curve(std::size_t edge, int position) const
{
    if (edge >= stacks_.size() || position < 1 || position > stack_length(edge)) {
        throw ValidationError("no curve at position " + std::to_string(position));
    }
    return stack_curve_base_[edge] + static_cast<std::size_t>(position - 1);
}

std::optional<std::size_t> Scene::find_region(std::string_view id) const
{
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        if (regions_[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Scene::region_index(std::string_view id) const
{
    if (auto r = find_region(id)) {
        return *r;
    }
    throw ValidationError("unknown region id " + std::string(id));
}

std::optional<std::size_t> Scene::find_curve(std::string_view id) const
{
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (curves_[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Scene::curve_index(std::string_view id) const
{
    if (auto c = find_curve(id)) {
        return *c;
    }
    throw ValidationError("unknown curve id " + std::string(id));
}

std::optional<std::size_t> Scene::find_disk(std::string_view id) const
{
    for (std::size_t i = 0; i < disks_.size(); ++i) {
        if (disks_[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> Scene::disk_subtree(std::size_t disk) const
{
    std::vector<std::size_t> out{disk};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& kids = children_.at(out[i]);
        out.insert(out.end(), kids.begin(), kids.end());
    }
    return out;
}

bool Scene::operator==(const Scene& other) const
{
    if (this == &other) {
        return true;
    }
    return (graph_ == other.graph_ || *graph_ == *other.graph_) && stacks_ == other.stacks_ && disks_ == other.disks_;
}

ScenePtr make_scene(std::shared_ptr<const PantsGraph> graph, std::vector<std::vector<std::string>> stacks,
                    std::vector<DiskNode> disks)
{
    return std::make_shared<const Scene>(std::move(graph), std::move(stacks), std::move(disks));
}

ScenePtr make_stack_scene(std::shared_ptr<const PantsGraph> graph, const std::vector<int>& lengths,
                          std::vector<DiskNode> disks)
{
    if (lengths.size() != graph->edge_count()) {
        throw ValidationError("one stack length per edge is required");
    }
    std::vector<std::vector<std::string>> stacks(lengths.size());
    for (std::size_t e = 0; e < lengths.size(); ++e) {
        for (int i = 1; i <= lengths[e]; ++i) {
            stacks[e].push_back(graph->edge(e).id + "." + std::to_string(i));
        }
    }
    return make_scene(std::move(graph), std::move(stacks), std::move(disks));
}

} // namespace surfmeasure
