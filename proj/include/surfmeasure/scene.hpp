#pragma once

#include "surfmeasure/pants_graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surfmeasure {

/// Root disk lying in the pants region containing `vertex`.
struct PantsAnchor {
    VertexId vertex = 0;
    bool operator==(const PantsAnchor&) const = default;
};

/// Root disk lying in the collar annulus between copies `gap` and `gap+1` of an edge's curve.
struct GapAnchor {
    std::size_t edge = 0;
    int gap = 1;
    bool operator==(const GapAnchor&) const = default;
};

/// Disk nested directly inside another disk (index into Scene::disks()).
struct DiskAnchor {
    std::size_t parent = 0;
    bool operator==(const DiskAnchor&) const = default;
};

using Anchor = std::variant<PantsAnchor, GapAnchor, DiskAnchor>;

/// A contractible curve together with the disk it bounds.
struct DiskNode {
    std::string id;
    Anchor anchor;
    bool operator==(const DiskNode&) const = default;
};

enum class RegionKind : std::uint8_t { Surface, Gap, Disk };

/// A connected component of the surface cut along every curve of a scene.
struct Region {
    RegionKind kind = RegionKind::Surface;
    std::string id;
    std::vector<VertexId> vertices; // Surface: the pants glued into this region, sorted
    std::size_t edge = 0;           // Gap
    int gap = 0;                    // Gap
    std::size_t disk = 0;           // Disk
    int euler = 0;                  // Euler characteristic of the closed region
};

enum class CurveKind : std::uint8_t { Stack, Disk };

/// Sides of a curve. Stack curves: First faces the edge's first endpoint.
/// Disk curves: First is the outside, Second the inside of the disk.
enum class CurveSide : std::uint8_t { First = 0, Second = 1 };

constexpr CurveSide opposite(CurveSide s) noexcept
{
    return s == CurveSide::First ? CurveSide::Second : CurveSide::First;
}

struct Curve {
    std::string id;
    CurveKind kind = CurveKind::Stack;
    std::size_t edge = 0; // Stack
    int position = 0;     // Stack, 1-based from the first endpoint
    std::size_t disk = 0; // Disk
    std::array<std::size_t, 2> sides{};

    std::size_t region(CurveSide s) const noexcept { return sides[static_cast<int>(s)]; }
};

/// A concrete multicurve subordinate to the pants decomposition: stacks of
/// parallel copies of decomposition curves plus a forest of nested
/// contractible curves. Immutable; the derived region set and curve adjacency
/// are computed once at construction.
class Scene {
public:
    /// Empty scene (no curves): a single region, the whole surface.
    explicit Scene(std::shared_ptr<const PantsGraph> graph);

    /// `stacks[e]` lists curve ids of edge e from the first endpoint outwards.
    /// Pants anchors are rewritten to the smallest vertex of their region.
    Scene(std::shared_ptr<const PantsGraph> graph, std::vector<std::vector<std::string>> stacks,
          std::vector<DiskNode> disks);

    const PantsGraph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const PantsGraph>& graph_ptr() const noexcept { return graph_; }

    const std::vector<std::vector<std::string>>& stacks() const noexcept { return stacks_; }
    int stack_length(std::size_t edge) const { return static_cast<int>(stacks_.at(edge).size()); }
    std::span<const DiskNode> disks() const noexcept { return disks_; }
    std::span<const Region> regions() const noexcept { return regions_; }
    std::span<const Curve> curves() const noexcept { return curves_; }
    std::size_t region_count() const noexcept { return regions_.size(); }
    std::size_t curve_count() const noexcept { return curves_.size(); }
    bool has_curves() const noexcept { return !curves_.empty(); }

    std::size_t surface_region(VertexId v) const { return surface_of_vertex_.at(static_cast<std::size_t>(v)); }
    std::size_t gap_region(std::size_t edge, int gap) const;
    std::size_t disk_region(std::size_t disk) const { return disk_region_base_ + disk; }
    std::size_t anchor_region(const Anchor& anchor) const;
    /// Anchor that places a root disk (or child) into `region`.
    Anchor anchor_in(std::size_t region) const;

    std::size_t stack_curve(std::size_t edge, int position) const;
    std::size_t disk_curve(std::size_t disk) const { return disk_curve_base_ + disk; }

    std::optional<std::size_t> find_region(std::string_view id) const;
    std::size_t region_index(std::string_view id) const;
    std::optional<std::size_t> find_curve(std::string_view id) const;
    std::size_t curve_index(std::string_view id) const;
    std::optional<std::size_t> find_disk(std::string_view id) const;

    bool is_root_disk(std::size_t disk) const { return !std::holds_alternative<DiskAnchor>(disks_.at(disk).anchor); }
    const std::vector<std::size_t>& disk_children(std::size_t disk) const { return children_.at(disk); }
    /// `disk` and all disks nested inside it, preorder.
    std::vector<std::size_t> disk_subtree(std::size_t disk) const;

    /// Structural equality: same graph, stacks (with curve ids) and disk forest.
    bool operator==(const Scene& other) const;

private:
    void build();

    std::shared_ptr<const PantsGraph> graph_;
    std::vector<std::vector<std::string>> stacks_;
    std::vector<DiskNode> disks_;

    std::vector<Region> regions_;
    std::vector<Curve> curves_;
    std::vector<std::size_t> surface_of_vertex_;
    std::vector<std::size_t> gap_base_; // per edge, region index of gap 1
    std::size_t disk_region_base_ = 0;
    std::vector<std::size_t> stack_curve_base_;
    std::size_t disk_curve_base_ = 0;
    std::vector<std::vector<std::size_t>> children_;
};

using ScenePtr = std::shared_ptr<const Scene>;

ScenePtr make_scene(std::shared_ptr<const PantsGraph> graph, std::vector<std::vector<std::string>> stacks = {},
                    std::vector<DiskNode> disks = {});

/// Scene with `lengths[e]` parallel copies on edge e, named "<edge>.<i>".
ScenePtr make_stack_scene(std::shared_ptr<const PantsGraph> graph, const std::vector<int>& lengths,
                          std::vector<DiskNode> disks = {});

} // namespace surfmeasure
