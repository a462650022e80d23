#pragma once

#include "surfmeasure/scene.hpp"

#include <set>
#include <vector>

namespace fixtures {

using namespace surfmeasure;

inline std::shared_ptr<const PantsGraph> canonical(int genus)
{
    return std::make_shared<const PantsGraph>(PantsGraph::canonical(genus));
}

inline std::shared_ptr<const PantsGraph> theta()
{
    return canonical(2);
}

/// Every anchor a root disk can take in `scene`.
inline std::vector<Anchor> root_anchors(const Scene& scene)
{
    std::vector<Anchor> out;
    std::set<std::size_t> seen;
    for (VertexId v = 0; v < scene.graph().vertex_count(); ++v) {
        if (seen.insert(scene.surface_region(v)).second) {
            out.push_back(PantsAnchor{v});
        }
    }
    for (std::size_t e = 0; e < scene.graph().edge_count(); ++e) {
        for (int gap = 1; gap < scene.stack_length(e); ++gap) {
            out.push_back(GapAnchor{e, gap});
        }
    }
    return out;
}

/// Disk forests with at most `max_nodes` nodes (up to 3), listed so that
/// sibling roots are unordered.
inline std::vector<std::vector<DiskNode>> disk_forests(const Scene& bare, int max_nodes)
{
    const auto anchors = root_anchors(bare);
    std::vector<std::vector<DiskNode>> out{{}};
    if (max_nodes < 1) {
        return out;
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        out.push_back({{"d0", anchors[i]}});
    }
    if (max_nodes < 2) {
        return out;
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        for (std::size_t j = i; j < anchors.size(); ++j) {
            out.push_back({{"d0", anchors[i]}, {"d1", anchors[j]}});
        }
        out.push_back({{"d0", anchors[i]}, {"d1", DiskAnchor{0}}});
    }
    if (max_nodes < 3) {
        return out;
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        // chain, fork, and a nested pair next to a root
        out.push_back({{"d0", anchors[i]}, {"d1", DiskAnchor{0}}, {"d2", DiskAnchor{1}}});
        out.push_back({{"d0", anchors[i]}, {"d1", DiskAnchor{0}}, {"d2", DiskAnchor{0}}});
        for (std::size_t j = 0; j < anchors.size(); ++j) {
            out.push_back({{"d0", anchors[i]}, {"d1", DiskAnchor{0}}, {"d2", anchors[j]}});
        }
    }
    return out;
}

/// Theta-graph scenes: stacks up to `long_max` on one edge and up to 1 on the
/// others, with disk forests of at most `max_disks` nodes.
inline std::vector<ScenePtr> theta_family(int long_max, int max_disks)
{
    const auto g = theta();
    std::set<std::vector<int>> lengths;
    for (int longest = 0; longest < 3; ++longest) {
        for (int m = 0; m <= long_max; ++m) {
            for (int x = 0; x <= 1; ++x) {
                for (int y = 0; y <= 1; ++y) {
                    std::vector<int> l(3);
                    l[longest] = m;
                    l[(longest + 1) % 3] = x;
                    l[(longest + 2) % 3] = y;
                    lengths.insert(l);
                }
            }
        }
    }
    std::vector<ScenePtr> out;
    for (const auto& l : lengths) {
        const auto bare = make_stack_scene(g, l);
        for (auto& forest : disk_forests(*bare, max_disks)) {
            out.push_back(make_stack_scene(g, l, std::move(forest)));
        }
    }
    return out;
}

/// Canonical graph of `genus` with every stack of the given length.
inline ScenePtr uniform_scene(int genus, int length)
{
    const auto g = canonical(genus);
    return make_stack_scene(g, std::vector<int>(g->edge_count(), length));
}

} // namespace fixtures
