#pragma once

#include "surfmeasure/scene.hpp"

#include <span>
#include <string>
#include <vector>

namespace surfmeasure {

/// A compact codimension-0 submanifold W: the closure of the union of the
/// regions of a scene selected as In. Canonical when every curve of the scene
/// separates an In region from an Out region, i.e. the curves are exactly the
/// boundary components of W.
class Submanifold {
public:
    Submanifold(ScenePtr scene, std::vector<bool> in);

    static Submanifold empty(ScenePtr scene);
    static Submanifold whole(ScenePtr scene);
    /// Throws ValidationError on unknown region ids.
    static Submanifold from_region_ids(ScenePtr scene, std::span<const std::string> ids);

    const Scene& scene() const noexcept { return *scene_; }
    const ScenePtr& scene_ptr() const noexcept { return scene_; }
    const std::vector<bool>& selection() const noexcept { return in_; }
    bool is_in(std::size_t region) const { return in_.at(region); }

    std::vector<std::size_t> in_regions() const;
    std::vector<std::string> in_region_ids() const;

    /// Curve separates different selection values.
    bool is_boundary_curve(std::size_t curve) const;
    bool is_canonical() const;
    bool is_empty_set() const;
    bool is_whole_surface() const;

    bool operator==(const Submanifold& other) const;

private:
    ScenePtr scene_;
    std::vector<bool> in_;
};

/// Same subset of the surface over the smallest sub-scene: every curve with
/// equal values on both sides is deleted and the regions it separated merge.
/// Idempotent.
Submanifold canonicalize(const Submanifold& w);

/// Closure of the complement; flips every region.
Submanifold invert(const Submanifold& w);

/// Requires a shared scene, no common In region and no curve with In regions of
/// w and w' on opposite sides. Throws DisjointnessViolation (witness: region or
/// curve id) or SceneMismatch. Result is canonical.
Submanifold disjoint_union(const Submanifold& w, const Submanifold& other);

/// Non-throwing form of the disjoint_union precondition.
bool are_disjoint(const Submanifold& w, const Submanifold& other);

/// In-regions of w are a subset of those of `outer`. Throws SceneMismatch.
bool is_contained(const Submanifold& w, const Submanifold& outer);

/// Outward side (the Out side) of every curve, indexed by curve. Requires a
/// canonical submanifold; throws ValidationError for a non-boundary curve.
std::vector<CurveSide> outward_coorientation(const Submanifold& w);

/// The unique canonical submanifold whose boundary is every curve of the
/// scene, cooriented by `outward` (one entry per curve, naming its Out side).
/// Throws AmbiguousEmptyBoundary on a curveless scene and
/// InconsistentCoorientation when some region would be both In and Out.
Submanifold from_cooriented_boundary(ScenePtr scene, std::span<const CurveSide> outward);

/// Sum of the Euler characteristics of the In regions.
int euler_characteristic(const Submanifold& w);

} // namespace surfmeasure
