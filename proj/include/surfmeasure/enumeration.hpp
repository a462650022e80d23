#pragma once

#include "surfmeasure/normal_class.hpp"
#include "surfmeasure/submanifold.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace surfmeasure {

/// Every submanifold expressible in one scene, indexed by the bitmask of its
/// In regions, with the normalization of each precomputed. Pair predicates
/// work on masks so audits can sweep all pairs cheaply.
class SceneEnumeration {
public:
    using Mask = std::uint64_t;

    /// Throws EnumerationBudgetExceeded when 2^regions > max_selections.
    SceneEnumeration(ScenePtr scene, std::uint64_t max_selections);

    const Scene& scene() const noexcept { return *scene_; }
    const ScenePtr& scene_ptr() const noexcept { return scene_; }
    std::uint64_t size() const noexcept { return full_ + 1; }
    Mask full() const noexcept { return full_; }

    Submanifold submanifold(Mask m) const;
    std::vector<std::string> region_ids(Mask m) const;

    /// Shares no region and no curve.
    bool disjoint(Mask a, Mask b) const noexcept { return (b & (a | neighbours(a))) == 0; }
    /// Regions across a curve from some region of `m`.
    Mask neighbours(Mask m) const noexcept;

    const NormalClass& phi(Mask m) const { return phi_.at(m); }
    /// Canonical form of the submanifold is normal.
    bool normal(Mask m) const { return normal_.at(m); }

private:
    ScenePtr scene_;
    Mask full_ = 0;
    std::vector<Mask> neighbour_of_;
    std::vector<NormalClass> phi_;
    std::vector<bool> normal_;
};

/// Visits the submasks of `m` in increasing numeric order while `f` returns
/// true. Returns false if `f` stopped the sweep.
template <typename F>
bool for_each_submask(std::uint64_t m, F&& f)
{
    std::uint64_t s = 0;
    while (true) {
        if (!f(s)) {
            return false;
        }
        if (s == m) {
            return true;
        }
        s = (s - m) & m;
    }
}

} // namespace surfmeasure
