#pragma once

#include "surfmeasure/pants_graph.hpp"
#include "surfmeasure/submanifold.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace surfmeasure {

/// Isotopy class of a normal submanifold whose boundary lies in the fixed
/// decomposition: a set of pants. Boundary = edges with exactly one endpoint
/// in the set; complexity = number of pants.
class NormalClass {
public:
    using Mask = std::uint64_t;

    NormalClass(std::shared_ptr<const PantsGraph> graph, Mask members);
    NormalClass(std::shared_ptr<const PantsGraph> graph, const std::vector<VertexId>& members);

    static NormalClass empty(std::shared_ptr<const PantsGraph> graph) { return {std::move(graph), Mask{0}}; }
    static NormalClass whole(std::shared_ptr<const PantsGraph> graph);

    const PantsGraph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const PantsGraph>& graph_ptr() const noexcept { return graph_; }
    Mask mask() const noexcept { return members_; }
    std::vector<VertexId> members() const;
    bool contains(VertexId v) const noexcept { return ((members_ >> v) & 1U) != 0; }

    int complexity() const noexcept;
    bool is_empty() const noexcept { return members_ == 0; }
    bool is_whole() const noexcept { return members_ == full_mask(); }
    /// Edge indices with exactly one endpoint inside; loops never qualify.
    std::vector<std::size_t> boundary_edges() const;

    NormalClass inversion() const { return {graph_, full_mask() & ~members_}; }
    bool is_disjoint_from(const NormalClass& other) const { return (members_ & other.members_) == 0; }
    bool is_contained_in(const NormalClass& other) const { return (members_ & ~other.members_) == 0; }
    /// Sum of disjoint classes; throws DisjointnessViolation otherwise.
    NormalClass operator+(const NormalClass& other) const;

    bool operator==(const NormalClass& other) const;

    Mask full_mask() const noexcept;

private:
    std::shared_ptr<const PantsGraph> graph_;
    Mask members_;
};

/// The class as a normal submanifold: one curve on each boundary edge, members In.
Submanifold realize(const NormalClass& cls);

/// Canonical submanifold with no disks and at most one curve per edge.
bool is_normal(const Submanifold& w);

/// Pants set of a normal submanifold. Throws ValidationError when w is not normal.
NormalClass class_of_normal(const Submanifold& w);

} // namespace surfmeasure
