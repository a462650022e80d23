#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfmeasure {

using VertexId = int;

/// One decomposition curve, drawn as an edge between the two pants it bounds.
/// The endpoint order is significant: parallel copies of the curve are stored
/// from the first endpoint's side to the second's.
struct PantsEdge {
    std::string id;
    VertexId first = 0;
    VertexId second = 0;

    bool is_loop() const noexcept { return first == second; }
    bool operator==(const PantsEdge&) const = default;
};

/// Trivalent multigraph of a fixed pants decomposition of the closed genus-g
/// surface: vertices are the 2g-2 pairs of pants, edges the 3g-3 cutting curves.
class PantsGraph {
public:
    /// Largest vertex count supported; vertex sets are stored as 64-bit masks.
    static constexpr int kMaxVertices = 64;

    /// Validates counts, 3-regularity (loops count twice), connectivity and
    /// unique edge ids. Vertices are always 0..2g-3.
    PantsGraph(int genus, std::vector<PantsEdge> edges);

    /// Cycle on 0..2g-3 plus the matching i <-> i+(g-1). Edges are named A, B, C, ...
    static PantsGraph canonical(int genus);

    int genus() const noexcept { return genus_; }
    int vertex_count() const noexcept { return 2 * genus_ - 2; }
    std::span<const PantsEdge> edges() const noexcept { return edges_; }
    const PantsEdge& edge(std::size_t index) const { return edges_.at(index); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::optional<std::size_t> find_edge(std::string_view id) const;
    /// Throws ValidationError for an unknown id.
    std::size_t edge_index(std::string_view id) const;

    bool operator==(const PantsGraph&) const = default;

private:
    int genus_;
    std::vector<PantsEdge> edges_;
};

/// Edge names used by PantsGraph::canonical: A..Z, then E26, E27, ...
std::string canonical_edge_name(std::size_t index);

} // namespace surfmeasure
