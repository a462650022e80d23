#include "surfmeasure/pants_graph.hpp"

#include "surfmeasure/errors.hpp"

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

std::string canonical_edge_name(std::size_t index)
{
    if (index < 26) {
        return std::string(1, static_cast<char>('A' + index));
    }
    return "E" + std::to_string(index);
}

PantsGraph::PantsGraph(int genus, std::vector<PantsEdge> edges) : genus_(genus), edges_(std::move(edges))
{
    if (genus_ < 2) {
        throw DomainError("genus at least two is required, got " + std::to_string(genus_));
    }
    const int n = vertex_count();
    if (n > kMaxVertices) {
        throw DomainError("genus " + std::to_string(genus_) + " exceeds the supported maximum of 33");
    }
    if (static_cast<int>(edges_.size()) != 3 * genus_ - 3) {
        throw ValidationError("expected " + std::to_string(3 * genus_ - 3) + " edges, got "
                              + std::to_string(edges_.size()));
    }
    std::vector<int> degree(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::set<std::string, std::less<>> ids;
    for (const auto& e : edges_) {
        if (e.id.empty()) {
            throw ValidationError("edge with empty id");
        }
        if (!ids.insert(e.id).second) {
            throw ValidationError("duplicate edge id " + e.id);
        }
        for (VertexId v : {e.first, e.second}) {
            if (v < 0 || v >= n) {
                throw ValidationError("edge " + e.id + " references unknown vertex " + std::to_string(v));
            }
            ++degree[v];
        }
        parent[find_root(parent, e.first)] = find_root(parent, e.second);
    }
    for (int v = 0; v < n; ++v) {
        if (degree[v] != 3) {
            throw ValidationError("degree " + std::to_string(degree[v]) + " != 3 at vertex " + std::to_string(v));
        }
    }
    for (int v = 1; v < n; ++v) {
        if (find_root(parent, v) != find_root(parent, 0)) {
            throw ValidationError("graph is disconnected: vertex " + std::to_string(v) + " unreachable from 0");
        }
    }
}

PantsGraph PantsGraph::canonical(int genus)
{
    if (genus < 2) {
        throw DomainError("genus at least two is required, got " + std::to_string(genus));
    }
    const int n = 2 * genus - 2;
    std::vector<PantsEdge> edges;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        edges.push_back({canonical_edge_name(edges.size()), std::min(i, j), std::max(i, j)});
    }
    for (int i = 0; i < genus - 1; ++i) {
        edges.push_back({canonical_edge_name(edges.size()), i, i + genus - 1});
    }
    return PantsGraph(genus, std::move(edges));
}

std::optional<std::size_t> PantsGraph::find_edge(std::string_view id) const
{
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t PantsGraph::edge_index(std::string_view id) const
{
    if (auto idx = find_edge(id)) {
        return *idx;
    }
    throw ValidationError("unknown edge id " + std::string(id));
}

} // namespace surfmeasure
