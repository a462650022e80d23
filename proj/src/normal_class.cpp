#include "surfmeasure/normal_class.hpp"

#include "surfmeasure/errors.hpp"

#include <bit>

namespace surfmeasure {

NormalClass::NormalClass(std::shared_ptr<const PantsGraph> graph, Mask members)
    : graph_(std::move(graph)), members_(members)
{
    if ((members_ & ~full_mask()) != 0) {
        throw ValidationError("class members outside the graph's vertices");
    }
}

NormalClass::NormalClass(std::shared_ptr<const PantsGraph> graph, const std::vector<VertexId>& members)
    : graph_(std::move(graph)), members_(0)
{
    for (VertexId v : members) {
        if (v < 0 || v >= graph_->vertex_count()) {
            throw ValidationError("class member " + std::to_string(v) + " is not a vertex");
        }
        members_ |= Mask{1} << v;
    }
}

NormalClass NormalClass::whole(std::shared_ptr<const PantsGraph> graph)
{
    NormalClass c(std::move(graph), Mask{0});
    c.members_ = c.full_mask();
    return c;
}

NormalClass::Mask NormalClass::full_mask() const noexcept
{
    const int n = graph_->vertex_count();
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<VertexId> NormalClass::members() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
        if (contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

int NormalClass::complexity() const noexcept
{
    return std::popcount(members_);
}

std::vector<std::size_t> NormalClass::boundary_edges() const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < graph_->edge_count(); ++e) {
        const auto& edge = graph_->edge(e);
        if (contains(edge.first) != contains(edge.second)) {
            out.push_back(e);
        }
    }
    return out;
}

NormalClass NormalClass::operator+(const NormalClass& other) const
{
    if (!(*graph_ == *other.graph_)) {
        throw GraphMismatch("classes over different graphs");
    }
    if (!is_disjoint_from(other)) {
        const int v = std::countr_zero(members_ & other.members_);
        throw DisjointnessViolation("classes share pants " + std::to_string(v), std::to_string(v));
    }
    return {graph_, members_ | other.members_};
}

bool NormalClass::operator==(const NormalClass& other) const
{
    return members_ == other.members_ && (graph_ == other.graph_ || *graph_ == *other.graph_);
}

Submanifold realize(const NormalClass& cls)
{
    const auto& g = cls.graph();
    std::vector<int> lengths(g.edge_count(), 0);
    for (std::size_t e : cls.boundary_edges()) {
        lengths[e] = 1;
    }
    auto scene = make_stack_scene(cls.graph_ptr(), lengths);
    std::vector<bool> in(scene->region_count(), false);
    for (VertexId v : cls.members()) {
        in[scene->surface_region(v)] = true;
    }
    return Submanifold(std::move(scene), std::move(in));
}

bool is_normal(const Submanifold& w)
{
    if (!w.is_canonical() || !w.scene().disks().empty()) {
        return false;
    }
    for (std::size_t e = 0; e < w.scene().stacks().size(); ++e) {
        if (w.scene().stack_length(e) > 1) {
            return false;
        }
    }
    return true;
}

NormalClass class_of_normal(const Submanifold& w)
{
    if (!is_normal(w)) {
        throw ValidationError("submanifold is not normal");
    }
    NormalClass::Mask mask = 0;
    for (VertexId v = 0; v < w.scene().graph().vertex_count(); ++v) {
        if (w.is_in(w.scene().surface_region(v))) {
            mask |= NormalClass::Mask{1} << v;
        }
    }
    return {w.scene().graph_ptr(), mask};
}

} // namespace surfmeasure
