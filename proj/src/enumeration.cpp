#include "surfmeasure/enumeration.hpp"

#include "surfmeasure/errors.hpp"
#include "surfmeasure/normalization.hpp"

namespace surfmeasure {

SceneEnumeration::SceneEnumeration(ScenePtr scene, std::uint64_t max_selections) : scene_(std::move(scene))
{
    const std::size_t r = scene_->region_count();
    if (r >= 63 || (std::uint64_t{1} << r) > max_selections) {
        throw EnumerationBudgetExceeded("scene has " + std::to_string(r) + " regions; 2^" + std::to_string(r)
                                        + " selections exceed the budget of " + std::to_string(max_selections));
    }
    full_ = (Mask{1} << r) - 1;
    neighbour_of_.assign(r, 0);
    for (const auto& c : scene_->curves()) {
        neighbour_of_[c.sides[0]] |= Mask{1} << c.sides[1];
        neighbour_of_[c.sides[1]] |= Mask{1} << c.sides[0];
    }
    phi_.reserve(size());
    normal_.reserve(size());
    for (Mask m = 0; m <= full_; ++m) {
        const Submanifold w = submanifold(m);
        phi_.push_back(normalize(w));
        normal_.push_back(is_normal(canonicalize(w)));
    }
}

Submanifold SceneEnumeration::submanifold(Mask m) const
{
    std::vector<bool> in(scene_->region_count());
    for (std::size_t r = 0; r < in.size(); ++r) {
        in[r] = ((m >> r) & 1U) != 0;
    }
    return Submanifold(scene_, std::move(in));
}

std::vector<std::string> SceneEnumeration::region_ids(Mask m) const
{
    std::vector<std::string> out;
    for (std::size_t r = 0; r < scene_->region_count(); ++r) {
        if (((m >> r) & 1U) != 0) {
            out.push_back(scene_->regions()[r].id);
        }
    }
    return out;
}

SceneEnumeration::Mask SceneEnumeration::neighbours(Mask m) const noexcept
{
    Mask out = 0;
    for (std::size_t r = 0; m != 0; ++r, m >>= 1) {
        if ((m & 1U) != 0) {
            out |= neighbour_of_[r];
        }
    }
    return out;
}

} // namespace surfmeasure
