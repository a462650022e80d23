#pragma once

#include "surfmeasure/additive_function.hpp"
#include "surfmeasure/submanifold.hpp"

#include <string>
#include <vector>

namespace surfmeasure {

struct FiltrationStep {
    Rational t;
    Submanifold level;
};

/// Sublevel sets {F <= t} of a function F with min F = t_min and max F = t_max,
/// flattened onto one scene: empty below the first step, then level i on
/// [t_i, t_{i+1}), the last level on [t_m, t_max].
class Filtration {
public:
    /// Requires t_min < t_1 < ... < t_m <= t_max, all levels on `scene`, and
    /// nondecreasing In sets (NestingViolation names the first offending step).
    Filtration(ScenePtr scene, Rational t_min, Rational t_max, std::vector<FiltrationStep> steps);

    const ScenePtr& scene_ptr() const noexcept { return scene_; }
    const Rational& t_min() const noexcept { return t_min_; }
    const Rational& t_max() const noexcept { return t_max_; }
    const std::vector<FiltrationStep>& steps() const noexcept { return steps_; }

    /// Non-fatal findings, e.g. a top level that does not normalize to the whole surface.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool reaches_whole_surface() const noexcept { return warnings_.empty(); }

private:
    ScenePtr scene_;
    Rational t_min_;
    Rational t_max_;
    std::vector<FiltrationStep> steps_;
    std::vector<std::string> warnings_;
};

struct Breakpoint {
    Rational t;
    Rational value;
    bool operator==(const Breakpoint&) const = default;
};

/// Right-continuous step function t -> tau({F <= t}): (t_min, 0) followed by
/// each step where the value changes.
std::vector<Breakpoint> b_function(const Filtration& f, const AdditiveFunction& nu);

/// max F minus the integral of the b-function over [min F, max F].
Rational zeta(const Filtration& f, const AdditiveFunction& nu);

struct EssentialValues {
    /// Step parameters repeated by the complexity jump of the normalized level.
    std::vector<Rational> values;
    /// Every jump is 0 or 1.
    bool morse_generic = true;
};

/// Values at which the normalized sublevel class gains pants.
EssentialValues essential_values(const Filtration& f);

} // namespace surfmeasure
