#include "surfmeasure/quasistate.hpp"

#include "surfmeasure/errors.hpp"
#include "surfmeasure/measure.hpp"
#include "surfmeasure/normalization.hpp"

namespace surfmeasure {

Filtration::Filtration(ScenePtr scene, Rational t_min, Rational t_max, std::vector<FiltrationStep> steps)
    : scene_(std::move(scene)), t_min_(std::move(t_min)), t_max_(std::move(t_max)), steps_(std::move(steps))
{
    if (!(t_min_ < t_max_)) {
        throw ValidationError("filtration needs tMin < tMax");
    }
    Rational previous = t_min_;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const auto& step = steps_[i];
        if (!(step.level.scene() == *scene_)) {
            throw SceneMismatch("step " + std::to_string(i) + " lives on another scene");
        }
        if (!(step.t > previous)) {
            throw ValidationError("step " + std::to_string(i) + " at t = " + format_rational(step.t)
                                  + " does not increase past " + format_rational(previous));
        }
        if (step.t > t_max_) {
            throw ValidationError("step " + std::to_string(i) + " lies beyond tMax");
        }
        previous = step.t;
    }
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
        if (!is_contained(steps_[i].level, steps_[i + 1].level)) {
            throw NestingViolation("step " + std::to_string(i) + " is not contained in step " + std::to_string(i + 1),
                                   i);
        }
    }
    if (steps_.empty() || !normalize(steps_.back().level).is_whole()) {
        warnings_.push_back("top sublevel set does not normalize to the whole surface");
    }
}

namespace {

std::vector<Rational> level_values(const Filtration& f, const AdditiveFunction& nu)
{
    const TopologicalMeasure m(nu);
    std::vector<Rational> out;
    for (const auto& step : f.steps()) {
        out.push_back(tau(m, step.level));
    }
    return out;
}

} // namespace

std::vector<Breakpoint> b_function(const Filtration& f, const AdditiveFunction& nu)
{
    const auto values = level_values(f, nu);
    std::vector<Breakpoint> out{{f.t_min(), Rational(0)}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != out.back().value) {
            out.push_back({f.steps()[i].t, values[i]});
        }
    }
    return out;
}

Rational zeta(const Filtration& f, const AdditiveFunction& nu)
{
    const auto values = level_values(f, nu);
    Rational integral = 0;
    const auto& steps = f.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Rational& end = i + 1 < steps.size() ? steps[i + 1].t : f.t_max();
        integral += (end - steps[i].t) * values[i];
    }
    return f.t_max() - integral;
}

EssentialValues essential_values(const Filtration& f)
{
    EssentialValues out;
    int previous = 0;
    for (const auto& step : f.steps()) {
        const int n = normalize(step.level).complexity();
        const int jump = n - previous;
        for (int j = 0; j < jump; ++j) {
            out.values.push_back(step.t);
        }
        if (jump > 1) {
            out.morse_generic = false;
        }
        previous = n;
    }
    return out;
}

} // namespace surfmeasure
