#pragma once

#include "surfmeasure/additive_function.hpp"
#include "surfmeasure/normalization.hpp"

#include <optional>

namespace surfmeasure {

/// Isotopy-invariant topological measure determined by an additive function:
/// its value on a submanifold W is nu(normalize(W)).
class TopologicalMeasure {
public:
    explicit TopologicalMeasure(AdditiveFunction nu) : nu_(std::move(nu)) {}

    const AdditiveFunction& additive_function() const noexcept { return nu_; }
    const PantsGraph& graph() const noexcept { return nu_.graph(); }

private:
    AdditiveFunction nu_;
};

/// Throws GraphMismatch when w lives on another graph.
Rational tau(const TopologicalMeasure& m, const Submanifold& w);

struct TauAxioms {
    bool normalized = true;
    bool monotone = true;
    bool additive = true;
    bool regular = true;
};

struct TauAudit {
    bool passed = true;
    TauAxioms axioms;
    std::uint64_t enumerated = 0;
    std::uint64_t checked = 0;
    /// First failure: a failure of the additive function itself takes
    /// precedence, then normalized, monotone, additive, regular.
    std::optional<Counterexample> counterexample;
};

/// Exhaustive check over every submanifold of the scene: tau(whole) = 1,
/// monotone on nested pairs, additive on disjoint pairs, and regular in the
/// form tau(W) + nu(normalize(W)^i) = 1 with tau(W') <= nu(normalize(W)^i) for
/// every W' disjoint from W. The additive function is validated first.
TauAudit audit_tau(const TopologicalMeasure& m, const ScenePtr& scene, const AuditOptions& options = {});

/// The additive function N -> tau(realize(N)), as a table.
AdditiveFunction af_from_tau(const TopologicalMeasure& m, int max_vertices = kDefaultMaxVertices);

struct AffinityReport {
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;
};

/// tau of lambda*first + (1-lambda)*second equals the same combination of the
/// two measures on every submanifold of the scene, exactly.
AffinityReport check_affinity(const AdditiveFunction& first, const AdditiveFunction& second, const Rational& lambda,
                              const ScenePtr& scene, const AuditOptions& options = {});

} // namespace surfmeasure
