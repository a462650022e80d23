#pragma once

#include "surfmeasure/normal_class.hpp"
#include "surfmeasure/submanifold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfmeasure {

enum class StackKind : std::uint8_t { Absent, Inner, Outer, Intermediate };

/// How W meets the collar of one decomposition curve, read off the
/// alternating In/Out pattern of the regions along the stack.
struct StackClassification {
    std::size_t edge = 0;
    int k = 0; // boundary curves of W parallel to this edge
    StackKind kind = StackKind::Absent;
    /// Intermediate only: the end whose curve is inner (its outer side is In).
    CurveSide inner_end = CurveSide::First;
};

/// Fills or empties every disk bounded by a maximal contractible boundary
/// curve with the value just outside it. Result is canonical with no disks;
/// it is dominated by w and differs from it only inside disks.
Submanifold eliminate_disks(const Submanifold& w);

/// Classification of a single edge (Absent when the stack is empty).
/// Throws AlternationViolation when a stack curve is not a boundary curve.
StackClassification classify_stack(const Submanifold& w, std::size_t edge);

/// One entry per edge carrying at least one curve.
std::vector<StackClassification> classify_stacks(const Submanifold& w);

/// One normal submanifold associated to a disk-free W.
struct AssociatedVariant {
    /// Kept copy per intermediate stack with k >= 3 (edge order), counted
    /// 1, 3, ..., k from the inner end.
    std::vector<int> indices;
    /// W with inner collars filled, outer collars emptied and the chosen
    /// intermediate copies kept; same scene as W.
    Submanifold flooded;
    /// Canonical form of `flooded`; always normal.
    Submanifold normal;
    NormalClass cls;
};

struct AssociatedNormals {
    AssociatedVariant minimal;
    AssociatedVariant maximal;
    std::vector<AssociatedVariant> all;
};

/// Every normal submanifold associated to w. Requires w canonical and
/// disk-free (NotDiskFree otherwise).
AssociatedNormals associated_normals(const Submanifold& w);

/// The normalization map: class of the minimal normal submanifold associated
/// to eliminate_disks(canonicalize(w)).
NormalClass normalize(const Submanifold& w);

struct Counterexample {
    std::string clause;
    /// "submanifolds": witnesses are In region ids. "classes": pants ids.
    std::string subject = "submanifolds";
    std::vector<std::string> first;
    std::vector<std::string> second; // empty for unary clauses
    std::string detail;
};

struct AuditOptions {
    /// Cap on the number of selections (2^regions) an audit may enumerate.
    std::uint64_t max_selections = std::uint64_t{1} << 14;
};

struct NormalizationAudit {
    bool passed = true;
    std::uint64_t enumerated = 0;
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;
};

/// Checks the four defining properties of a normalization on every
/// submanifold the scene can express: disjoint additivity, monotonicity,
/// inversion, fixing normal submanifolds. Stops at the first counterexample.
NormalizationAudit audit_normalization(const ScenePtr& scene, const AuditOptions& options = {});

} // namespace surfmeasure
