#pragma once

#include "surfmeasure/normal_class.hpp"
#include "surfmeasure/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace surfmeasure {

/// Coorientation of a decomposition curve, in terms of its edge's endpoint order.
enum class Coorientation : std::uint8_t { TowardFirst, TowardSecond };

/// A probability measure on the surface as a finite weight vector (mass of each
/// open pair of pants and of each decomposition curve), together with a
/// coorientation and a weight in [0,1] per decomposition curve that decide how
/// a curve's mass is shared between the two sides.
struct MeasureWeights {
    std::vector<Rational> pants;              // per vertex, >= 0
    std::vector<Rational> curve;              // per edge, >= 0
    std::vector<Rational> weight;             // per edge, in [0,1]
    std::vector<Coorientation> coorientation; // per edge

    /// All masses zero, weights zero, coorientations TowardFirst. Not normalized.
    static MeasureWeights zero(const PantsGraph& graph);
    /// Unit mass on one pair of pants.
    static MeasureWeights dirac(const PantsGraph& graph, VertexId vertex);
    static MeasureWeights uniform_pants(const PantsGraph& graph);

    Rational total_mass() const;
    bool operator==(const MeasureWeights&) const = default;
};

/// The measure lambda * first + (1 - lambda) * second. Curves whose weight and
/// coorientation differ between the inputs come back cooriented TowardFirst.
MeasureWeights mix_weights(const Rational& lambda, const MeasureWeights& first, const MeasureWeights& second);

/// A function on normal classes; additive and normalized when valid.
class AdditiveFunction {
public:
    enum class Kind : std::uint8_t { Complexity, Weighted, Table };
    using Table = std::map<NormalClass::Mask, Rational>;

    /// Number of pants divided by 2g-2.
    static AdditiveFunction complexity(std::shared_ptr<const PantsGraph> graph);
    /// Explicit values keyed by member mask. The empty class defaults to 0.
    static AdditiveFunction table(std::shared_ptr<const PantsGraph> graph, Table values);

    Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
    const PantsGraph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const PantsGraph>& graph_ptr() const noexcept { return graph_; }
    /// Throws std::bad_variant_access for other kinds.
    const MeasureWeights& weights() const { return std::get<MeasureWeights>(data_); }
    const Table& values() const { return std::get<Table>(data_); }

private:
    struct ComplexityTag {};
    friend AdditiveFunction af_from_weights(std::shared_ptr<const PantsGraph> graph, MeasureWeights weights);

    AdditiveFunction(std::shared_ptr<const PantsGraph> graph, std::variant<ComplexityTag, MeasureWeights, Table> data)
        : graph_(std::move(graph)), data_(std::move(data))
    {
    }

    std::shared_ptr<const PantsGraph> graph_;
    std::variant<ComplexityTag, MeasureWeights, Table> data_;
};

/// Weighted additive function. Throws ValidationError on size mismatch,
/// RangeError for a negative mass or a weight outside [0,1], and
/// NormalizationError when the masses do not sum to 1.
AdditiveFunction af_from_weights(std::shared_ptr<const PantsGraph> graph, MeasureWeights weights);

/// Throws GraphMismatch, or MissingEntry for an absent table entry.
Rational af_eval(const AdditiveFunction& nu, const NormalClass& cls);

/// Share of edge e's curve mass credited to the class `members`:
/// 0 outside, full mass inside, and <w, sigma> * mass on the boundary, where
/// sigma = +1 iff the outward coorientation matches the stored one.
Rational edge_contribution(const MeasureWeights& weights, const PantsGraph& graph, std::size_t edge,
                           NormalClass::Mask members);

struct AfCounterexample {
    std::string clause; // normalized | range | additive | complement | monotone
    std::vector<VertexId> first;
    std::vector<VertexId> second;
    std::string detail;
};

struct AfValidation {
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<AfCounterexample> counterexample;
};

/// Largest vertex count the exhaustive checks will sweep by default (3^n pairs).
inline constexpr int kDefaultMaxVertices = 12;

/// Exhaustive check over all 2^(2g-2) classes: nu(whole) = 1, range [0,1],
/// additivity on disjoint pairs, nu(N) + nu(N^i) = 1, monotonicity on nested
/// pairs. Throws EnumerationBudgetExceeded beyond `max_vertices`.
AfValidation validate_af(const AdditiveFunction& nu, int max_vertices = kDefaultMaxVertices);

struct Simplicity {
    bool simple = true;
    /// First class with a value other than 0 or 1.
    std::optional<std::pair<NormalClass::Mask, Rational>> witness;
};

Simplicity is_simple(const AdditiveFunction& nu, int max_vertices = kDefaultMaxVertices);

/// Table of lambda * first + (1 - lambda) * second on every class.
AdditiveFunction mix(const Rational& lambda, const AdditiveFunction& first, const AdditiveFunction& second,
                     int max_vertices = kDefaultMaxVertices);

/// Table of nu on every class.
AdditiveFunction tabulate(const AdditiveFunction& nu, int max_vertices = kDefaultMaxVertices);

} // namespace surfmeasure
