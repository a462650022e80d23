#include "surfmeasure/additive_function.hpp"

#include "surfmeasure/enumeration.hpp"
#include "surfmeasure/errors.hpp"

#include <bit>

namespace surfmeasure {

namespace {

using Mask = NormalClass::Mask;

std::vector<VertexId> members_of(Mask m)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; m != 0; ++v, m >>= 1) {
        if ((m & 1U) != 0) {
            out.push_back(v);
        }
    }
    return out;
}

Mask full_mask_of(const PantsGraph& g)
{
    return (Mask{1} << g.vertex_count()) - 1;
}

void require_enumerable(const PantsGraph& g, int max_vertices)
{
    if (g.vertex_count() > max_vertices) {
        throw EnumerationBudgetExceeded("graph has " + std::to_string(g.vertex_count())
                                        + " pants; exhaustive checks are capped at " + std::to_string(max_vertices));
    }
}

} // namespace

MeasureWeights MeasureWeights::zero(const PantsGraph& graph)
{
    MeasureWeights w;
    w.pants.assign(graph.vertex_count(), Rational(0));
    w.curve.assign(graph.edge_count(), Rational(0));
    w.weight.assign(graph.edge_count(), Rational(0));
    w.coorientation.assign(graph.edge_count(), Coorientation::TowardFirst);
    return w;
}

MeasureWeights MeasureWeights::dirac(const PantsGraph& graph, VertexId vertex)
{
    MeasureWeights w = zero(graph);
    w.pants.at(vertex) = 1;
    return w;
}

MeasureWeights MeasureWeights::uniform_pants(const PantsGraph& graph)
{
    MeasureWeights w = zero(graph);
    for (auto& a : w.pants) {
        a = Rational(1, graph.vertex_count());
    }
    return w;
}

Rational MeasureWeights::total_mass() const
{
    Rational sum = 0;
    for (const auto& a : pants) {
        sum += a;
    }
    for (const auto& b : curve) {
        sum += b;
    }
    return sum;
}

MeasureWeights mix_weights(const Rational& lambda, const MeasureWeights& first, const MeasureWeights& second)
{
    if (!in_unit_interval(lambda)) {
        throw RangeError("mixing coefficient " + format_rational(lambda) + " outside [0,1]");
    }
    if (first.pants.size() != second.pants.size() || first.curve.size() != second.curve.size()) {
        throw ValidationError("weight vectors of different shapes");
    }
    MeasureWeights out = first;
    for (std::size_t i = 0; i < out.pants.size(); ++i) {
        out.pants[i] = lambda * first.pants[i] + (1 - lambda) * second.pants[i];
    }
    // Curve mass is mixed side by side: the share that counts for a region whose
    // outward direction is TowardFirst is w*b or (1-w)*b.
    const auto toward_first = [](const MeasureWeights& m, std::size_t e) -> Rational {
        const Rational share = m.coorientation[e] == Coorientation::TowardFirst ? m.weight[e] : 1 - m.weight[e];
        return share * m.curve[e];
    };
    for (std::size_t e = 0; e < out.curve.size(); ++e) {
        out.curve[e] = lambda * first.curve[e] + (1 - lambda) * second.curve[e];
        if (first.weight[e] == second.weight[e] && first.coorientation[e] == second.coorientation[e]) {
            continue;
        }
        if (out.curve[e] == 0) {
            continue;
        }
        out.coorientation[e] = Coorientation::TowardFirst;
        out.weight[e] = (lambda * toward_first(first, e) + (1 - lambda) * toward_first(second, e)) / out.curve[e];
    }
    return out;
}

AdditiveFunction AdditiveFunction::complexity(std::shared_ptr<const PantsGraph> graph)
{
    return AdditiveFunction(std::move(graph), ComplexityTag{});
}

AdditiveFunction AdditiveFunction::table(std::shared_ptr<const PantsGraph> graph, Table values)
{
    const Mask full = full_mask_of(*graph);
    for (const auto& [mask, value] : values) {
        if ((mask & ~full) != 0) {
            throw ValidationError("table entry references vertices outside the graph");
        }
    }
    return AdditiveFunction(std::move(graph), std::move(values));
}

AdditiveFunction af_from_weights(std::shared_ptr<const PantsGraph> graph, MeasureWeights weights)
{
    const auto& g = *graph;
    if (weights.pants.size() != static_cast<std::size_t>(g.vertex_count()) || weights.curve.size() != g.edge_count()
        || weights.weight.size() != g.edge_count() || weights.coorientation.size() != g.edge_count()) {
        throw ValidationError("weight vector does not match the graph's vertices and edges");
    }
    for (std::size_t v = 0; v < weights.pants.size(); ++v) {
        if (weights.pants[v] < 0) {
            throw RangeError("negative mass " + format_rational(weights.pants[v]) + " on pants "
                             + std::to_string(v));
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (weights.curve[e] < 0) {
            throw RangeError("negative mass " + format_rational(weights.curve[e]) + " on curve " + g.edge(e).id);
        }
        if (!in_unit_interval(weights.weight[e])) {
            throw RangeError("weight " + format_rational(weights.weight[e]) + " on curve " + g.edge(e).id
                             + " outside [0,1]");
        }
    }
    const Rational total = weights.total_mass();
    if (total != 1) {
        throw NormalizationError("mass sums to " + format_rational(total));
    }
    return AdditiveFunction(std::move(graph), std::move(weights));
}

Rational edge_contribution(const MeasureWeights& weights, const PantsGraph& graph, std::size_t edge, Mask members)
{
    const auto& e = graph.edge(edge);
    const bool first_in = ((members >> e.first) & 1U) != 0;
    const bool second_in = ((members >> e.second) & 1U) != 0;
    if (first_in && second_in) {
        return weights.curve[edge];
    }
    if (!first_in && !second_in) {
        return 0;
    }
    // Outward coorientation points toward the endpoint outside the class.
    const Coorientation outward = first_in ? Coorientation::TowardSecond : Coorientation::TowardFirst;
    const Rational& w = weights.weight[edge];
    return (outward == weights.coorientation[edge] ? w : 1 - w) * weights.curve[edge];
}

Rational af_eval(const AdditiveFunction& nu, const NormalClass& cls)
{
    if (!(nu.graph() == cls.graph())) {
        throw GraphMismatch("class and additive function live on different graphs");
    }
    switch (nu.kind()) {
    case AdditiveFunction::Kind::Complexity:
        return Rational(cls.complexity(), nu.graph().vertex_count());
    case AdditiveFunction::Kind::Weighted: {
        const auto& w = nu.weights();
        Rational sum = 0;
        for (VertexId v : cls.members()) {
            sum += w.pants[v];
        }
        for (std::size_t e = 0; e < nu.graph().edge_count(); ++e) {
            sum += edge_contribution(w, nu.graph(), e, cls.mask());
        }
        return sum;
    }
    case AdditiveFunction::Kind::Table:
        break;
    }
    const auto& table = nu.values();
    if (auto it = table.find(cls.mask()); it != table.end()) {
        return it->second;
    }
    if (cls.is_empty()) {
        return 0;
    }
    std::string name;
    for (VertexId v : cls.members()) {
        name += (name.empty() ? "" : ",") + std::to_string(v);
    }
    throw MissingEntry("no table entry for class {" + name + "}");
}

AfValidation validate_af(const AdditiveFunction& nu, int max_vertices)
{
    const auto& g = nu.graph();
    require_enumerable(g, max_vertices);
    const Mask full = full_mask_of(g);
    std::vector<Rational> value;
    value.reserve(full + 1);
    for (Mask m = 0; m <= full; ++m) {
        value.push_back(af_eval(nu, NormalClass(nu.graph_ptr(), m)));
    }

    AfValidation report;
    auto fail = [&](std::string clause, Mask a, Mask b, std::string detail) {
        report.passed = false;
        report.counterexample = AfCounterexample{std::move(clause), members_of(a), members_of(b), std::move(detail)};
    };

    ++report.checked;
    if (value[full] != 1) {
        fail("normalized", full, 0, "value on the whole surface is " + format_rational(value[full]));
        return report;
    }
    for (Mask m = 0; m <= full; ++m) {
        ++report.checked;
        if (!in_unit_interval(value[m])) {
            fail("range", m, 0, "value " + format_rational(value[m]) + " outside [0,1]");
            return report;
        }
    }
    for (Mask a = 0; a <= full && report.passed; ++a) {
        for_each_submask(full & ~a, [&](Mask b) {
            ++report.checked;
            if (value[a | b] != value[a] + value[b]) {
                fail("additive", a, b,
                     format_rational(value[a | b]) + " != " + format_rational(value[a]) + " + "
                         + format_rational(value[b]));
                return false;
            }
            return true;
        });
    }
    for (Mask a = 0; a <= full && report.passed; ++a) {
        ++report.checked;
        if (value[a] + value[full & ~a] != 1) {
            fail("complement", a, full & ~a, "values sum to " + format_rational(value[a] + value[full & ~a]));
        }
    }
    for (Mask a = 0; a <= full && report.passed; ++a) {
        for_each_submask(full & ~a, [&](Mask extra) {
            ++report.checked;
            if (value[a] > value[a | extra]) {
                fail("monotone", a, a | extra,
                     format_rational(value[a]) + " > " + format_rational(value[a | extra]));
                return false;
            }
            return true;
        });
    }
    return report;
}

Simplicity is_simple(const AdditiveFunction& nu, int max_vertices)
{
    require_enumerable(nu.graph(), max_vertices);
    const Mask full = full_mask_of(nu.graph());
    for (Mask m = 0; m <= full; ++m) {
        Rational v = af_eval(nu, NormalClass(nu.graph_ptr(), m));
        if (v != 0 && v != 1) {
            return {false, std::make_pair(m, std::move(v))};
        }
    }
    return {};
}

AdditiveFunction mix(const Rational& lambda, const AdditiveFunction& first, const AdditiveFunction& second,
                     int max_vertices)
{
    if (!(first.graph() == second.graph())) {
        throw GraphMismatch("cannot mix additive functions on different graphs");
    }
    if (!in_unit_interval(lambda)) {
        throw RangeError("mixing coefficient " + format_rational(lambda) + " outside [0,1]");
    }
    require_enumerable(first.graph(), max_vertices);
    AdditiveFunction::Table table;
    const Mask full = full_mask_of(first.graph());
    for (Mask m = 0; m <= full; ++m) {
        const NormalClass c(first.graph_ptr(), m);
        table.emplace(m, lambda * af_eval(first, c) + (1 - lambda) * af_eval(second, c));
    }
    return AdditiveFunction::table(first.graph_ptr(), std::move(table));
}

AdditiveFunction tabulate(const AdditiveFunction& nu, int max_vertices)
{
    return mix(Rational(1), nu, nu, max_vertices);
}

} // namespace surfmeasure
