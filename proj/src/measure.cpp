#include "surfmeasure/measure.hpp"

#include "surfmeasure/enumeration.hpp"
#include "surfmeasure/errors.hpp"

#include <map>

namespace surfmeasure {

namespace {

using Mask = SceneEnumeration::Mask;

void require_same_graph(const PantsGraph& a, const PantsGraph& b)
{
    if (!(a == b)) {
        throw GraphMismatch("submanifold and measure live on different graphs");
    }
}

/// nu(normalize(W)) for every W of the enumeration, memoized per class.
std::vector<Rational> tau_table(const AdditiveFunction& nu, const SceneEnumeration& en)
{
    std::map<NormalClass::Mask, Rational> by_class;
    std::vector<Rational> out;
    out.reserve(en.size());
    for (Mask m = 0; m <= en.full(); ++m) {
        const NormalClass& c = en.phi(m);
        auto it = by_class.find(c.mask());
        if (it == by_class.end()) {
            it = by_class.emplace(c.mask(), af_eval(nu, c)).first;
        }
        out.push_back(it->second);
    }
    return out;
}

std::vector<std::string> vertex_names(const std::vector<VertexId>& vs)
{
    std::vector<std::string> out;
    for (VertexId v : vs) {
        out.push_back(std::to_string(v));
    }
    return out;
}

} // namespace

Rational tau(const TopologicalMeasure& m, const Submanifold& w)
{
    require_same_graph(m.graph(), w.scene().graph());
    return af_eval(m.additive_function(), normalize(w));
}

TauAudit audit_tau(const TopologicalMeasure& m, const ScenePtr& scene, const AuditOptions& options)
{
    require_same_graph(m.graph(), scene->graph());
    const AdditiveFunction& nu = m.additive_function();
    TauAudit report;

    std::optional<Counterexample> from_nu;
    if (m.graph().vertex_count() <= kDefaultMaxVertices) {
        const AfValidation v = validate_af(nu);
        report.checked += v.checked;
        if (!v.passed) {
            const auto& ce = *v.counterexample;
            from_nu = Counterexample{ce.clause, "classes", vertex_names(ce.first), vertex_names(ce.second), ce.detail};
            if (ce.clause == "normalized" || ce.clause == "range") {
                report.axioms.normalized = false;
            } else if (ce.clause == "additive") {
                report.axioms.additive = false;
            } else if (ce.clause == "monotone") {
                report.axioms.monotone = false;
            } else {
                report.axioms.regular = false;
            }
        }
    }

    const SceneEnumeration en(scene, options.max_selections);
    report.enumerated = en.size();
    const Mask full = en.full();
    const std::vector<Rational> value = tau_table(nu, en);
    std::vector<std::optional<Counterexample>> found(4);
    auto record = [&](int axiom, std::string clause, Mask a, std::optional<Mask> b, std::string detail) {
        found[axiom] = Counterexample{std::move(clause), "submanifolds", en.region_ids(a),
                                      b ? en.region_ids(*b) : std::vector<std::string>{}, std::move(detail)};
    };

    ++report.checked;
    if (value[full] != 1) {
        record(0, "normalized", full, std::nullopt, "tau(whole) = " + format_rational(value[full]));
    }

    for (Mask a = 0; a <= full && !found[1]; ++a) {
        for_each_submask(full & ~a, [&](Mask extra) {
            ++report.checked;
            if (value[a] > value[a | extra]) {
                record(1, "monotone", a, a | extra,
                       format_rational(value[a]) + " > " + format_rational(value[a | extra]));
                return false;
            }
            return true;
        });
    }

    for (Mask a = 0; a <= full && !found[2]; ++a) {
        for_each_submask(full & ~(a | en.neighbours(a)), [&](Mask b) {
            ++report.checked;
            if (value[a | b] != value[a] + value[b]) {
                record(2, "additive", a, b,
                       format_rational(value[a | b]) + " != " + format_rational(value[a]) + " + "
                           + format_rational(value[b]));
                return false;
            }
            return true;
        });
    }

    for (Mask a = 0; a <= full && !found[3]; ++a) {
        ++report.checked;
        const Rational outside = af_eval(nu, en.phi(a).inversion());
        if (value[a] + outside != 1) {
            record(3, "regular", a, std::nullopt,
                   "tau + nu(complement class) = " + format_rational(value[a] + outside));
            break;
        }
        for_each_submask(full & ~(a | en.neighbours(a)), [&](Mask b) {
            ++report.checked;
            if (value[b] > outside) {
                record(3, "regular", a, b,
                       "disjoint submanifold has " + format_rational(value[b]) + " > " + format_rational(outside));
                return false;
            }
            return true;
        });
    }

    report.axioms.normalized = report.axioms.normalized && !found[0];
    report.axioms.monotone = report.axioms.monotone && !found[1];
    report.axioms.additive = report.axioms.additive && !found[2];
    report.axioms.regular = report.axioms.regular && !found[3];
    report.passed = report.axioms.normalized && report.axioms.monotone && report.axioms.additive
                    && report.axioms.regular;
    if (from_nu) {
        report.counterexample = std::move(from_nu);
    } else {
        for (auto& f : found) {
            if (f) {
                report.counterexample = std::move(f);
                break;
            }
        }
    }
    return report;
}

AdditiveFunction af_from_tau(const TopologicalMeasure& m, int max_vertices)
{
    const auto& g = m.graph();
    if (g.vertex_count() > max_vertices) {
        throw EnumerationBudgetExceeded("graph has " + std::to_string(g.vertex_count()) + " pants; capped at "
                                        + std::to_string(max_vertices));
    }
    AdditiveFunction::Table table;
    const NormalClass::Mask full = NormalClass::whole(m.additive_function().graph_ptr()).mask();
    for (NormalClass::Mask s = 0; s <= full; ++s) {
        table.emplace(s, tau(m, realize(NormalClass(m.additive_function().graph_ptr(), s))));
    }
    return AdditiveFunction::table(m.additive_function().graph_ptr(), std::move(table));
}

AffinityReport check_affinity(const AdditiveFunction& first, const AdditiveFunction& second, const Rational& lambda,
                              const ScenePtr& scene, const AuditOptions& options)
{
    require_same_graph(first.graph(), scene->graph());
    const AdditiveFunction mixed = mix(lambda, first, second);
    const SceneEnumeration en(scene, options.max_selections);
    const auto t1 = tau_table(first, en);
    const auto t2 = tau_table(second, en);
    const auto tm = tau_table(mixed, en);
    AffinityReport report;
    for (Mask a = 0; a <= en.full(); ++a) {
        ++report.checked;
        const Rational expected = lambda * t1[a] + (1 - lambda) * t2[a];
        if (tm[a] != expected) {
            report.passed = false;
            report.counterexample = Counterexample{"affine", "submanifolds", en.region_ids(a), {},
                                                   format_rational(tm[a]) + " != " + format_rational(expected)};
            break;
        }
    }
    return report;
}

} // namespace surfmeasure
