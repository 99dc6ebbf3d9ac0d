#include "nsv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace nsv {

namespace {

using json = nlohmann::ordered_json;

json mapping_json(const ConceptMapping& phi) {
    json values = json::array();
    for (Label v : phi.values) values.push_back(v);
    return values;
}

json names_json(const Problem& p, const std::vector<int>& indices) {
    json names = json::array();
    for (int i : indices) names.push_back(p.outputs[i]);
    return names;
}

// A count with its exactness flag; saturated counts are lower bounds.
json counted(long long value, bool exact) {
    return json{{"value", value}, {"exact", exact}};
}

std::string count_text(long long value, bool exact) {
    return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

std::string mapping_text(const ConceptMapping& phi) {
    std::string out = "(";
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(phi[i]);
    }
    return out + ")";
}

json header(const char* command, const Problem& p) {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = command;
    doc["problem_digest"] = problem_digest(p);
    return doc;
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

json permutation_json(const Permutation& sigma) {
    json cycle = json::object();
    for (const auto& [from, to] : sigma.map)
        cycle[std::to_string(from)] = to;
    return cycle;
}

}  // namespace

std::string problem_digest(const Problem& p) {
    const std::string text = serialize_problem(p);
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(hash));
    return buffer;
}

std::string report_diagnostics(const std::string& source,
                               const std::vector<SourceDiagnostic>& diagnostics,
                               bool human) {
    if (human) {
        std::ostringstream out;
        for (const auto& d : diagnostics)
            out << source << ':' << d.line << ':' << d.column << ": "
                << to_string(d.kind) << ": " << d.message << '\n';
        return out.str();
    }
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "parse";
    doc["source"] = source;
    doc["diagnostics"] = json::array();
    for (const auto& d : diagnostics)
        doc["diagnostics"].push_back(json{{"line", d.line},
                                          {"column", d.column},
                                          {"kind", to_string(d.kind)},
                                          {"message", d.message}});
    return finish(doc);
}

std::string report_verify(const Problem& p, const VerificationResult& result,
                          bool human) {
    const bool exact = !result.saturated;
    if (human) {
        std::ostringstream out;
        out << "status: " << to_string(result.status) << '\n'
            << "mode: " << to_string(result.mode) << '\n';
        if (result.status == VerificationStatus::ShortcutsFound) {
            out << "shortcuts: "
                << count_text(static_cast<long long>(result.shortcuts.size()), exact)
                << '\n';
            for (const auto& phi : result.shortcuts)
                out << "  " << mapping_text(phi) << '\n';
        }
        return out.str();
    }
    json doc = header("verify", p);
    doc["mode"] = to_string(result.mode);
    doc["cap"] = result.cap;
    doc["status"] = to_string(result.status);
    doc["shortcut_count"] =
        counted(static_cast<long long>(result.shortcuts.size()), exact);
    doc["shortcuts"] = json::array();
    for (const auto& phi : result.shortcuts)
        doc["shortcuts"].push_back(mapping_json(phi));
    doc["outputs"] = json::array();
    for (const auto& name : p.outputs) doc["outputs"].push_back(name);
    return finish(doc);
}

std::string report_measures(const Problem& p, MappingMode mode, int cap,
                            const AmbiguityMeasures* m, bool saturated,
                            bool human) {
    if (human) {
        std::ostringstream out;
        out << "mode: " << to_string(mode) << '\n';
        if (!m) {
            out << "status: " << to_string(VerificationStatus::IntendedInvalid)
                << '\n';
            return out.str();
        }
        out << "multiplicity: " << count_text(m->multiplicity, m->exact) << '\n'
            << "ambiguity: " << count_text(m->ambiguity, m->exact) << '\n'
            << "disagreement:";
        for (int i : m->disagreement_positions) out << ' ' << p.outputs[i];
        out << '\n';
        return out.str();
    }
    json doc = header("measures", p);
    doc["mode"] = to_string(mode);
    doc["cap"] = cap;
    if (!m) {
        doc["status"] = to_string(VerificationStatus::IntendedInvalid);
        doc["multiplicity"] = nullptr;
        doc["ambiguity"] = nullptr;
        doc["disagreement_positions"] = nullptr;
        doc["exact"] = true;
        return finish(doc);
    }
    doc["status"] = m->multiplicity > 0
                        ? to_string(VerificationStatus::ShortcutsFound)
                        : to_string(VerificationStatus::ShortcutFree);
    doc["multiplicity"] = counted(m->multiplicity, m->exact);
    doc["ambiguity"] = counted(m->ambiguity, m->exact);
    doc["disagreement_positions"] = names_json(p, m->disagreement_positions);
    doc["exact"] = !saturated;
    return finish(doc);
}

std::string report_graph(const Problem& p, const ConstraintGraph& graph,
                         bool human) {
    if (human) {
        std::ostringstream out;
        out << "vertices: " << graph.vertex_count << '\n' << "edges:";
        for (const auto& [a, b] : graph.edges)
            out << " (" << p.outputs[a] << ',' << p.outputs[b] << ')';
        out << '\n' << "components:";
        for (const auto& comp : graph.components) {
            out << " {";
            for (std::size_t i = 0; i < comp.size(); ++i)
                out << (i ? "," : "") << p.outputs[comp[i]];
            out << '}';
        }
        out << '\n';
        return out.str();
    }
    json doc = header("graph", p);
    doc["vertices"] = json::array();
    for (const auto& name : p.outputs) doc["vertices"].push_back(name);
    doc["edges"] = json::array();
    for (const auto& [a, b] : graph.edges)
        doc["edges"].push_back(json::array({p.outputs[a], p.outputs[b]}));
    doc["components"] = json::array();
    for (const auto& comp : graph.components)
        doc["components"].push_back(names_json(p, comp));
    return finish(doc);
}

std::string report_discrimination(const Problem& p, MappingMode mode,
                                  std::size_t solution_count,
                                  const DiscriminationReport& report,
                                  bool human) {
    if (human) {
        std::ostringstream out;
        out << "discriminative: " << (report.discriminative ? "yes" : "no") << '\n';
        if (report.witness)
            out << "witness: " << mapping_text(report.witness->mapping) << " with "
                << report.witness->swapped_low << "<->"
                << report.witness->swapped_high << " -> "
                << mapping_text(report.witness->transposed) << '\n';
        return out.str();
    }
    json doc = header("discriminate", p);
    doc["mode"] = to_string(mode);
    doc["solution_count"] = static_cast<long long>(solution_count);
    doc["discriminative"] = report.discriminative;
    if (report.witness) {
        doc["witness"] = json{{"mapping", mapping_json(report.witness->mapping)},
                              {"pair", json::array({report.witness->swapped_low,
                                                    report.witness->swapped_high})},
                              {"transposed", mapping_json(report.witness->transposed)}};
    } else {
        doc["witness"] = nullptr;
    }
    return finish(doc);
}

std::string report_automorphisms(const Problem& p, std::size_t solution_count,
                                 const AutomorphismReport& report, bool human) {
    if (human) {
        std::ostringstream out;
        out << "order: " << report.elements.size() << '\n'
            << "trivial: " << (report.is_trivial ? "yes" : "no") << '\n'
            << "transitive: " << (report.is_transitive_on_solutions ? "yes" : "no")
            << '\n';
        for (const auto& sigma : report.elements) {
            out << "  ";
            for (const auto& [from, to] : sigma.map)
                out << from << "->" << to << ' ';
            out << '\n';
        }
        return out.str();
    }
    json doc = header("automorphisms", p);
    doc["solution_count"] = static_cast<long long>(solution_count);
    doc["order"] = static_cast<long long>(report.elements.size());
    doc["is_trivial"] = report.is_trivial;
    doc["is_transitive_on_solutions"] = report.is_transitive_on_solutions;
    doc["elements"] = json::array();
    for (const auto& sigma : report.elements)
        doc["elements"].push_back(permutation_json(sigma));
    doc["witnesses"] = json::array();
    for (const auto& [phi, image] : report.witnesses)
        doc["witnesses"].push_back(
            json{{"mapping", mapping_json(phi)}, {"image", mapping_json(image)}});
    return finish(doc);
}

std::string report_repair(const Problem& p, const RepairTrace& trace,
                          const std::string& strategy,
                          std::optional<std::uint64_t> seed, bool human) {
    if (human) {
        std::ostringstream out;
        out << "outcome: " << to_string(trace.outcome) << '\n'
            << "constraints added: " << trace.constraints_added << '\n'
            << "verification calls: " << trace.verification_calls << '\n';
        for (const auto& it : trace.iterations)
            out << "  shortcut " << mapping_text(it.detected_shortcut) << " -> pin "
                << p.outputs[it.added.output] << " = " << it.added.value << '\n';
        return out.str();
    }
    json doc = header("repair", p);
    doc["strategy"] = strategy;
    if (seed)
        doc["seed"] = *seed;
    else
        doc["seed"] = nullptr;
    doc["outcome"] = to_string(trace.outcome);
    doc["constraints_added"] = trace.constraints_added;
    doc["verification_calls"] = trace.verification_calls;
    doc["exact"] = trace.exact;
    doc["iterations"] = json::array();
    for (const auto& it : trace.iterations) {
        doc["iterations"].push_back(
            json{{"detected_shortcut", mapping_json(it.detected_shortcut)},
                 {"disagreement", names_json(p, it.disagreement_positions)},
                 {"pin", json{{"output", p.outputs[it.added.output]},
                              {"value", it.added.value}}}});
    }
    doc["final_constraint_count"] =
        static_cast<long long>(trace.final_constraints.size());
    return finish(doc);
}

std::string report_queries(const Problem& p, const QueryTrace& trace,
                           std::optional<std::uint64_t> seed, bool human) {
    if (human) {
        std::ostringstream out;
        out << "strategy: " << to_string(trace.strategy) << '\n'
            << "identified: " << (trace.identified ? "yes" : "no") << '\n'
            << "queries: " << trace.queries.size() << " (bounds " << trace.bounds.lower
            << ".." << trace.bounds.upper << ")\n";
        for (const auto& q : trace.queries)
            out << "  " << p.outputs[q.position] << " = " << q.answer << "  ("
                << q.candidates_before << " -> " << q.candidates_after << ")\n";
        return out.str();
    }
    json doc = header("queries", p);
    doc["strategy"] = to_string(trace.strategy);
    if (seed)
        doc["seed"] = *seed;
    else
        doc["seed"] = nullptr;
    doc["identified"] = trace.identified;
    doc["query_count"] = static_cast<long long>(trace.queries.size());
    doc["bounds"] =
        json{{"lower", trace.bounds.lower}, {"upper", trace.bounds.upper}};
    doc["queries"] = json::array();
    for (const auto& q : trace.queries)
        doc["queries"].push_back(json{{"position", p.outputs[q.position]},
                                      {"answer", q.answer},
                                      {"candidates_before", q.candidates_before},
                                      {"candidates_after", q.candidates_after}});
    doc["survivor"] = mapping_json(trace.survivor);
    return finish(doc);
}

std::string report_reduce_cnf(const CnfFormula& formula, const Problem& p,
                              const VerificationResult& result,
                              long long sharp_sat_count, bool human) {
    const bool exact = !result.saturated;
    const long long sm = static_cast<long long>(result.shortcuts.size());
    if (human) {
        std::ostringstream out;
        out << "variables: " << formula.num_vars << '\n'
            << "clauses: " << formula.clauses.size() << '\n'
            << "bijective multiplicity: " << count_text(sm, exact) << '\n'
            << "model count: " << sharp_sat_count << '\n'
            << "agreement: " << (exact && sm == sharp_sat_count ? "yes" : "no")
            << '\n';
        return out.str();
    }
    json doc = header("reduce-cnf", p);
    doc["variables"] = formula.num_vars;
    doc["clauses"] = static_cast<long long>(formula.clauses.size());
    doc["multiplicity"] = counted(sm, exact);
    doc["sharp_sat"] = sharp_sat_count;
    doc["agreement"] = exact && sm == sharp_sat_count;
    return finish(doc);
}

std::string report_reduce_setcover(
    const SetCoverInstance& instance, const RepairProblem& reduction,
    int budget, const std::optional<std::vector<std::size_t>>& repair,
    const std::optional<int>& min_cover, bool human) {
    const bool repair_size_matches =
        (repair.has_value() == min_cover.has_value()) &&
        (!repair || static_cast<int>(repair->size()) == *min_cover);
    if (human) {
        std::ostringstream out;
        out << "universe: " << instance.universe.size() << '\n'
            << "sets: " << instance.sets.size() << '\n'
            << "minimal repair: "
            << (repair ? std::to_string(repair->size()) : std::string("none"))
            << '\n'
            << "minimum cover: "
            << (min_cover ? std::to_string(*min_cover) : std::string("none"))
            << '\n'
            << "agreement: " << (repair_size_matches ? "yes" : "no") << '\n';
        return out.str();
    }
    json doc = header("reduce-setcover", reduction.problem);
    doc["universe_size"] = static_cast<long long>(instance.universe.size());
    doc["set_count"] = static_cast<long long>(instance.sets.size());
    doc["budget"] = budget;
    if (repair) {
        json indices = json::array();
        for (std::size_t i : *repair) indices.push_back(static_cast<long long>(i));
        doc["minimal_repair"] = json{{"size", static_cast<long long>(repair->size())},
                                     {"sets", indices}};
    } else {
        doc["minimal_repair"] = nullptr;
    }
    if (min_cover)
        doc["min_cover"] = *min_cover;
    else
        doc["min_cover"] = nullptr;
    doc["agreement"] = repair_size_matches;
    return finish(doc);
}

std::string report_fixture(const NamedFixture& fixture, bool human) {
    if (human) return serialize_problem(fixture.problem);
    json doc = header("fixture", fixture.problem);
    doc["name"] = fixture.name;
    doc["nsl"] = serialize_problem(fixture.problem);
    doc["expected"] = json::array();
    for (const auto& e : fixture.expected)
        doc["expected"].push_back(json{{"mode", to_string(e.mode)},
                                       {"multiplicity", e.multiplicity},
                                       {"exact", e.exact}});
    return finish(doc);
}

}  // namespace nsv
