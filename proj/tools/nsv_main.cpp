// nsv — shortcut verification and repair for constraint-based concept
// mappings. Subcommands read .nsl problem files (or DIMACS / set-cover JSON
// for the reductions) and print a JSON report; --human switches to plain
// text. Exit codes: 0 shortcut-free / repaired / identified, 1 shortcuts
// found or timeout, 2 intended mapping invalid, 3 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsv/asp_export.hpp"
#include "nsv/enumerate.hpp"
#include "nsv/error.hpp"
#include "nsv/fixtures.hpp"
#include "nsv/parser.hpp"
#include "nsv/query.hpp"
#include "nsv/reductions.hpp"
#include "nsv/repair.hpp"
#include "nsv/report.hpp"
#include "nsv/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitShortcuts = 1;
constexpr int kExitIntendedInvalid = 2;
constexpr int kExitUsage = 3;

struct UsageError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nsv::Problem load_problem(const std::string& path, bool human) {
    nsv::ParseResult parsed = nsv::parse_problem(read_file(path));
    if (!parsed.ok()) {
        std::cout << nsv::report_diagnostics(path, parsed.diagnostics, human);
        throw UsageError{""};
    }
    return std::move(*parsed.problem);
}

nsv::MappingMode parse_mode(const std::string& mode) {
    if (mode == "fn" || mode == "function") return nsv::MappingMode::Function;
    if (mode == "bij" || mode == "bijection") return nsv::MappingMode::Bijection;
    throw UsageError{"unknown mode '" + mode + "' (expected fn or bij)"};
}

int status_exit(nsv::VerificationStatus status) {
    switch (status) {
        case nsv::VerificationStatus::ShortcutFree: return kExitOk;
        case nsv::VerificationStatus::ShortcutsFound: return kExitShortcuts;
        case nsv::VerificationStatus::IntendedInvalid: return kExitIntendedInvalid;
    }
    return kExitUsage;
}

// Exact enumeration or a usage error; analyses built on solution sets are
// unsound over truncated enumerations.
nsv::Enumeration exact_enumeration(const nsv::Problem& p, nsv::MappingMode mode,
                                   int cap, bool exclude_intended) {
    nsv::Enumeration e = nsv::enumerate_valid(p, mode, cap, exclude_intended);
    if (e.saturated)
        throw UsageError{
            "enumeration hit the model cap; rerun with a larger --cap"};
    return e;
}

nsv::SetCoverInstance load_setcover(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError{std::string("invalid set-cover JSON: ") + e.what()};
    }
    nsv::SetCoverInstance instance;
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets"))
        throw UsageError{
            "set-cover input must be an object with 'universe' and 'sets'"};
    for (const auto& e : doc["universe"])
        instance.universe.push_back(e.get<std::string>());
    for (const auto& set : doc["sets"]) {
        std::vector<std::string> members;
        for (const auto& e : set) members.push_back(e.get<std::string>());
        instance.sets.push_back(std::move(members));
    }
    return instance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortcut verification and repair for concept-mapping "
                 "constraint sets"};
    app.require_subcommand(1);

    std::string file;
    std::string mode_name = "bij";
    int cap = nsv::kDefaultModelCap;
    bool human = false;
    std::string strategy = "greedy";
    std::uint64_t seed = 0;
    int iterations = 100;
    int budget = -1;
    bool include_intended = false;
    std::string fixture_name;

    auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
        cmd->add_option("file", file, "problem file (.nsl)")->required();
        if (with_mode)
            cmd->add_option("--mode", mode_name, "mapping mode: fn or bij");
        cmd->add_option("--cap", cap, "model cap for enumeration");
        cmd->add_flag("--human", human, "plain-text output instead of JSON");
    };

    auto* cmd_verify = app.add_subcommand("verify", "detect shortcuts");
    add_common(cmd_verify);

    auto* cmd_measures =
        app.add_subcommand("measures", "multiplicity and ambiguity measures");
    add_common(cmd_measures);

    auto* cmd_graph = app.add_subcommand("graph", "constraint graph and components");
    cmd_graph->add_option("file", file, "problem file (.nsl)")->required();
    cmd_graph->add_flag("--human", human, "plain-text output instead of JSON");

    auto* cmd_discriminate =
        app.add_subcommand("discriminate", "check the discrimination property");
    add_common(cmd_discriminate);

    auto* cmd_automorphisms = app.add_subcommand(
        "automorphisms", "value-permutation group of the bijective solutions");
    cmd_automorphisms->add_option("file", file, "problem file (.nsl)")->required();
    cmd_automorphisms->add_option("--cap", cap, "model cap for enumeration");
    cmd_automorphisms->add_flag("--human", human,
                                "plain-text output instead of JSON");

    auto* cmd_repair = app.add_subcommand("repair", "eliminate shortcuts by pinning");
    add_common(cmd_repair);
    cmd_repair->add_option("--strategy", strategy, "greedy or random");
    cmd_repair->add_option("--seed", seed, "seed for the random strategy");
    cmd_repair->add_option("--T,--iterations", iterations,
                           "maximum constraint-adding iterations");

    auto* cmd_queries =
        app.add_subcommand("queries", "simulate label-query disambiguation");
    add_common(cmd_queries);
    cmd_queries->add_option("--strategy", strategy,
                            "u(ncertainty), g(reedy) or r(andom)")
        ->required();
    cmd_queries->add_option("--seed", seed, "seed for the random strategy");

    auto* cmd_reduce_cnf =
        app.add_subcommand("reduce-cnf", "CNF-to-problem reduction check");
    cmd_reduce_cnf->add_option("file", file, "DIMACS CNF file")->required();
    cmd_reduce_cnf->add_option("--cap", cap, "model cap for enumeration");
    cmd_reduce_cnf->add_flag("--human", human, "plain-text output instead of JSON");

    auto* cmd_reduce_setcover = app.add_subcommand(
        "reduce-setcover", "set-cover-to-repair reduction check");
    cmd_reduce_setcover->add_option("file", file, "set-cover JSON file")->required();
    cmd_reduce_setcover->add_option("--budget", budget,
                                    "repair budget (default: number of sets)");
    cmd_reduce_setcover->add_flag("--human", human,
                                  "plain-text output instead of JSON");

    auto* cmd_export = app.add_subcommand("export-asp", "emit an answer-set program");
    cmd_export->add_option("file", file, "problem file (.nsl)")->required();
    cmd_export->add_option("--mode", mode_name, "mapping mode: fn or bij");
    cmd_export->add_flag("--include-intended", include_intended,
                         "keep the intended mapping in the answer sets");

    auto* cmd_fixture = app.add_subcommand("fixture", "print a built-in problem");
    cmd_fixture->add_option("name", fixture_name, "fixture name")->required();
    cmd_fixture->add_flag("--human", human, "print the .nsl text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_verify) {
            nsv::Problem p = load_problem(file, human);
            nsv::VerificationResult result =
                nsv::verify(p, parse_mode(mode_name), cap);
            std::cout << nsv::report_verify(p, result, human);
            return status_exit(result.status);
        }

        if (*cmd_measures) {
            nsv::Problem p = load_problem(file, human);
            const nsv::MappingMode mode = parse_mode(mode_name);
            if (!nsv::is_valid(p, p.intended, mode)) {
                std::cout << nsv::report_measures(p, mode, cap, nullptr, false,
                                                  human);
                return kExitIntendedInvalid;
            }
            nsv::Enumeration e = nsv::enumerate_valid(p, mode, cap, false);
            nsv::AmbiguityMeasures m = nsv::measures(e);
            std::cout << nsv::report_measures(p, mode, cap, &m, e.saturated, human);
            return m.multiplicity > 0 ? kExitShortcuts : kExitOk;
        }

        if (*cmd_graph) {
            nsv::Problem p = load_problem(file, human);
            std::cout << nsv::report_graph(p, nsv::constraint_graph(p), human);
            return kExitOk;
        }

        if (*cmd_discriminate) {
            nsv::Problem p = load_problem(file, human);
            nsv::Enumeration e =
                exact_enumeration(p, parse_mode(mode_name), cap, false);
            nsv::DiscriminationReport report = nsv::check_discrimination(p, e);
            std::cout << nsv::report_discrimination(p, parse_mode(mode_name),
                                                    e.mappings.size(), report,
                                                    human);
            return kExitOk;
        }

        if (*cmd_automorphisms) {
            nsv::Problem p = load_problem(file, human);
            nsv::Enumeration e =
                exact_enumeration(p, nsv::MappingMode::Bijection, cap, false);
            nsv::AutomorphismReport report = nsv::automorphism_group(e);
            std::cout << nsv::report_automorphisms(p, e.mappings.size(), report,
                                                   human);
            return kExitOk;
        }

        if (*cmd_repair) {
            nsv::Problem p = load_problem(file, human);
            const nsv::MappingMode mode = parse_mode(mode_name);
            nsv::RepairTrace trace;
            std::optional<std::uint64_t> used_seed;
            if (strategy == "greedy") {
                trace = nsv::greedy_repair(p, mode, iterations, cap);
            } else if (strategy == "random") {
                trace = nsv::random_repair(p, mode, iterations, seed, cap);
                used_seed = seed;
            } else {
                throw UsageError{"unknown repair strategy '" + strategy + "'"};
            }
            std::cout << nsv::report_repair(p, trace, strategy, used_seed, human);
            switch (trace.outcome) {
                case nsv::RepairOutcome::Repaired: return kExitOk;
                case nsv::RepairOutcome::Timeout: return kExitShortcuts;
                case nsv::RepairOutcome::IntendedInvalid:
                    return kExitIntendedInvalid;
            }
        }

        if (*cmd_queries) {
            nsv::Problem p = load_problem(file, human);
            const nsv::MappingMode mode = parse_mode(mode_name);
            nsv::QueryStrategy qs;
            if (strategy == "u" || strategy == "uncertainty")
                qs = nsv::QueryStrategy::Uncertainty;
            else if (strategy == "g" || strategy == "greedy")
                qs = nsv::QueryStrategy::GreedyDisambiguation;
            else if (strategy == "r" || strategy == "random")
                qs = nsv::QueryStrategy::Random;
            else
                throw UsageError{"unknown query strategy '" + strategy + "'"};
            nsv::Enumeration e = exact_enumeration(p, mode, cap, false);
            nsv::QueryTrace trace =
                nsv::run_strategy(e.mappings, p.intended, qs, seed,
                                  static_cast<int>(p.concepts.size()));
            std::optional<std::uint64_t> used_seed;
            if (qs == nsv::QueryStrategy::Random) used_seed = seed;
            std::cout << nsv::report_queries(p, trace, used_seed, human);
            return trace.identified ? kExitOk : kExitShortcuts;
        }

        if (*cmd_reduce_cnf) {
            nsv::CnfFormula formula = nsv::parse_dimacs(read_file(file));
            nsv::Problem p = nsv::cnf_to_nsl(formula);
            nsv::VerificationResult result =
                nsv::verify(p, nsv::MappingMode::Bijection, cap);
            const long long sharp = nsv::brute_force_sharp_sat(formula);
            std::cout << nsv::report_reduce_cnf(formula, p, result, sharp, human);
            const bool agree = !result.saturated &&
                               static_cast<long long>(result.shortcuts.size()) ==
                                   sharp;
            return agree ? kExitOk : kExitShortcuts;
        }

        if (*cmd_reduce_setcover) {
            nsv::SetCoverInstance instance = load_setcover(file);
            nsv::RepairProblem reduction = nsv::setcover_to_repair(instance);
            const int effective_budget =
                budget >= 0 ? budget : static_cast<int>(reduction.library.size());
            std::optional<std::vector<std::size_t>> repair =
                nsv::minimal_repair_bruteforce(reduction.problem, reduction.library,
                                               effective_budget,
                                               nsv::MappingMode::Function);
            std::optional<int> cover = nsv::brute_force_min_cover(instance);
            std::cout << nsv::report_reduce_setcover(instance, reduction,
                                                     effective_budget, repair,
                                                     cover, human);
            const bool agree =
                (repair.has_value() == cover.has_value()) &&
                (!repair || static_cast<int>(repair->size()) == *cover);
            return agree ? kExitOk : kExitShortcuts;
        }

        if (*cmd_export) {
            nsv::Problem p = load_problem(file, human);
            std::cout << nsv::export_asp(p, parse_mode(mode_name),
                                         !include_intended);
            return kExitOk;
        }

        if (*cmd_fixture) {
            nsv::NamedFixture f = nsv::fixture(fixture_name);
            std::cout << nsv::report_fixture(f, human);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        if (!e.message.empty()) std::cerr << "error: " << e.message << '\n';
        return kExitUsage;
    } catch (const nsv::Error& e) {
        std::cerr << "error (" << nsv::to_string(e.kind()) << "): " << e.what()
                  << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
