#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsv/enumerate.hpp"
#include "nsv/fixtures.hpp"
#include "nsv/model.hpp"
#include "nsv/parser.hpp"
#include "nsv/query.hpp"
#include "nsv/reductions.hpp"
#include "nsv/repair.hpp"
#include "nsv/structure.hpp"

namespace nsv {

inline constexpr const char* kReportSchemaVersion = "1";

// Stable content hash (FNV-1a 64, hex) of the canonical serialization.
std::string problem_digest(const Problem& p);

// Report builders produce the final document text: versioned JSON with fixed
// field order, or an aligned human rendering. Saturated counts are never
// presented as exact; they render as ">= cap".
std::string report_diagnostics(const std::string& source,
                               const std::vector<SourceDiagnostic>& diagnostics,
                               bool human);
std::string report_verify(const Problem& p, const VerificationResult& result,
                          bool human);
// `m` may be null when the intended mapping is invalid and no measures exist.
std::string report_measures(const Problem& p, MappingMode mode, int cap,
                            const AmbiguityMeasures* m, bool saturated,
                            bool human);
std::string report_graph(const Problem& p, const ConstraintGraph& graph,
                         bool human);
std::string report_discrimination(const Problem& p, MappingMode mode,
                                  std::size_t solution_count,
                                  const DiscriminationReport& report, bool human);
std::string report_automorphisms(const Problem& p, std::size_t solution_count,
                                 const AutomorphismReport& report, bool human);
std::string report_repair(const Problem& p, const RepairTrace& trace,
                          const std::string& strategy,
                          std::optional<std::uint64_t> seed, bool human);
std::string report_queries(const Problem& p, const QueryTrace& trace,
                           std::optional<std::uint64_t> seed, bool human);
std::string report_reduce_cnf(const CnfFormula& formula, const Problem& p,
                              const VerificationResult& result,
                              long long sharp_sat_count, bool human);
std::string report_reduce_setcover(
    const SetCoverInstance& instance, const RepairProblem& reduction,
    int budget, const std::optional<std::vector<std::size_t>>& repair,
    const std::optional<int>& min_cover, bool human);
std::string report_fixture(const NamedFixture& fixture, bool human);

}  // namespace nsv
