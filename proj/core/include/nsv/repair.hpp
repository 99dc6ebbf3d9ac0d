#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsv/enumerate.hpp"
#include "nsv/model.hpp"

namespace nsv {

enum class RepairOutcome { Repaired, Timeout, IntendedInvalid };

const char* to_string(RepairOutcome outcome) noexcept;

struct RepairIteration {
    ConceptMapping detected_shortcut;
    std::vector<int> disagreement_positions;  // sorted output indices
    Pin added;
};

struct RepairTrace {
    std::vector<RepairIteration> iterations;
    std::vector<Constraint> final_constraints;
    int constraints_added = 0;
    int verification_calls = 0;
    RepairOutcome outcome = RepairOutcome::Repaired;
    bool exact = true;  // false when any verification saturated at the cap
};

// Greedy pinning: repeatedly verify, take the lexicographically smallest
// shortcut, pin the smallest-index disagreeing output to its intended value.
// Stops with Timeout after `max_iterations` constraint-adding rounds.
RepairTrace greedy_repair(const Problem& p, MappingMode mode, int max_iterations,
                          int cap = kDefaultModelCap);

// Same loop with shortcut and position drawn uniformly via an mt19937_64
// stream; reproducible per seed.
RepairTrace random_repair(const Problem& p, MappingMode mode, int max_iterations,
                          std::uint64_t seed, int cap = kDefaultModelCap);

// Smallest subset of the pinning library (by cardinality, then by index
// order) whose addition leaves the intended mapping as the unique valid one,
// or nullopt when no subset within `budget` works. Guarded against search
// spaces above 10^6 subsets.
std::optional<std::vector<std::size_t>> minimal_repair_bruteforce(
    const Problem& p, const std::vector<PinSet>& library, int budget,
    MappingMode mode);

}  // namespace nsv
