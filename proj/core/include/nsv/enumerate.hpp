#pragma once

#include <vector>

#include "nsv/model.hpp"

namespace nsv {

// Model cap used by the CLI and the repair loop unless callers override it.
inline constexpr int kDefaultModelCap = 10000;

struct Enumeration {
    std::vector<ConceptMapping> mappings;  // canonical lexicographic order
    bool saturated = false;                // true when the cap cut off the search
};

// All valid mappings of `p` under `mode`, in lexicographic order, optionally
// excluding the intended mapping. The list is truncated at `cap`; `saturated`
// is set only when at least one further solution was confirmed to exist.
// Backtracking search over outputs in declaration order with unary domain
// pruning and forward checks on sums, successors and tables.
Enumeration enumerate_valid(const Problem& p, MappingMode mode, int cap,
                            bool exclude_intended);

enum class VerificationStatus { IntendedInvalid, ShortcutFree, ShortcutsFound };

const char* to_string(VerificationStatus status) noexcept;

struct VerificationResult {
    VerificationStatus status = VerificationStatus::ShortcutFree;
    std::vector<ConceptMapping> shortcuts;  // lexicographic, never contains intended
    bool saturated = false;
    MappingMode mode = MappingMode::Bijection;
    int cap = kDefaultModelCap;
};

// Checks the intended mapping first, then searches for alternatives.
VerificationResult verify(const Problem& p, MappingMode mode,
                          int cap = kDefaultModelCap);

struct AmbiguityMeasures {
    int multiplicity = 0;  // |solutions| - 1
    int ambiguity = 0;     // max pairwise positional disagreement
    std::vector<int> disagreement_positions;  // sorted output indices
    bool exact = true;
};

// Measures over a full solution set (the enumeration including the intended
// mapping). Throws Error(Argument) on empty input.
AmbiguityMeasures measures(const std::vector<ConceptMapping>& solutions,
                           bool saturated);

inline AmbiguityMeasures measures(const Enumeration& e) {
    return measures(e.mappings, e.saturated);
}

}  // namespace nsv
