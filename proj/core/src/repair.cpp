#include "nsv/repair.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace nsv {

const char* to_string(RepairOutcome outcome) noexcept {
    switch (outcome) {
        case RepairOutcome::Repaired: return "repaired";
        case RepairOutcome::Timeout: return "timeout";
        case RepairOutcome::IntendedInvalid: return "intended-invalid";
    }
    return "unknown";
}

namespace {

std::vector<int> disagreement(const ConceptMapping& intended,
                              const ConceptMapping& shortcut) {
    std::vector<int> positions;
    for (std::size_t i = 0; i < intended.size(); ++i)
        if (intended[i] != shortcut[i]) positions.push_back(static_cast<int>(i));
    return positions;
}

// Shared loop. The pickers choose a shortcut index and a disagreement index;
// greedy always picks index 0 because the enumeration is already in
// lexicographic order.
RepairTrace run_repair(const Problem& p, MappingMode mode, int max_iterations,
                       int cap,
                       const std::function<std::size_t(std::size_t)>& pick_shortcut,
                       const std::function<std::size_t(std::size_t)>& pick_position) {
    if (max_iterations < 0)
        fail(ErrorKind::Argument, "iteration limit must be nonnegative");

    Problem working = p;
    RepairTrace trace;
    while (true) {
        VerificationResult result = verify(working, mode, cap);
        ++trace.verification_calls;
        trace.exact = trace.exact && !result.saturated;
        if (result.status == VerificationStatus::IntendedInvalid) {
            trace.outcome = RepairOutcome::IntendedInvalid;
            break;
        }
        if (result.status == VerificationStatus::ShortcutFree) {
            trace.outcome = RepairOutcome::Repaired;
            break;
        }
        if (trace.constraints_added >= max_iterations) {
            trace.outcome = RepairOutcome::Timeout;
            break;
        }

        const ConceptMapping& shortcut =
            result.shortcuts[pick_shortcut(result.shortcuts.size())];
        std::vector<int> positions = disagreement(working.intended, shortcut);
        const int target = positions[pick_position(positions.size())];
        Pin pin{target, working.intended[target]};
        working.constraints.emplace_back(pin);
        trace.iterations.push_back({shortcut, std::move(positions), pin});
        ++trace.constraints_added;
    }
    trace.final_constraints = std::move(working.constraints);
    return trace;
}

}  // namespace

RepairTrace greedy_repair(const Problem& p, MappingMode mode, int max_iterations,
                          int cap) {
    auto first = [](std::size_t) -> std::size_t { return 0; };
    return run_repair(p, mode, max_iterations, cap, first, first);
}

RepairTrace random_repair(const Problem& p, MappingMode mode, int max_iterations,
                          std::uint64_t seed, int cap) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::size_t n) -> std::size_t {
        return static_cast<std::size_t>(rng() % n);
    };
    return run_repair(p, mode, max_iterations, cap, draw, draw);
}

std::optional<std::vector<std::size_t>> minimal_repair_bruteforce(
    const Problem& p, const std::vector<PinSet>& library, int budget,
    MappingMode mode) {
    if (budget < 0) fail(ErrorKind::Argument, "repair budget must be nonnegative");
    validate_problem(p);
    for (const auto& set : library)
        for (const auto& pin : set.pins)
            if (pin.output < 0 ||
                static_cast<std::size_t>(pin.output) >= p.outputs.size())
                fail(ErrorKind::Structural,
                     "library pin references an output outside the problem");

    const std::size_t count = library.size();
    const int max_size = std::min<int>(budget, static_cast<int>(count));

    double space = 0.0;
    {
        double binom = 1.0;  // C(count, 0)
        for (int j = 0; j <= max_size; ++j) {
            space += binom;
            binom = binom * static_cast<double>(count - j) / (j + 1);
        }
    }
    if (space > 1e6)
        fail(ErrorKind::Resource,
             "minimal repair search space exceeds 10^6 subsets");

    auto shortcut_free = [&](const std::vector<std::size_t>& subset) {
        Problem candidate = p;
        for (std::size_t idx : subset) candidate.constraints.emplace_back(library[idx]);
        if (!is_valid(candidate, candidate.intended, mode)) return false;
        return enumerate_valid(candidate, mode, 1, /*exclude=*/true)
            .mappings.empty();
    };

    for (int size = 0; size <= max_size; ++size) {
        std::vector<std::size_t> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = static_cast<std::size_t>(i);
        while (true) {
            if (shortcut_free(subset)) return subset;
            // Next combination in lexicographic index order.
            int i = size - 1;
            while (i >= 0 && subset[i] == count - static_cast<std::size_t>(size - i))
                --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace nsv
