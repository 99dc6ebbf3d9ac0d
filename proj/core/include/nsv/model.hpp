#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nsv/error.hpp"

namespace nsv {

// Concept labels are plain integers; symbolic labels used by reductions are
// encoded into integers by their constructors.
using Label = int;

// A total mapping from outputs to concept labels, stored positionally:
// values[i] is the label assigned to the i-th output of the owning problem.
// Mappings order lexicographically on the value vector.
struct ConceptMapping {
    std::vector<Label> values;

    ConceptMapping() = default;
    explicit ConceptMapping(std::vector<Label> v) : values(std::move(v)) {}

    std::size_t size() const noexcept { return values.size(); }
    Label operator[](std::size_t i) const { return values[i]; }

    auto operator<=>(const ConceptMapping&) const = default;
};

enum class MappingMode { Function, Bijection };

const char* to_string(MappingMode mode) noexcept;

// ---------------------------------------------------------------------------
// Constraint kinds. Outputs are referenced by position in Problem::outputs.

struct SumTerm {
    int output = 0;
    int coefficient = 1;
    auto operator<=>(const SumTerm&) const = default;
};

// sum of coefficient * value(output) == target; repeated outputs allowed.
struct WeightedSum {
    std::vector<SumTerm> terms;
    int target = 0;
    auto operator<=>(const WeightedSum&) const = default;
};

// value(dst) == value(src) + 1  (mod modulus)
struct ModSucc {
    int src = 0;
    int dst = 0;
    int modulus = 2;
    auto operator<=>(const ModSucc&) const = default;
};

struct Pin {
    int output = 0;
    Label value = 0;
    auto operator<=>(const Pin&) const = default;
};

// value(output) is a member of `allowed` (kept sorted and unique).
struct Domain {
    int output = 0;
    std::vector<Label> allowed;
    auto operator<=>(const Domain&) const = default;
};

// Both outputs map into the two-element set {low, high}.
struct PairDomain {
    int first = 0;
    int second = 0;
    Label low = 0;
    Label high = 1;
    auto operator<=>(const PairDomain&) const = default;
};

// The tuple of values over `outputs` must be one of `rows`
// (rows kept sorted and unique, each of the same arity as `outputs`).
struct Table {
    std::vector<int> outputs;
    std::vector<std::vector<Label>> rows;
    auto operator<=>(const Table&) const = default;
};

// Conjunction of pins; the repair-library unit.
struct PinSet {
    std::vector<Pin> pins;
    auto operator<=>(const PinSet&) const = default;
};

// Satisfied when the mapping equals the intended mapping, or when at least
// one literal value(output) == value holds.
struct AltClause {
    std::vector<Pin> literals;
    auto operator<=>(const AltClause&) const = default;
};

using Constraint = std::variant<WeightedSum, ModSucc, Pin, Domain, PairDomain,
                                Table, PinSet, AltClause>;

// Distinct outputs referenced by a constraint, sorted ascending.
std::vector<int> referenced_outputs(const Constraint& c);

const char* constraint_kind_name(const Constraint& c) noexcept;

// ---------------------------------------------------------------------------
// Problem tuple: outputs, concept domain, constraints, intended mapping, and
// opaque metadata (never read by any operation).

struct Problem {
    std::vector<std::string> outputs;
    std::vector<Label> concepts;
    std::vector<Constraint> constraints;
    ConceptMapping intended;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool operator==(const Problem&) const = default;
};

// Checks all problem invariants: unique outputs and concepts, intended total
// with in-domain values, constraint references in range, per-kind shape
// rules. Throws Error(Structural) or Error(Argument).
void validate_problem(const Problem& p);

// ---------------------------------------------------------------------------
// Value permutations over a finite label set.

struct Permutation {
    // (from, to) pairs sorted by `from`; image is a permutation of the domain.
    std::vector<std::pair<Label, Label>> map;

    Label apply(Label v) const;
    bool is_identity() const noexcept;
    auto operator<=>(const Permutation&) const = default;
};

// Builds a permutation from pairs, validating bijectivity of the image over
// the domain. Throws Error(Argument) on duplicates or non-bijective images.
Permutation make_permutation(std::vector<std::pair<Label, Label>> pairs);

Permutation identity_permutation(std::span<const Label> labels);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

// ---------------------------------------------------------------------------
// Core operations.

// True iff `phi` satisfies `c`. AltClause consults `intended`; it is
// satisfied unconditionally when phi == intended.
bool evaluate_constraint(const Constraint& c, const ConceptMapping& phi,
                         const ConceptMapping& intended);

// True iff `phi` satisfies every constraint of `p` and, in Bijection mode,
// uses each concept exactly once.
bool is_valid(const Problem& p, const ConceptMapping& phi, MappingMode mode);

// Swaps the two labels everywhere they occur; an involution.
ConceptMapping apply_transposition(const ConceptMapping& phi, Label a, Label b);

// Result value at position i is sigma(phi[i]). Throws Error(Argument) when
// sigma is not total over the values of phi.
ConceptMapping compose_value_permutation(const Permutation& sigma,
                                         const ConceptMapping& phi);

bool is_bijective_over(const ConceptMapping& phi, std::span<const Label> concepts);

}  // namespace nsv
