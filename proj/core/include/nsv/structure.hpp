#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsv/enumerate.hpp"
#include "nsv/model.hpp"

namespace nsv {

// Undirected co-occurrence graph over outputs: an edge joins two distinct
// outputs that appear together in some constraint.
struct ConstraintGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<int, int>> edges;   // i < j, sorted
    std::vector<std::vector<int>> components; // each sorted, ordered by minimum
};

ConstraintGraph constraint_graph(const Problem& p);

struct DiscriminationWitness {
    ConceptMapping mapping;
    Label swapped_low = 0;
    Label swapped_high = 0;
    ConceptMapping transposed;  // also a member of the solution set
};

struct DiscriminationReport {
    bool discriminative = true;
    std::optional<DiscriminationWitness> witness;
};

// A constraint set is discriminative when no transposition of two concept
// values turns one valid mapping into another. Membership is tested against
// the provided solution set, which must be exact; saturated input is refused.
DiscriminationReport check_discrimination(const Problem& p,
                                          const Enumeration& solutions);

struct AutomorphismReport {
    std::vector<Permutation> elements;  // sorted; always contains the identity
    bool is_trivial = true;
    bool is_transitive_on_solutions = false;
    // One (phi, sigma(phi)) solution pair per non-identity element, in
    // element order.
    std::vector<std::pair<ConceptMapping, ConceptMapping>> witnesses;
};

// Value permutations mapping the solution set onto itself. Requires a
// nonempty, exact set of bijective mappings; only candidates of the form
// phi' o phi0^-1 need testing, since those are the only permutations carrying
// phi0 into the set.
AutomorphismReport automorphism_group(const Enumeration& solutions);

}  // namespace nsv
