#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsv/model.hpp"
#include "nsv/repair.hpp"

namespace nsv {

// CNF over variables 1..num_vars; literals in DIMACS convention (negative
// means negated, never zero).
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Executable form of the UNSAT/#SAT reduction: a fresh variable y extends
// the formula to psi' = psi AND NOT y, each variable contributes a positive
// and a negated output restricted to its own true/false label pair, the
// intended mapping encodes the all-true assignment, and every clause of psi'
// becomes an AltClause. Bijective shortcut multiplicity of the result equals
// the model count of psi.
Problem cnf_to_nsl(const CnfFormula& formula);

// Exhaustive model count; guard: at most 20 variables.
long long brute_force_sharp_sat(const CnfFormula& formula);

// Accepts the DIMACS subset: optional 'c' comment lines, one 'p cnf V C'
// header, clauses as nonzero integers terminated by 0 (possibly spanning
// lines). Throws Error(Argument) on malformed input.
CnfFormula parse_dimacs(const std::string& text);

struct SetCoverInstance {
    std::vector<std::string> universe;            // identifier-shaped, unique
    std::vector<std::vector<std::string>> sets;   // nonempty subsets of universe
};

struct RepairProblem {
    Problem problem;
    std::vector<PinSet> library;  // one pinning set per cover set
};

// Executable form of the minimal-repair hardness construction: one output
// per universe element, identity intended mapping, no initial constraints,
// and a library pinning exactly the members of each set. Evaluated in
// Function mode; minimal repair size equals minimum cover size.
RepairProblem setcover_to_repair(const SetCoverInstance& instance);

// Minimum number of sets covering the universe, or nullopt when uncoverable.
// Guard: at most 20 sets.
std::optional<int> brute_force_min_cover(const SetCoverInstance& instance);

}  // namespace nsv
