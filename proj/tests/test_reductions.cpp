#include <doctest.h>

#include <algorithm>

#include "nsv/enumerate.hpp"
#include "nsv/parser.hpp"
#include "nsv/reductions.hpp"
#include "nsv/repair.hpp"
#include "testgen.hpp"

using namespace nsv;

namespace {

long long bijective_multiplicity(const Problem& p) {
    VerificationResult r = verify(p, MappingMode::Bijection, 1000000);
    REQUIRE(r.status != VerificationStatus::IntendedInvalid);
    REQUIRE_FALSE(r.saturated);
    return static_cast<long long>(r.shortcuts.size());
}

CnfFormula random_cnf(nsvtest::Rng& rng) {
    CnfFormula f;
    f.num_vars = rng.range(1, 4);
    const int clauses = rng.range(0, 5);
    for (int i = 0; i < clauses; ++i) {
        std::vector<int> clause;
        const int width = rng.range(1, 3);
        for (int j = 0; j < width; ++j) {
            int var = rng.range(1, f.num_vars);
            clause.push_back(rng.coin() ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

SetCoverInstance random_cover(nsvtest::Rng& rng) {
    SetCoverInstance inst;
    const int n = rng.range(2, 5);
    for (int i = 1; i <= n; ++i) inst.universe.push_back("u" + std::to_string(i));
    const int sets = rng.range(1, 6);
    for (int i = 0; i < sets; ++i) {
        std::set<std::string> members;
        const int size = rng.range(1, n);
        for (int j = 0; j < size; ++j) members.insert(rng.pick(inst.universe));
        inst.sets.emplace_back(members.begin(), members.end());
    }
    return inst;
}

}  // namespace

TEST_CASE("the exhaustive model counter is exact on the fixed formulas") {
    CHECK(brute_force_sharp_sat(CnfFormula{2, {{1, 2}}}) == 3);
    CHECK(brute_force_sharp_sat(CnfFormula{1, {{1}, {-1}}}) == 0);
    CHECK(brute_force_sharp_sat(CnfFormula{2, {}}) == 4);  // vacuous truth
    CHECK(brute_force_sharp_sat(CnfFormula{1, {{1}}}) == 1);

    CHECK_THROWS_AS(brute_force_sharp_sat(CnfFormula{21, {}}), Error);
    CHECK_THROWS_AS(brute_force_sharp_sat(CnfFormula{2, {{}}}), Error);
    CHECK_THROWS_AS(brute_force_sharp_sat(CnfFormula{2, {{3}}}), Error);
}

TEST_CASE("the CNF reduction reproduces the fixed counts") {
    // unsatisfiable formula: shortcut-free
    Problem contradiction = cnf_to_nsl(CnfFormula{1, {{1}, {-1}}});
    CHECK(verify(contradiction, MappingMode::Bijection).status ==
          VerificationStatus::ShortcutFree);

    // (x1 or x2): three models, three shortcuts
    CHECK(bijective_multiplicity(cnf_to_nsl(CnfFormula{2, {{1, 2}}})) == 3);

    // (x1): one model
    CHECK(bijective_multiplicity(cnf_to_nsl(CnfFormula{1, {{1}}})) == 1);
}

TEST_CASE("reduced problems keep the intended mapping valid by the alt guard") {
    nsvtest::Rng rng(67);
    for (int round = 0; round < 25; ++round) {
        const CnfFormula f = random_cnf(rng);
        const Problem p = cnf_to_nsl(f);
        CHECK(is_valid(p, p.intended, MappingMode::Bijection));
        CHECK(p.outputs.size() == 2u * (f.num_vars + 1));
        CHECK(p.concepts.size() == p.outputs.size());
    }
}

TEST_CASE("bijective multiplicity equals the model count on random formulas") {
    nsvtest::Rng rng(71);
    for (int round = 0; round < 25; ++round) {
        const CnfFormula f = random_cnf(rng);
        CHECK(bijective_multiplicity(cnf_to_nsl(f)) == brute_force_sharp_sat(f));
    }
}

TEST_CASE("reduced problems serialize through the DSL") {
    const Problem p = cnf_to_nsl(CnfFormula{2, {{1, -2}}});
    ParseResult r = parse_problem(serialize_problem(p));
    REQUIRE(r.ok());
    CHECK(*r.problem == p);
}

TEST_CASE("DIMACS parsing accepts the documented subset") {
    const std::string text =
        "c a comment\n"
        "p cnf 3 2\n"
        "1 -2 0\n"
        "2 3 0\n";
    CnfFormula f = parse_dimacs(text);
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2});
    CHECK(f.clauses[1] == std::vector<int>{2, 3});

    // clauses may span lines
    CnfFormula split = parse_dimacs("p cnf 2 1\n1\n2 0\n");
    REQUIRE(split.clauses.size() == 1);
    CHECK(split.clauses[0] == std::vector<int>{1, 2});

    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);             // missing header
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), Error);  // out of range
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), Error);    // count mismatch
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), Error);    // unterminated
}

TEST_CASE("the set-cover reduction matches the worked instance") {
    SetCoverInstance inst;
    inst.universe = {"u1", "u2", "u3"};
    inst.sets = {{"u1", "u2"}, {"u2", "u3"}, {"u3"}};

    RepairProblem reduction = setcover_to_repair(inst);
    CHECK(reduction.problem.outputs == std::vector<std::string>{"u1", "u2", "u3"});
    CHECK(reduction.problem.constraints.empty());
    CHECK(reduction.problem.intended == ConceptMapping{{0, 1, 2}});
    REQUIRE(reduction.library.size() == 3);

    auto repair = minimal_repair_bruteforce(reduction.problem, reduction.library,
                                            3, MappingMode::Function);
    REQUIRE(repair.has_value());
    CHECK(static_cast<int>(repair->size()) == *brute_force_min_cover(inst));
}

TEST_CASE("a single covering set repairs alone; uncovered elements never repair") {
    SetCoverInstance whole;
    whole.universe = {"a", "b"};
    whole.sets = {{"a", "b"}};
    RepairProblem r1 = setcover_to_repair(whole);
    auto repair = minimal_repair_bruteforce(r1.problem, r1.library, 1,
                                            MappingMode::Function);
    REQUIRE(repair.has_value());
    CHECK(repair->size() == 1);
    CHECK(brute_force_min_cover(whole) == 1);

    SetCoverInstance uncovered;
    uncovered.universe = {"a", "b"};
    uncovered.sets = {{"a"}};
    RepairProblem r2 = setcover_to_repair(uncovered);
    CHECK_FALSE(minimal_repair_bruteforce(r2.problem, r2.library, 1,
                                          MappingMode::Function)
                    .has_value());
    CHECK_FALSE(brute_force_min_cover(uncovered).has_value());

    SetCoverInstance empty;
    empty.universe = {"a", "b"};
    CHECK_FALSE(brute_force_min_cover(empty).has_value());
}

TEST_CASE("degenerate cover instances are argument errors") {
    SetCoverInstance singleton;
    singleton.universe = {"a"};
    CHECK_THROWS_AS(setcover_to_repair(singleton), Error);

    SetCoverInstance stray;
    stray.universe = {"a", "b"};
    stray.sets = {{"c"}};
    CHECK_THROWS_AS(setcover_to_repair(stray), Error);
}

TEST_CASE("minimal repair size equals minimum cover size on random instances") {
    nsvtest::Rng rng(73);
    int infeasible_seen = 0;
    for (int round = 0; round < 15; ++round) {
        const SetCoverInstance inst = random_cover(rng);
        RepairProblem reduction = setcover_to_repair(inst);
        auto repair = minimal_repair_bruteforce(
            reduction.problem, reduction.library,
            static_cast<int>(reduction.library.size()), MappingMode::Function);
        auto cover = brute_force_min_cover(inst);
        CHECK(repair.has_value() == cover.has_value());
        if (repair)
            CHECK(static_cast<int>(repair->size()) == *cover);
        else
            ++infeasible_seen;
    }
    // both joint-absence and agreement paths exercised
    CHECK(infeasible_seen >= 1);
}
