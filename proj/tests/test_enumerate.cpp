#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <thread>

#include "nsv/enumerate.hpp"
#include "nsv/fixtures.hpp"
#include "nsv/parser.hpp"
#include "testgen.hpp"

using namespace nsv;

namespace {

ConceptMapping cm(std::vector<Label> v) { return ConceptMapping{std::move(v)}; }

// Union of pairwise disagreement positions, straight from the definition.
std::set<int> brute_disagreement(const std::vector<ConceptMapping>& sols) {
    std::set<int> out;
    for (std::size_t a = 0; a < sols.size(); ++a)
        for (std::size_t b = a + 1; b < sols.size(); ++b)
            for (std::size_t i = 0; i < sols[a].size(); ++i)
                if (sols[a][i] != sols[b][i]) out.insert(static_cast<int>(i));
    return out;
}

int brute_max_hamming(const std::vector<ConceptMapping>& sols) {
    int best = 0;
    for (std::size_t a = 0; a < sols.size(); ++a)
        for (std::size_t b = a + 1; b < sols.size(); ++b) {
            int differ = 0;
            for (std::size_t i = 0; i < sols[a].size(); ++i)
                if (sols[a][i] != sols[b][i]) ++differ;
            best = std::max(best, differ);
        }
    return best;
}

}  // namespace

TEST_CASE("four-node addition admits exactly eight bijections") {
    const Problem p = fixture("four-node-addition").problem;
    Enumeration e = enumerate_valid(p, MappingMode::Bijection, 10000, false);
    CHECK_FALSE(e.saturated);
    const std::vector<ConceptMapping> expected = {
        cm({0, 1, 2, 3}), cm({0, 2, 1, 3}), cm({1, 0, 3, 2}), cm({1, 3, 0, 2}),
        cm({2, 0, 3, 1}), cm({2, 3, 0, 1}), cm({3, 1, 2, 0}), cm({3, 2, 1, 0})};
    CHECK(e.mappings == expected);
}

TEST_CASE("modulo successor admits exactly the three rotations") {
    const Problem p = fixture("modulo-successor").problem;
    Enumeration e = enumerate_valid(p, MappingMode::Bijection, 10000, false);
    CHECK_FALSE(e.saturated);
    CHECK(e.mappings ==
          std::vector<ConceptMapping>{cm({0, 1, 2}), cm({1, 2, 0}), cm({2, 0, 1})});
}

TEST_CASE("mnist-half function mode yields the two overloading shortcuts") {
    const Problem p = fixture("mnist-half").problem;
    Enumeration e = enumerate_valid(p, MappingMode::Function, 10000, true);
    CHECK_FALSE(e.saturated);
    CHECK(e.mappings ==
          std::vector<ConceptMapping>{cm({0, 1, 3, 2, 3}), cm({0, 1, 4, 1, 2})});
}

TEST_CASE("verify reports the three algorithm outcomes") {
    CHECK(verify(fixture("mnist-half").problem, MappingMode::Bijection).status ==
          VerificationStatus::ShortcutFree);

    VerificationResult four =
        verify(fixture("four-node-addition").problem, MappingMode::Bijection);
    CHECK(four.status == VerificationStatus::ShortcutsFound);
    CHECK(four.shortcuts.size() == 7);
    CHECK(std::find(four.shortcuts.begin(), four.shortcuts.end(),
                    fixture("four-node-addition").problem.intended) ==
          four.shortcuts.end());

    Problem contradicted = fixture("four-node-addition").problem;
    contradicted.constraints.emplace_back(Pin{0, 1});  // intended has n0 = 0
    CHECK(verify(contradicted, MappingMode::Bijection).status ==
          VerificationStatus::IntendedInvalid);
}

TEST_CASE("bijection mode over unequal domains is a mode error") {
    Problem p;
    p.outputs = {"a", "b"};
    p.concepts = {0, 1, 2};
    p.intended = cm({0, 1});
    CHECK_THROWS_AS(enumerate_valid(p, MappingMode::Bijection, 10, false), Error);
    CHECK_NOTHROW(enumerate_valid(p, MappingMode::Function, 10, false));
    CHECK_THROWS_AS(enumerate_valid(p, MappingMode::Function, 0, false), Error);
}

TEST_CASE("saturation marks truncated enumerations only") {
    const Problem p = fixture("four-node-addition").problem;

    Enumeration cut = enumerate_valid(p, MappingMode::Bijection, 3, false);
    CHECK(cut.saturated);
    CHECK(cut.mappings.size() == 3);  // exactly the cap when saturated

    // a cap equal to the solution count is not a truncation
    Enumeration full = enumerate_valid(p, MappingMode::Bijection, 8, false);
    CHECK_FALSE(full.saturated);
    CHECK(full.mappings.size() == 8);

    VerificationResult r = verify(p, MappingMode::Bijection, 4);
    CHECK(r.status == VerificationStatus::ShortcutsFound);
    CHECK(r.saturated);
    CHECK(r.shortcuts.size() == 4);
}

TEST_CASE("exclusion removes the intended mapping even when valid") {
    nsvtest::Rng rng(29);
    for (int round = 0; round < 40; ++round) {
        const Problem p = nsvtest::random_problem(rng);
        Enumeration e = enumerate_valid(p, MappingMode::Function, 100000, true);
        CHECK(std::find(e.mappings.begin(), e.mappings.end(), p.intended) ==
              e.mappings.end());
    }
}

TEST_CASE("enumeration is deterministic and lexicographically ordered") {
    nsvtest::Rng rng(31);
    for (int round = 0; round < 20; ++round) {
        const Problem p = nsvtest::random_problem(rng);
        Enumeration a = enumerate_valid(p, MappingMode::Function, 100000, false);
        Enumeration b = enumerate_valid(p, MappingMode::Function, 100000, false);
        CHECK(a.mappings == b.mappings);
        CHECK(std::is_sorted(a.mappings.begin(), a.mappings.end()));
    }
}

TEST_CASE("search agrees with the naive filter oracle") {
    nsvtest::Rng rng(37);
    int bijective_rounds = 0;
    for (int round = 0; round < 100; ++round) {
        nsvtest::ProblemOptions opt;
        opt.square = rng.coin();
        opt.max_outputs = 5;
        opt.max_concepts = 6;  // up to 6^5 mappings against the full filter
        const Problem p = nsvtest::random_problem(rng, opt);

        Enumeration got = enumerate_valid(p, MappingMode::Function, 1000000, false);
        CHECK(got.mappings == nsvtest::naive_valid(p, MappingMode::Function, false));

        if (p.outputs.size() == p.concepts.size()) {
            ++bijective_rounds;
            Enumeration bij = enumerate_valid(p, MappingMode::Bijection, 1000000, false);
            CHECK(bij.mappings ==
                  nsvtest::naive_valid(p, MappingMode::Bijection, false));
            Enumeration excl = enumerate_valid(p, MappingMode::Bijection, 1000000, true);
            CHECK(excl.mappings ==
                  nsvtest::naive_valid(p, MappingMode::Bijection, true));
        }
    }
    CHECK(bijective_rounds > 20);
}

TEST_CASE("adding a constraint never grows the valid set") {
    nsvtest::Rng rng(41);
    for (int round = 0; round < 60; ++round) {
        const Problem p = nsvtest::random_problem(rng);
        Problem extended = p;
        extended.constraints.push_back(
            rng.coin() ? nsvtest::random_consistent_constraint(rng, p)
                       : nsvtest::random_arbitrary_constraint(rng, p));

        Enumeration base = enumerate_valid(p, MappingMode::Function, 100000, false);
        Enumeration narrowed =
            enumerate_valid(extended, MappingMode::Function, 100000, false);
        CHECK(std::includes(base.mappings.begin(), base.mappings.end(),
                            narrowed.mappings.begin(), narrowed.mappings.end()));
    }
}

TEST_CASE("four-node measures match the worked example") {
    const Problem p = fixture("four-node-addition").problem;
    Enumeration e = enumerate_valid(p, MappingMode::Bijection, 10000, false);
    AmbiguityMeasures m = measures(e);
    CHECK(m.multiplicity == 7);
    CHECK(m.disagreement_positions == std::vector<int>{0, 1, 2, 3});
    // brute force over all 28 pairs gives 4, e.g. (0,1,2,3) vs (3,2,1,0)
    CHECK(brute_max_hamming(e.mappings) == 4);
    CHECK(m.ambiguity == 4);
    CHECK(m.exact);
}

TEST_CASE("singleton solution sets have zero measures") {
    AmbiguityMeasures m = measures({cm({0, 1, 2})}, false);
    CHECK(m.multiplicity == 0);
    CHECK(m.ambiguity == 0);
    CHECK(m.disagreement_positions.empty());
    CHECK_THROWS_AS(measures(std::vector<ConceptMapping>{}, false), Error);
}

TEST_CASE("negative concept labels enumerate and order correctly") {
    Problem p;
    p.outputs = {"a", "b"};
    p.concepts = {-2, 0, 3};
    p.intended = ConceptMapping{{-2, 3}};
    p.constraints.emplace_back(WeightedSum{{{0, 1}, {1, 1}}, 1});
    Enumeration e = enumerate_valid(p, MappingMode::Function, 100, false);
    CHECK(e.mappings == std::vector<ConceptMapping>{ConceptMapping{{-2, 3}},
                                                    ConceptMapping{{3, -2}}});
    // the DSL carries the negative labels through
    ParseResult r = parse_problem(serialize_problem(p));
    REQUIRE(r.ok());
    CHECK(*r.problem == p);
}

TEST_CASE("concurrent enumerations do not interfere") {
    const Problem four = fixture("four-node-addition").problem;
    const Problem half = fixture("mnist-half").problem;
    std::vector<std::thread> workers;
    std::array<std::size_t, 8> counts{};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            const Problem& p = (t % 2) ? half : four;
            const MappingMode mode =
                (t % 2) ? MappingMode::Function : MappingMode::Bijection;
            counts[t] = enumerate_valid(p, mode, 10000, false).mappings.size();
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) CHECK(counts[t] == ((t % 2) ? 3u : 8u));
}

TEST_CASE("the empty problem has exactly the empty mapping") {
    const Problem p;  // no outputs, no concepts, no constraints
    Enumeration e = enumerate_valid(p, MappingMode::Function, 10, false);
    REQUIRE(e.mappings.size() == 1);
    CHECK(e.mappings[0].size() == 0);
    CHECK(verify(p, MappingMode::Bijection).status ==
          VerificationStatus::ShortcutFree);
}

TEST_CASE("measure relations hold on random solution sets") {
    nsvtest::Rng rng(43);
    for (int round = 0; round < 60; ++round) {
        const Problem p = nsvtest::random_problem(rng);
        Enumeration e = enumerate_valid(p, MappingMode::Function, 100000, false);
        if (e.mappings.empty()) continue;  // inconsistent random constraint mix
        AmbiguityMeasures m = measures(e);
        const int n = static_cast<int>(p.outputs.size());

        // multiplicity zero iff a single solution
        CHECK((m.multiplicity == 0) == (e.mappings.size() == 1));
        // zero multiplicity forces zero ambiguity and empty disagreement
        if (m.multiplicity == 0) {
            CHECK(m.ambiguity == 0);
            CHECK(m.disagreement_positions.empty());
        }
        // zero ambiguity forces zero multiplicity
        if (m.ambiguity == 0) CHECK(m.multiplicity == 0);
        // positive multiplicity forces both measures positive
        if (m.multiplicity > 0) {
            CHECK(m.ambiguity >= 1);
            CHECK(m.disagreement_positions.size() >= 1);
        }
        // sandwich: ambiguity <= |disagreement| <= |N|
        CHECK(m.ambiguity <= static_cast<int>(m.disagreement_positions.size()));
        CHECK(static_cast<int>(m.disagreement_positions.size()) <= n);

        // definitions, recomputed directly
        std::set<int> delta = brute_disagreement(e.mappings);
        CHECK(std::vector<int>(delta.begin(), delta.end()) ==
              m.disagreement_positions);
        CHECK(brute_max_hamming(e.mappings) == m.ambiguity);
    }
}
