#include <doctest.h>

#include <algorithm>

#include "nsv/fixtures.hpp"
#include "nsv/parser.hpp"
#include "testgen.hpp"

using namespace nsv;

namespace {

bool has_kind(const ParseResult& r, DiagnosticKind kind) {
    return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                       [&](const SourceDiagnostic& d) { return d.kind == kind; });
}

// One problem exercising every constraint kind once.
Problem exhaustive_kind_problem() {
    Problem p;
    p.outputs = {"a", "b", "c"};
    p.concepts = {0, 1, 2};
    p.intended = ConceptMapping{{0, 1, 2}};
    p.constraints.emplace_back(WeightedSum{{{0, 2}, {1, 1}, {0, -1}}, 1});
    p.constraints.emplace_back(ModSucc{0, 1, 3});
    p.constraints.emplace_back(Pin{2, 2});
    p.constraints.emplace_back(Domain{1, {0, 1}});
    p.constraints.emplace_back(PairDomain{0, 1, 0, 1});
    p.constraints.emplace_back(Table{{0, 2}, {{0, 2}, {1, 0}}});
    p.constraints.emplace_back(PinSet{{{0, 0}, {1, 1}}});
    p.constraints.emplace_back(AltClause{{{0, 1}, {2, 0}}});
    p.metadata.emplace_back("note", "exhaustive kind coverage");
    return p;
}

}  // namespace

TEST_CASE("the 7-line four-node document parses to the expected problem") {
    const std::string text =
        "# two disconnected sum pairs\n"
        "outputs n0 n1 n2 n3\n"
        "concepts 0 1 2 3\n"
        "intended n0=0 n1=1 n2=2 n3=3\n"
        "\n"
        "constraint sum n0 + n3 = 3\n"
        "constraint sum n1 + n2 = 3\n";
    ParseResult r = parse_problem(text);
    REQUIRE(r.ok());
    CHECK(r.diagnostics.empty());
    CHECK(r.problem->outputs.size() == 4);
    CHECK(r.problem->constraints.size() == 2);
    CHECK(r.problem->intended == ConceptMapping{{0, 1, 2, 3}});
    CHECK(*r.problem == fixture("four-node-addition").problem);
}

TEST_CASE("undefined outputs are reported and parsing continues") {
    const std::string text =
        "outputs n0\n"
        "concepts 0 1\n"
        "intended n0=0\n"
        "constraint sum nX = 3\n"
        "constraint pin nY = 1\n";
    ParseResult r = parse_problem(text);
    CHECK_FALSE(r.ok());
    CHECK(r.diagnostics.size() == 2);  // both lines surfaced
    CHECK(has_kind(r, DiagnosticKind::UndefinedOutput));
}

TEST_CASE("the empty document yields an empty problem plus a note") {
    ParseResult r = parse_problem("");
    REQUIRE(r.ok());
    CHECK(r.problem->outputs.empty());
    CHECK(r.problem->concepts.empty());
    CHECK(r.problem->constraints.empty());
    CHECK(r.problem->intended.size() == 0);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].message == "missing intended declaration");
}

TEST_CASE("diagnostic kinds cover the malformed-input space") {
    // duplicate intended assignment: last write must not win
    ParseResult dup = parse_problem("outputs a\nconcepts 0 1\nintended a=0 a=1\n");
    CHECK_FALSE(dup.ok());
    CHECK(has_kind(dup, DiagnosticKind::DuplicateDeclaration));

    ParseResult dup_out = parse_problem("outputs a a\nconcepts 0\nintended a=0\n");
    CHECK_FALSE(dup_out.ok());
    CHECK(has_kind(dup_out, DiagnosticKind::DuplicateDeclaration));

    ParseResult arity = parse_problem(
        "outputs a b\nconcepts 0 1\nintended a=0 b=1\n"
        "constraint table ( a b ) { ( 0 ) }\n");
    CHECK_FALSE(arity.ok());
    CHECK(has_kind(arity, DiagnosticKind::ArityMismatch));

    ParseResult domain = parse_problem("outputs a\nconcepts 0 1\nintended a=7\n");
    CHECK_FALSE(domain.ok());
    CHECK(has_kind(domain, DiagnosticKind::OutOfDomainValue));

    ParseResult syntax = parse_problem(
        "outputs a\nconcepts 0\nintended a=0\nconstraint sum a + = 3\n");
    CHECK_FALSE(syntax.ok());
    CHECK(has_kind(syntax, DiagnosticKind::Syntax));

    // missing intended over declared outputs withholds the problem
    ParseResult missing = parse_problem("outputs a b\nconcepts 0 1\n");
    CHECK_FALSE(missing.ok());

    // an incomplete intended mapping is flagged
    ParseResult partial = parse_problem("outputs a b\nconcepts 0 1\nintended a=0\n");
    CHECK_FALSE(partial.ok());
}

TEST_CASE("diagnostics carry 1-based positions") {
    ParseResult r =
        parse_problem("outputs a\nconcepts 0\nintended a=0\nconstraint pin b = 0\n");
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].line == 4);
    CHECK(r.diagnostics[0].column == 16);
}

TEST_CASE("CRLF input parses identically") {
    const std::string lf =
        "outputs a\nconcepts 0\nintended a=0\nconstraint pin a = 0\n";
    std::string crlf = lf;
    std::size_t pos = 0;
    while ((pos = crlf.find('\n', pos)) != std::string::npos) {
        crlf.replace(pos, 1, "\r\n");
        pos += 2;
    }
    ParseResult a = parse_problem(lf);
    ParseResult b = parse_problem(crlf);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.problem == *b.problem);
}

TEST_CASE("constraint order follows source order") {
    const std::string text =
        "outputs a b\nconcepts 0 1\nintended a=0 b=1\n"
        "constraint pin b = 1\n"
        "constraint sum a + b = 1\n"
        "constraint domain a { 0 }\n";
    ParseResult r = parse_problem(text);
    REQUIRE(r.ok());
    REQUIRE(r.problem->constraints.size() == 3);
    CHECK(std::holds_alternative<Pin>(r.problem->constraints[0]));
    CHECK(std::holds_alternative<WeightedSum>(r.problem->constraints[1]));
    CHECK(std::holds_alternative<Domain>(r.problem->constraints[2]));
}

TEST_CASE("round trips reconstruct the data model exactly") {
    auto round_trip = [](const Problem& p) {
        const std::string text = serialize_problem(p);
        ParseResult r = parse_problem(text);
        REQUIRE_MESSAGE(r.ok(), text);
        CHECK(*r.problem == p);
        // serialize . parse . serialize is serialize
        CHECK(serialize_problem(*r.problem) == text);
    };

    for (const auto& name : fixture_names()) round_trip(fixture(name).problem);
    round_trip(exhaustive_kind_problem());

    nsvtest::Rng rng(23);
    for (int round = 0; round < 100; ++round) {
        nsvtest::ProblemOptions opt;
        opt.max_constraints = 5;
        Problem p = nsvtest::random_problem(rng, opt);
        if (rng.coin()) p.metadata.emplace_back("seed", std::to_string(round));
        round_trip(p);
    }
}

TEST_CASE("formatting variants parse to the same problem") {
    const std::string canonical =
        "outputs a b\nconcepts 0 1\nintended a=0 b=1\n"
        "constraint sum 2*a + -1*b = -1\n"
        "constraint pairdomain a b { 1, 0 }\n";
    const std::string spaced =
        "# comment line\n"
        "outputs   a   b\n"
        "concepts 0 1\n"
        "intended a=0 b=1   # trailing comment\n"
        "constraint sum 2*a + -1*b = -1\n"
        "constraint pairdomain a b { 0, 1 }\n";
    ParseResult a = parse_problem(canonical);
    ParseResult b = parse_problem(spaced);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.problem == *b.problem);
    CHECK(serialize_problem(*a.problem) == serialize_problem(*b.problem));
}

TEST_CASE("oversized integer literals are diagnosed, not truncated") {
    ParseResult r = parse_problem(
        "outputs a\nconcepts 99999999999999999999\nintended a=0\n");
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, DiagnosticKind::Syntax));
}

TEST_CASE("unserializable metadata is rejected up front") {
    Problem p;
    p.outputs = {"a"};
    p.concepts = {0};
    p.intended = ConceptMapping{{0}};
    p.metadata.emplace_back("note", "contains a # comment marker");
    CHECK_THROWS_AS(serialize_problem(p), Error);
    p.metadata.back().second = " padded ";
    CHECK_THROWS_AS(serialize_problem(p), Error);
    p.metadata.back().second = "clean value";
    CHECK_NOTHROW(serialize_problem(p));
}

TEST_CASE("parsing is total over arbitrary input") {
    // structure-ish characters mixed with noise; parse_problem must always
    // return diagnostics rather than throw
    const std::string alphabet =
        "abcXYZ019 =+*{}(),#\t-_é\xff\\\"';:\nconstraint sum pin outputs "
        "intended concepts meta table";
    nsvtest::Rng rng(157);
    for (int round = 0; round < 300; ++round) {
        std::string text;
        const int length = rng.range(0, 160);
        for (int i = 0; i < length; ++i)
            text += alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<int>(alphabet.size()) - 1))];
        ParseResult r = parse_problem(text);  // must not throw
        if (r.ok()) CHECK_NOTHROW(validate_problem(*r.problem));
    }
}

TEST_CASE("metadata lines survive the round trip") {
    const std::string text =
        "outputs a\nconcepts 0\nintended a=0\nmeta dataset digit pairs with sum labels\n";
    ParseResult r = parse_problem(text);
    REQUIRE(r.ok());
    REQUIRE(r.problem->metadata.size() == 1);
    CHECK(r.problem->metadata[0].first == "dataset");
    CHECK(r.problem->metadata[0].second == "digit pairs with sum labels");
    CHECK(serialize_problem(*r.problem) == text);
}
