#include "nsv/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nsv {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ConstraintGraph constraint_graph(const Problem& p) {
    validate_problem(p);
    ConstraintGraph g;
    g.vertex_count = p.outputs.size();

    std::set<std::pair<int, int>> edges;
    for (const auto& c : p.constraints) {
        const std::vector<int> refs = referenced_outputs(c);
        for (std::size_t i = 0; i < refs.size(); ++i)
            for (std::size_t j = i + 1; j < refs.size(); ++j)
                edges.emplace(refs[i], refs[j]);
    }
    g.edges.assign(edges.begin(), edges.end());

    UnionFind uf(g.vertex_count);
    for (const auto& [a, b] : g.edges) uf.unite(a, b);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < static_cast<int>(g.vertex_count); ++v)
        groups[uf.find(v)].push_back(v);
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        g.components.push_back(std::move(members));
    }
    std::sort(g.components.begin(), g.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

DiscriminationReport check_discrimination(const Problem& p,
                                          const Enumeration& solutions) {
    if (solutions.saturated)
        fail(ErrorKind::Precondition,
             "discrimination requires the exact solution set; the enumeration "
             "was truncated at its cap");

    std::set<std::vector<Label>> member;
    for (const auto& phi : solutions.mappings) member.insert(phi.values);

    std::vector<Label> labels = p.concepts;
    std::sort(labels.begin(), labels.end());

    for (const auto& phi : solutions.mappings) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                ConceptMapping swapped =
                    apply_transposition(phi, labels[i], labels[j]);
                if (swapped == phi) continue;  // neither label occurs
                if (member.count(swapped.values)) {
                    DiscriminationReport report;
                    report.discriminative = false;
                    report.witness = DiscriminationWitness{
                        phi, labels[i], labels[j], std::move(swapped)};
                    return report;
                }
            }
        }
    }
    return DiscriminationReport{};
}

AutomorphismReport automorphism_group(const Enumeration& solutions) {
    if (solutions.saturated)
        fail(ErrorKind::Precondition,
             "automorphism analysis requires the exact solution set");
    if (solutions.mappings.empty())
        fail(ErrorKind::Precondition,
             "automorphism analysis requires a nonempty solution set");

    const ConceptMapping& base = solutions.mappings.front();
    std::vector<Label> labels = base.values;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        fail(ErrorKind::Precondition,
             "automorphism analysis requires bijective mappings");
    for (const auto& phi : solutions.mappings)
        if (!is_bijective_over(phi, labels))
            fail(ErrorKind::Precondition,
                 "automorphism analysis requires bijective mappings over a "
                 "common concept set");

    std::set<std::vector<Label>> member;
    for (const auto& phi : solutions.mappings) member.insert(phi.values);

    std::vector<Permutation> elements;
    for (const auto& target : solutions.mappings) {
        // The unique sigma with sigma(base) == target.
        std::vector<std::pair<Label, Label>> pairs;
        pairs.reserve(base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            pairs.emplace_back(base[i], target[i]);
        Permutation sigma = make_permutation(std::move(pairs));

        bool preserves = true;
        for (const auto& phi : solutions.mappings) {
            if (!member.count(compose_value_permutation(sigma, phi).values)) {
                preserves = false;
                break;
            }
        }
        if (preserves) elements.push_back(std::move(sigma));
    }
    std::sort(elements.begin(), elements.end());

    // The preserving permutations always form a group; a violation here
    // means the candidate filtering above is broken.
    auto contains = [&](const Permutation& q) {
        return std::binary_search(elements.begin(), elements.end(), q);
    };
    if (!contains(identity_permutation(labels)))
        throw std::logic_error("automorphism set lost the identity");
    for (const auto& a : elements) {
        if (!contains(inverse(a)))
            throw std::logic_error("automorphism set not closed under inverse");
        for (const auto& b : elements)
            if (!contains(compose(a, b)))
                throw std::logic_error(
                    "automorphism set not closed under composition");
    }

    AutomorphismReport report;
    report.is_trivial = elements.size() == 1;

    std::set<std::vector<Label>> orbit;
    for (const auto& sigma : elements)
        orbit.insert(compose_value_permutation(sigma, base).values);
    report.is_transitive_on_solutions = orbit.size() == solutions.mappings.size();

    for (const auto& sigma : elements) {
        if (sigma.is_identity()) continue;
        report.witnesses.emplace_back(base, compose_value_permutation(sigma, base));
    }
    report.elements = std::move(elements);
    return report;
}

}  // namespace nsv
