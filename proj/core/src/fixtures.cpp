#include "nsv/fixtures.hpp"

namespace nsv {

namespace {

Problem four_node_addition() {
    Problem p;
    p.outputs = {"n0", "n1", "n2", "n3"};
    p.concepts = {0, 1, 2, 3};
    p.intended = ConceptMapping{{0, 1, 2, 3}};
    p.constraints.emplace_back(WeightedSum{{{0, 1}, {3, 1}}, 3});
    p.constraints.emplace_back(WeightedSum{{{1, 1}, {2, 1}}, 3});
    return p;
}

Problem mnist_half() {
    Problem p;
    p.outputs = {"n0", "n1", "n2", "n3", "n4"};
    p.concepts = {0, 1, 2, 3, 4};
    p.intended = ConceptMapping{{0, 1, 2, 3, 4}};
    p.constraints.emplace_back(WeightedSum{{{0, 1}, {0, 1}}, 0});
    p.constraints.emplace_back(WeightedSum{{{0, 1}, {1, 1}}, 1});
    p.constraints.emplace_back(WeightedSum{{{2, 1}, {3, 1}}, 5});
    p.constraints.emplace_back(WeightedSum{{{2, 1}, {4, 1}}, 6});
    return p;
}

Problem modulo_successor() {
    Problem p;
    p.outputs = {"n0", "n1", "n2"};
    p.concepts = {0, 1, 2};
    p.intended = ConceptMapping{{0, 1, 2}};
    p.constraints.emplace_back(ModSucc{0, 1, 3});
    p.constraints.emplace_back(ModSucc{1, 2, 3});
    return p;
}

}  // namespace

NamedFixture fixture(std::string_view name) {
    if (name == "four-node-addition") {
        return NamedFixture{std::string(name), four_node_addition(),
                            {{MappingMode::Bijection, 7, true}}};
    }
    if (name == "mnist-half") {
        return NamedFixture{std::string(name),
                            mnist_half(),
                            {{MappingMode::Function, 2, true},
                             {MappingMode::Bijection, 0, true}}};
    }
    if (name == "modulo-successor") {
        return NamedFixture{std::string(name), modulo_successor(),
                            {{MappingMode::Bijection, 2, true}}};
    }
    if (name == "four-node-repaired") {
        // The pin forces the second component; four valid mappings remain
        // without bijectivity, two with it.
        Problem p = four_node_addition();
        p.constraints.emplace_back(Pin{1, 1});
        return NamedFixture{std::string(name),
                            std::move(p),
                            {{MappingMode::Function, 3, true},
                             {MappingMode::Bijection, 1, true}}};
    }
    if (name == "mnist-half-pinned") {
        Problem p = mnist_half();
        p.constraints.emplace_back(Pin{2, 2});
        return NamedFixture{std::string(name),
                            std::move(p),
                            {{MappingMode::Function, 0, true},
                             {MappingMode::Bijection, 0, true}}};
    }
    std::string known;
    for (const auto& candidate : fixture_names()) {
        if (!known.empty()) known += ", ";
        known += candidate;
    }
    fail(ErrorKind::Argument,
         "unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> fixture_names() {
    return {"four-node-addition", "mnist-half", "modulo-successor",
            "four-node-repaired", "mnist-half-pinned"};
}

}  // namespace nsv
