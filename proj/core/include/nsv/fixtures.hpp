#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsv/model.hpp"

namespace nsv {

struct FixtureExpectation {
    MappingMode mode = MappingMode::Bijection;
    int multiplicity = 0;  // expected shortcut multiplicity in this mode
    bool exact = true;
};

struct NamedFixture {
    std::string name;
    Problem problem;
    std::vector<FixtureExpectation> expected;
};

// Built-in problems used by tests and the CLI:
//   four-node-addition   two disconnected sum pairs, 8 valid bijections
//   mnist-half           digit-sum constraints over five outputs
//   modulo-successor     a connected chain with rotational shortcuts
//   four-node-repaired   four-node-addition plus the pin on n1
//   mnist-half-pinned    mnist-half plus the pin on n2
// Throws Error(Argument) for unknown names.
NamedFixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace nsv
