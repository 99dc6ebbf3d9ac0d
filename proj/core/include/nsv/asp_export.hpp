#pragma once

#include <string>

#include "nsv/model.hpp"

namespace nsv {

// Renders the problem as a ground-able answer-set program: neural/concept
// facts, a one-concept-per-output choice rule (plus the one-output-per-concept
// rule in Bijection mode), one integrity encoding per constraint, and
// optionally the joint constraint excluding the intended mapping. Answer sets
// of the result correspond one-to-one with enumerate_valid output.
// Requires nonnegative concept labels; throws Error(Unsupported) otherwise.
std::string export_asp(const Problem& p, MappingMode mode, bool exclude_intended);

}  // namespace nsv
