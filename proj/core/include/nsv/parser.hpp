#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsv/model.hpp"

namespace nsv {

enum class DiagnosticKind {
    Syntax,
    UndefinedOutput,
    DuplicateDeclaration,
    ArityMismatch,
    OutOfDomainValue,
};

const char* to_string(DiagnosticKind kind) noexcept;

struct SourceDiagnostic {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;
    DiagnosticKind kind = DiagnosticKind::Syntax;
};

// Result of parsing a .nsl document. Parsing never aborts: every malformed
// line contributes one diagnostic and parsing continues. `problem` is set
// when the collected declarations form a well-formed problem; the degenerate
// empty document yields an empty problem alongside a missing-intended note.
struct ParseResult {
    std::optional<Problem> problem;
    std::vector<SourceDiagnostic> diagnostics;

    bool ok() const noexcept { return problem.has_value(); }
};

ParseResult parse_problem(const std::string& text);

// Canonical textual form; parse_problem(serialize_problem(p)) reconstructs p
// exactly. Emits LF line endings. Throws Error(Argument) when output names
// are not identifier-shaped.
std::string serialize_problem(const Problem& p);

}  // namespace nsv
