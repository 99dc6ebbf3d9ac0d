#pragma once

#include <stdexcept>
#include <string>

namespace nsv {

// Failure categories surfaced by the library. Structural covers malformed
// problems (bad references, broken invariants); Mode covers mode/shape
// mismatches such as bijective search over |N| != |S|.
enum class ErrorKind {
    Structural,
    Argument,
    Mode,
    Precondition,
    Resource,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

const char* to_string(ErrorKind kind) noexcept;

}  // namespace nsv
