#ifndef REEBCERT_ERRORS_HPP
#define REEBCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reebcert {

// Bad user-supplied values (non-coprime pair, invalid diagram, ...).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable or malformed input files. Exit code 3.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant (a bug, not a user mistake). Exit code 4.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace reebcert

#endif
