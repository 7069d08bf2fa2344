#pragma once

#include <stdexcept>
#include <string>

namespace reven {

// Process exit codes shared by the CLI and the standalone verification
// drivers.  Library code signals these conditions with the exception
// types below; main() translates.
enum class ExitCode : int {
    ok = 0,
    violation = 1, // an identity that must hold did not
    usage = 2,     // bad arguments / malformed input / domain error
    bound = 3      // input exceeds a documented resource bound
};

// A mathematical identity failed.  Carries both sides so callers can
// print a useful witness.
class IdentityViolation : public std::runtime_error {
public:
    explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: unknown names, values outside the documented domain,
// unparsable rationals, and so on.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but exceeds a resource bound (factorization
// limit, oracle size limit, table size limit).
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Two internal routes that must agree disagreed, or a structural
// assumption broke.  Always a bug in this library, never user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace reven
