#pragma once

#include <stdexcept>
#include <string>

namespace unihopf {

// Base for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A result would carry weight beyond the Hopf truncation. Raised rather than
// silently dropping terms, since dropped terms corrupt axiom checks.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// Bad user-supplied data (spec files, quadratic data, malformed rationals).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A structural fact the theory guarantees failed to hold. Seeing one of
// these means an implementation bug, not bad input.
struct InternalConsistencyError : Error {
    explicit InternalConsistencyError(const std::string& msg) : Error(msg) {}
};

// Socle filtration stabilized below the full space.
struct NotNilpotentError : Error {
    explicit NotNilpotentError(const std::string& msg) : Error(msg) {}
};

} // namespace unihopf
