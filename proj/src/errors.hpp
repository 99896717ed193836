// Exception types shared across the library. std::invalid_argument is used
// for malformed inputs; the types here cover the remaining, more specific
// failure modes that callers may want to tell apart.
#pragma once

#include <stdexcept>
#include <string>

namespace folis {

// A mathematically well-formed request outside the domain of the operation
// (even-dimensional bound request, linear subspace, ...).
struct NotApplicableError : std::domain_error {
    explicit NotApplicableError(const std::string& what) : std::domain_error(what) {}
};

// Malformed polynomial/system text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An internal identity failed to hold (e.g. a Chern coefficient came out
// non-integral). Always a bug, never a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Nondegeneracy was requested at a point where the variety itself is not
// smooth, so there is no tangent space to restrict to.
struct NotSmoothPointError : std::domain_error {
    explicit NotSmoothPointError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace folis
