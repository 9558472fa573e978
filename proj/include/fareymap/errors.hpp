#pragma once

#include <stdexcept>
#include <string>

namespace fareymap {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair (a, c) that is not a vertex at the given level, i.e. gcd(a, c, n) != 1.
struct invalid_vertex : error {
    using error::error;
};

// Two values built at different levels were combined.
struct level_mismatch : error {
    using error::error;
};

// An explicit enumeration (group, map, graph) would exceed its configured cap.
struct too_large : error {
    using error::error;
};

// An operation restricted to prime (or odd prime) levels was called with a
// composite level.
struct not_prime : error {
    using error::error;
};

// A documented precondition of an operation was violated by the caller.
struct precondition_error : error {
    using error::error;
};

// Internal arithmetic failure: overflow, a non-integral exact expression, or a
// structural invariant that can only break through an implementation bug.
struct arithmetic_error : error {
    using error::error;
};

// Unrecognised export format or unparseable textual input.
struct format_error : error {
    using error::error;
};

} // namespace fareymap
