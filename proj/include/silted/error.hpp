#pragma once

#include <stdexcept>
#include <string>

namespace silted {

/// Malformed quiver input (syntax, duplicate labels, oriented cycles).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The underlying graph of a quiver is not a disjoint union of ADE diagrams.
struct NotDynkin : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: an oracle disagreed, a resolution
/// ran past its cap, or a structural assertion did not hold.
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw AssertionFailure(what);
}

}  // namespace silted
