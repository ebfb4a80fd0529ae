#pragma once

#include <stdexcept>

namespace nhmf {

// Error taxonomy shared by the library and the CLI (which maps each class
// to a distinct exit code).

/// Input truncation is too short for the requested computation.
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact decomposition failed: the input is not a nearly holomorphic
/// modular form of the declared weight/degree.
struct NotInSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON documents, rational strings, tau values).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nhmf
