#pragma once

#include <stdexcept>
#include <string>

namespace asymbench {

// Malformed input text: wrong field count, unparsable number, unknown header.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally sound input that violates a table invariant
// (duplicate key, missing meta entry, degenerate baseline, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Contract violation of a numeric operation
// (empty input, non-positive harmonic-mean argument, unknown metric, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace asymbench
