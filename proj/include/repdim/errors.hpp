#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

// Malformed input text (graph6, edge list, coordinate files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-symmetric input, eigensolver divergence, bad bracket.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant was violated (e.g. realized dimension disagrees with
// the theorem value). Always a bug or a tolerance breakdown, never user error.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace repdim
