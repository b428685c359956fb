#pragma once

#include <stdexcept>
#include <string>

namespace elag {

// Domain errors. Each maps to one misuse of an operation contract; all derive
// from std::runtime_error so callers can catch broadly at the CLI boundary.

struct SamePointError : std::runtime_error {
    explicit SamePointError(const std::string& what) : std::runtime_error(what) {}
};

struct NotEisensteinPairError : std::runtime_error {
    explicit NotEisensteinPairError(const std::string& what) : std::runtime_error(what) {}
};

struct MixedFieldError : std::runtime_error {
    explicit MixedFieldError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedShapeError : std::runtime_error {
    explicit UnsupportedShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotReducedError : std::runtime_error {
    explicit NotReducedError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDepthError : std::runtime_error {
    explicit InsufficientDepthError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateWordError : std::runtime_error {
    explicit DegenerateWordError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

struct NonTerminationError : std::runtime_error {
    explicit NonTerminationError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace elag
