#pragma once

#include <stdexcept>
#include <string>

namespace tpd {

// Bad textual input: divisor/polynomial/surface/config grammar violations.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Divisor coefficient vector does not match the surface basis.
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& m) : std::invalid_argument(m) {}
};

// The requested analysis does not apply to the given data (CLI exit 2).
struct NotApplicable : std::runtime_error {
    explicit NotApplicable(const std::string& m) : std::runtime_error(m) {}
};

// Germ does not have the multiplicity an operation requires.
struct WrongMultiplicity : std::invalid_argument {
    explicit WrongMultiplicity(const std::string& m) : std::invalid_argument(m) {}
};

// Result is not determined at the working truncation; re-run with a larger one.
struct TruncationTooLow : std::runtime_error {
    explicit TruncationTooLow(const std::string& m) : std::runtime_error(m) {}
};

// Input is outside the implemented families or ranges.
struct UnsupportedInput : std::invalid_argument {
    explicit UnsupportedInput(const std::string& m) : std::invalid_argument(m) {}
};

// A checked precondition of an operation failed.
struct PreconditionFailed : std::invalid_argument {
    explicit PreconditionFailed(const std::string& m) : std::invalid_argument(m) {}
};

} // namespace tpd
