#pragma once

#include <stdexcept>
#include <string>

namespace ahg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by zero, log/sqrt of a non-positive value, and similar.
struct DegenerateValue : Error {
    using Error::Error;
};

/// Input outside the declared domain (chart box, stencil escape, n too small).
struct DomainError : Error {
    using Error::Error;
};

/// (h, J) fails to be an almost Hermitian structure within tolerance.
struct StructureError : Error {
    using Error::Error;
};

/// Frame construction ran out of independent candidates.
struct DegenerateFrame : Error {
    using Error::Error;
};

/// A differential operator was asked for more jet orders than available.
struct OrderError : Error {
    using Error::Error;
};

/// Embedding chart is rank deficient or otherwise unusable.
struct ChartError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace ahg
