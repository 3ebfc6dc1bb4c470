// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace nap {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Algebraic domain violations: division by zero, conditioning on the
/// empty event, a non-fair space where fairness is required.
struct DomainError : Error {
    using Error::Error;
};

/// A magnitude query (finite / infinitesimal / standard part) on a
/// multivariate element whose magnitude is not determined by the order
/// facts available.
struct UndeterminedError : Error {
    using Error::Error;
};

/// Input outside the representable fragment (unsupported counting shape,
/// unsupported weight function, family/space mismatch).
struct UnsupportedError : Error {
    using Error::Error;
};

/// An endpoint enclosure too coarse to classify a query point.
struct PrecisionError : Error {
    using Error::Error;
};

/// Desk-scale enumeration caps exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

/// Query-language syntax or binding error; carries source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

} // namespace nap
