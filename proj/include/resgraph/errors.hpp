#pragma once

#include <stdexcept>
#include <string>

namespace resgraph {

// Base for all domain errors. The CLI maps these to exit code 2
// (rejected input); anything else escaping to main is exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph fails the resolution-graph well-formedness rules.
struct GraphError : Error {
    using Error::Error;
};

// Intersection form is not negative definite, so the configuration
// does not contract to a normal surface singularity.
struct NotContractible : Error {
    using Error::Error;
};

// A shape-restricted operation was handed a shape outside its domain.
struct ShapeMismatch : Error {
    using Error::Error;
};

// Bad numeric parameter (row id out of range, zero denominator, ...).
struct DomainError : Error {
    using Error::Error;
};

// Inverting zero, e.g. a Lefschetz factor 1 - zeta^0.
struct DivisionByZero : Error {
    using Error::Error;
};

// DSL syntax or semantic error with a source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + reason),
          line(line_), column(column_) {}
};

} // namespace resgraph
