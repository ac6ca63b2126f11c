#pragma once

#include <stdexcept>
#include <string>

namespace blockshift {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches and structurally impossible requests.
struct DimensionError : Error {
    using Error::Error;
};

// Bad caller-supplied values (negative weights, eps <= 0, malformed documents).
struct ValidationError : Error {
    using Error::Error;
};

// Input claimed Hermitian deviates from its adjoint beyond tolerance.
struct HermitianViolationError : Error {
    using Error::Error;
};

// Iteration failed to reach its convergence threshold.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double residual_)
        : Error(msg), residual(residual_) {}
    double residual;
};

// product_chain on a shift with no blocks.
struct NoChainError : Error {
    using Error::Error;
};

// lower_witness on a shift with no blocks.
struct NoWitnessError : Error {
    using Error::Error;
};

// Computed bounds came out in an impossible order; indicates a bug.
struct OrderingViolationError : Error {
    using Error::Error;
};

// Malformed JSON text.  line/column are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
    int line;
    int column;
};

// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace blockshift
