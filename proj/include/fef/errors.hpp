#pragma once

#include <stdexcept>
#include <string>

namespace fef {

enum class ErrorKind {
    NonSquare,
    NotHermitian,
    DimensionMismatch,
    InvalidDimension,
    NotOrthogonal,
    TraceNotOne,
    NotPositive,
    OutOfRange,
    NormViolation,
    ReconstructionNotPositive,
    ImaginaryResidue,
};

const char* to_string(ErrorKind kind);

/// Validation failure. `magnitude` carries the offending deviation
/// (e.g. how far a trace is from one) so callers can report it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, double magnitude = 0.0)
        : std::runtime_error(message), kind_(kind), magnitude_(magnitude) {}

    ErrorKind kind() const { return kind_; }
    double magnitude() const { return magnitude_; }

private:
    ErrorKind kind_;
    double magnitude_;
};

}  // namespace fef
