#include "fef/errors.hpp"

namespace fef {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::TraceNotOne: return "TraceNotOne";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NormViolation: return "NormViolation";
        case ErrorKind::ReconstructionNotPositive:
            return "ReconstructionNotPositive";
        case ErrorKind::ImaginaryResidue: return "ImaginaryResidue";
    }
    return "?";
}

}  // namespace fef
