#pragma once

#include <stdexcept>
#include <string>

#include "fef/state.hpp"

namespace fef {

/// Structural problem in a state file (bad JSON, missing or mistyped
/// field); the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// State-file layout (UTF-8 JSON):
///   {"dim_a": 2, "dim_b": 2, "matrix": [[[re, im], ...], ...]}
/// `matrix` is row-major, one [re, im] pair per entry.
struct StateFile {
    int dim_a = 0;
    int dim_b = 0;
    ComplexMatrix matrix;
};

/// Throws IoError (unreadable) or ParseError (malformed).
StateFile read_state_file(const std::string& path);

/// read_state_file + DensityMatrix validation (fef::Error on failure).
DensityMatrix load_state(const std::string& path);

/// Serializes with shortest-round-trip decimals, so a write/read cycle
/// reproduces every double bit-exactly. Atomic: temp file + rename.
void write_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace fef
