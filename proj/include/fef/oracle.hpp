#pragma once

#include <cstdint>

#include "fef/state.hpp"

namespace fef {

struct OracleConfig {
    std::uint64_t seed = 0;   // required; all randomness derives from it
    int restarts = 32;        // restart 0 always starts from U = I
    int max_iters = 500;      // ascent sweeps per restart
    double step_tol = 1e-8;   // stop once the adaptive step falls below
};

struct OracleResult {
    double best_value = 0.0;
    ComplexMatrix best_unitary;
    int best_restart = -1;
};

/// exp(iH) for Hermitian H (unitary by construction). Closed form at
/// d = 2, eigendecomposition otherwise.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h);

/// <psi_+| (I⊗U†) rho (I⊗U) |psi_+> for a d×d unitary U.
double entangled_overlap(const DensityMatrix& rho, const ComplexMatrix& u);

/// Derivative-free maximization of entangled_overlap over U(d):
/// a certified lower bound on the fully entangled fraction.
///
/// U = exp(iH) with H built from d^2 reals (d diagonal entries, then
/// re/im pairs for the off-diagonals, row-major). Restart 0 starts at
/// the identity; later restarts draw parameters from seed-derived
/// Gaussian substreams (scale pi/2). Each restart runs coordinate-wise
/// pattern ascent: try +/- step on every coordinate, keep improvements,
/// halve the step on a sweep with no gain, and stop once the step —
/// and with it the attainable gain — drops below step_tol. The best
/// value over restarts wins; exact ties keep the earlier restart, so
/// results are deterministic and growing the restart budget can only
/// improve them.
OracleResult oracle_fef(const DensityMatrix& rho, const OracleConfig& cfg);

}  // namespace fef
