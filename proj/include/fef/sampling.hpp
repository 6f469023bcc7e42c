#pragma once

#include <cstdint>
#include <random>

#include "fef/state.hpp"

namespace fef {

/// Deterministic substream derivation so that independent draws
/// (oracle restarts, sweep rows) can share one user-facing seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

std::mt19937_64 seeded_rng(std::uint64_t seed);

/// Entries are independent standard complex Gaussians
/// (re, im ~ N(0,1), draw order row-major: re then im).
ComplexMatrix complex_gaussian(int rows, int cols, std::mt19937_64& rng);
RealMatrix real_gaussian(int rows, int cols, std::mt19937_64& rng);

/// Haar-distributed unitary: QR of a complex Gaussian with the phase
/// convention R_ii > 0.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

/// Random orthogonal matrix: QR of a real Gaussian, sign-fixed.
RealMatrix random_orthogonal(int n, std::mt19937_64& rng);

/// Normalized vector of n independent standard complex Gaussians
/// (uniform on the unit sphere).
ComplexVector haar_ket(int n, std::mt19937_64& rng);

/// Full-rank random density matrix G G†/Tr(G G†), G square Gaussian
/// (Hilbert-Schmidt measure).
DensityMatrix ginibre_state(int dim_a, int dim_b, std::mt19937_64& rng);

}  // namespace fef
