#pragma once

#include "fef/state.hpp"
#include "fef/su_generators.hpp"

namespace fef {

/// Coefficients of rho in a product generator expansion:
///   rho = I⊗I/d^2 + (1/d) sum_i r_i g_i⊗I + (1/d) sum_j s_j I⊗g_j
///         + sum_ij m_ij g_i⊗g_j
/// with r_i = Tr(rho g_i⊗I)/2, s_j = Tr(rho I⊗g_j)/2,
/// m_ij = Tr(rho g_i⊗g_j)/4. Equal local dims only.
struct BlochDecomposition {
    int d = 0;
    RealVector r;
    RealVector s;
    RealMatrix m;
};

/// Throws DimensionMismatch for unequal local dims or a basis of the
/// wrong order; ImaginaryResidue if any coefficient has imaginary part
/// above 1e-10 (cannot happen for a valid Hermitian input).
BlochDecomposition decompose(const DensityMatrix& rho,
                             const GeneratorBasis& basis);

/// Inverse of decompose. The rebuilt matrix is validated; a failure is
/// reported as ReconstructionNotPositive.
DensityMatrix reconstruct(const BlochDecomposition& coeffs,
                          const GeneratorBasis& basis);

/// Correlation block m_ij alone (the piece the fidelity bound consumes).
RealMatrix correlation_matrix(const DensityMatrix& rho,
                              const GeneratorBasis& basis);

}  // namespace fef
