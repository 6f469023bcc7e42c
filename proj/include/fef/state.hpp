#pragma once

#include "fef/linalg.hpp"

namespace fef {

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdSlack = 1e-9;

/// Validated bipartite density matrix on C^{dim_a} ⊗ C^{dim_b},
/// composite basis index row = i*dim_b + j for |i>|j>.
/// Construct through validate_state (or a factory below); the stored
/// matrix is exactly Hermitian (symmetrized once at validation), the
/// spectrum is kept as-is — no eigenvalue clipping.
struct DensityMatrix {
    int dim_a = 0;
    int dim_b = 0;
    ComplexMatrix matrix;

    int dim() const { return dim_a * dim_b; }
};

/// Checks shape, Hermiticity (tol 1e-9), unit trace (tol 1e-9) and
/// positivity (min eigenvalue >= -1e-9); throws fef::Error otherwise.
DensityMatrix validate_state(const ComplexMatrix& m, int dim_a, int dim_b);

/// |psi_+> = (1/sqrt d) sum_i |ii> on C^d ⊗ C^d.
ComplexVector max_entangled_ket(int d);

/// Projector onto |psi_+> as a DensityMatrix.
DensityMatrix max_entangled_projector(int d);

/// Two-qutrit noise family rho(x) = (8/9) tau(x)⊗tau(x) + (1/9) P_+
/// with tau(x) = x|0><0| + (1-x)|1><1|. Requires 0 <= x <= 1.
DensityMatrix product_noise_family(double x);

}  // namespace fef
