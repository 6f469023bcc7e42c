#pragma once

#include "fef/fef.hpp"
#include "fef/state.hpp"

namespace fef {

/// Minimum eigenvalues of the two reduction operators
/// rho_A⊗I − rho and I⊗rho_B − rho. A negative value (below −1e-9)
/// on either side witnesses distillability.
struct ReductionEigenvalues {
    double min_a_side = 0.0;
    double min_b_side = 0.0;

    double min() const { return std::min(min_a_side, min_b_side); }
    bool violated() const { return min() < -1e-9; }
};

ReductionEigenvalues reduction_criterion(const DensityMatrix& rho);

enum class DistillVerdict {
    DistillDirectly,      // criterion violated and fidelity already > 1/d
    FilteringRequired,    // violated but even the FEF upper bound <= 1/d
    Indeterminate,        // violated, fidelity <= 1/d < upper bound
    NotKnownDistillable,  // criterion not violated (it is sufficient, not
                          // necessary, so no claim either way)
};

const char* to_string(DistillVerdict verdict);

struct DistillAdvice {
    bool violates_reduction = false;
    double min_reduction_eigenvalue = 0.0;
    double min_a_side = 0.0;
    double min_b_side = 0.0;
    double fidelity = 0.0;
    double upper_bound = 0.0;
    DistillVerdict verdict = DistillVerdict::NotKnownDistillable;
};

/// Decides whether a local filtering step is needed before the
/// standard recurrence-style distillation can start: states violating
/// the reduction criterion are distillable, and the protocol can begin
/// directly once the fidelity exceeds 1/d. Threshold slack 1e-9.
DistillAdvice advise(const DensityMatrix& rho, const GeneratorBasis& basis);

}  // namespace fef
