#include "fef/distill.hpp"

namespace fef {

namespace {
constexpr double kThresholdSlack = 1e-9;
}

ReductionEigenvalues reduction_criterion(const DensityMatrix& rho) {
    const ComplexMatrix rho_a =
        partial_trace(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::A);
    const ComplexMatrix rho_b =
        partial_trace(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::B);
    const ComplexMatrix eye_a = ComplexMatrix::Identity(rho.dim_a, rho.dim_a);
    const ComplexMatrix eye_b = ComplexMatrix::Identity(rho.dim_b, rho.dim_b);

    ReductionEigenvalues out;
    const RealVector eigs_a =
        hermitian_eigenvalues(kron(rho_a, eye_b) - rho.matrix);
    const RealVector eigs_b =
        hermitian_eigenvalues(kron(eye_a, rho_b) - rho.matrix);
    out.min_a_side = eigs_a(eigs_a.size() - 1);
    out.min_b_side = eigs_b(eigs_b.size() - 1);
    return out;
}

const char* to_string(DistillVerdict verdict) {
    switch (verdict) {
        case DistillVerdict::DistillDirectly: return "DistillDirectly";
        case DistillVerdict::FilteringRequired: return "FilteringRequired";
        case DistillVerdict::Indeterminate: return "Indeterminate";
        case DistillVerdict::NotKnownDistillable: return "NotKnownDistillable";
    }
    return "?";
}

DistillAdvice advise(const DensityMatrix& rho, const GeneratorBasis& basis) {
    if (rho.dim_a != rho.dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "advise: local dims differ (" + std::to_string(rho.dim_a) +
                        " vs " + std::to_string(rho.dim_b) + ")");
    }
    const ReductionEigenvalues reduction = reduction_criterion(rho);
    DistillAdvice advice;
    advice.min_a_side = reduction.min_a_side;
    advice.min_b_side = reduction.min_b_side;
    advice.min_reduction_eigenvalue = reduction.min();
    advice.violates_reduction = reduction.violated();
    advice.fidelity = fidelity(rho);
    advice.upper_bound = fef_upper_bound(rho, basis);

    const double threshold = 1.0 / rho.dim_a;
    if (!advice.violates_reduction) {
        advice.verdict = DistillVerdict::NotKnownDistillable;
    } else if (advice.fidelity > threshold) {
        advice.verdict = DistillVerdict::DistillDirectly;
    } else if (advice.upper_bound <= threshold + kThresholdSlack) {
        advice.verdict = DistillVerdict::FilteringRequired;
    } else {
        advice.verdict = DistillVerdict::Indeterminate;
    }
    return advice;
}

}  // namespace fef
