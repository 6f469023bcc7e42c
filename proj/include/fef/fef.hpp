#pragma once

#include <optional>

#include "fef/bloch.hpp"
#include "fef/state.hpp"
#include "fef/su_generators.hpp"

namespace fef {

/// Singlet fraction F(rho) = <psi_+| rho |psi_+>. Equal local dims only.
double fidelity(const DensityMatrix& rho);

/// Upper bound on the fully entangled fraction,
///   1/d^2 + 4 ||M(rho)^T M(P_+)||_KF,
/// where M is the correlation block of the generator expansion in
/// `basis` and ||.||_KF sums all singular values. Exact on P_+ and on
/// maximally mixed input; invariant under rotations of `basis` and
/// under local unitaries on either side.
double fef_upper_bound(const DensityMatrix& rho, const GeneratorBasis& basis);

/// Two-qubit value of the same Ky Fan expression, 1/4 + 4||M^T M_+||_KF,
/// in the canonical Pauli basis. NOTE: this matches the true fully
/// entangled fraction only when det of the two-qubit correlation matrix
/// T = 4M is <= 0 (always the case for pure states); otherwise it can
/// strictly exceed it — see fef_two_qubit_bell for the exact value.
double fef_two_qubit_kyfan(const DensityMatrix& rho);

/// Exact two-qubit fully entangled fraction: the largest eigenvalue of
/// Re(B^dag rho B) with B the Bell-basis column matrix.
double fef_two_qubit_bell(const DensityMatrix& rho);

/// Bell-basis matrix (columns are the four Bell kets). Unitarity is
/// asserted at first use to 1e-12 as a transcription guard.
const ComplexMatrix& bell_basis_matrix();

/// max(2v - 1, 0); requires 0 <= v <= 1 + 1e-9, else OutOfRange.
double normalized_fef(double fef_value);

/// det of T = 4M for a two-qubit state; sign decides whether the Ky Fan
/// form is exact (<= 0) or an overestimate (> 0).
double two_qubit_t_det(const DensityMatrix& rho);

struct FefReport {
    int dim_a = 0;
    int dim_b = 0;
    double fidelity = 0.0;
    double upper_bound = 0.0;
    std::optional<double> exact_two_qubit;   // d=2 only: Ky Fan form
    std::optional<double> bell_cross_check;  // d=2 only: Bell-eigenvalue form
    std::optional<double> normalized;        // d=2 only
    std::optional<double> oracle_lower;      // when optimization was run
};

/// Bound + fidelity, plus the exact two-qubit numbers when d=2
/// (exact_two_qubit carries the Ky Fan form, sharing code with the
/// general bound; the Bell eigenvalue rides along as a cross-check).
/// The oracle_lower slot is filled by callers that ran the optimizer.
FefReport compute_report(const DensityMatrix& rho, const GeneratorBasis& basis);

}  // namespace fef
