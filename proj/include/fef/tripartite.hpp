#pragma once

#include <array>

#include "fef/state.hpp"
#include "fef/su_generators.hpp"

namespace fef {

/// Three-qubit pure state, basis order |abc> with index 4a + 2b + c.
struct TriPureState {
    ComplexVector amplitudes;  // length 8, unit norm within 1e-10
};

/// Throws NormViolation unless |amplitudes| = 1 within 1e-10 (and
/// DimensionMismatch for a wrong length).
TriPureState make_tri_state(const ComplexVector& amplitudes);

/// Schmidt coefficients across the AB|C cut.
struct SchmidtData {
    double eta1 = 0.0;  // eta1 >= eta2 >= 0, eta1^2 + eta2^2 = 1
    double eta2 = 0.0;
};

/// Singular values of the 4x2 reshape R[(2a+b), c] = psi[4a+2b+c].
SchmidtData schmidt_ab_c(const TriPureState& psi);

/// Concurrence across AB|C: 2 eta1 eta2, cross-checked internally
/// against sqrt(2(1 - Tr rho_AB^2)) to 1e-10.
double concurrence_ab_c(const TriPureState& psi);

/// Tr_C |psi><psi| as a validated two-qubit state.
DensityMatrix reduced_ab(const TriPureState& psi);

/// Normalized FEF of the AB reduction vs sqrt(1 - C^2): for every
/// three-qubit pure state the first never exceeds the second.
struct TradeoffResult {
    double fef_n = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - fef_n, asserted >= -1e-9
};

TradeoffResult fef_concurrence_tradeoff(const TriPureState& psi);

/// Nonnegative amplitudes of the generalized W family
/// alpha|100> + beta|010> + gamma|001>.
struct WParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Throws OutOfRange on negative entries, NormViolation unless
/// alpha^2 + beta^2 + gamma^2 = 1 within 1e-10.
WParams make_w_params(double alpha, double beta, double gamma);

TriPureState w_state(const WParams& p);

/// Same state with phases e^{i phi_k} on the three amplitudes
/// (alpha, beta, gamma order) — the closed forms below must not care.
TriPureState w_state(const WParams& p, const std::array<double, 3>& phases);

struct WClosedForms {
    double fef_n = 0.0;        // max(-1/2 + 2ab + |a^2+b^2-g^2|/2, 0)
    double concurrence = 0.0;  // 2g sqrt(a^2+b^2)
};

WClosedForms w_closed_forms(const WParams& p);

}  // namespace fef
