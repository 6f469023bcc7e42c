#include "fef/tripartite.hpp"

#include <cmath>
#include <stdexcept>

#include "fef/fef.hpp"

namespace fef {

namespace {

constexpr double kNormTol = 1e-10;

void require_unit_norm(const ComplexVector& v) {
    if (v.size() != 8) {
        throw Error(ErrorKind::DimensionMismatch,
                    "tri-state amplitudes have length " +
                        std::to_string(v.size()) + ", expected 8");
    }
    const double dev = std::abs(v.norm() - 1.0);
    if (dev > kNormTol) {
        throw Error(ErrorKind::NormViolation,
                    "tri-state norm deviates from 1 by " + std::to_string(dev),
                    dev);
    }
}

}  // namespace

TriPureState make_tri_state(const ComplexVector& amplitudes) {
    require_unit_norm(amplitudes);
    return TriPureState{amplitudes};
}

SchmidtData schmidt_ab_c(const TriPureState& psi) {
    require_unit_norm(psi.amplitudes);
    ComplexMatrix reshaped(4, 2);
    for (int ab = 0; ab < 4; ++ab)
        for (int c = 0; c < 2; ++c)
            reshaped(ab, c) = psi.amplitudes(2 * ab + c);
    const RealVector sv = singular_values(reshaped);
    return SchmidtData{sv(0), sv(1)};
}

DensityMatrix reduced_ab(const TriPureState& psi) {
    require_unit_norm(psi.amplitudes);
    const ComplexMatrix full =
        psi.amplitudes * psi.amplitudes.adjoint();
    // AB|C split: dim_a = 4 (the AB pair), dim_b = 2 (C).
    const ComplexMatrix ab = partial_trace(full, 4, 2, Subsystem::A);
    return validate_state(ab, 2, 2);
}

double concurrence_ab_c(const TriPureState& psi) {
    const SchmidtData schmidt = schmidt_ab_c(psi);
    const double from_schmidt = 2.0 * schmidt.eta1 * schmidt.eta2;

    const ComplexMatrix ab = reduced_ab(psi).matrix;
    const double purity = (ab * ab).trace().real();
    const double from_purity = std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
    if (std::abs(from_schmidt - from_purity) > 1e-10) {
        throw std::logic_error(
            "concurrence_ab_c: computation paths disagree by " +
            std::to_string(std::abs(from_schmidt - from_purity)));
    }
    return from_schmidt;
}

TradeoffResult fef_concurrence_tradeoff(const TriPureState& psi) {
    TradeoffResult out;
    out.fef_n = normalized_fef(fef_two_qubit_kyfan(reduced_ab(psi)));
    const double c = concurrence_ab_c(psi);
    out.bound = std::sqrt(std::max(1.0 - c * c, 0.0));
    out.slack = out.bound - out.fef_n;
    if (out.slack < -1e-9) {
        throw std::logic_error(
            "fef_concurrence_tradeoff: inequality violated, slack " +
            std::to_string(out.slack));
    }
    return out;
}

WParams make_w_params(double alpha, double beta, double gamma) {
    if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
        throw Error(ErrorKind::OutOfRange,
                    "w params must be nonnegative");
    }
    const double dev =
        std::abs(alpha * alpha + beta * beta + gamma * gamma - 1.0);
    if (dev > kNormTol) {
        throw Error(ErrorKind::NormViolation,
                    "w params norm deviates from 1 by " + std::to_string(dev),
                    dev);
    }
    return WParams{alpha, beta, gamma};
}

TriPureState w_state(const WParams& p) {
    return w_state(p, {0.0, 0.0, 0.0});
}

TriPureState w_state(const WParams& p, const std::array<double, 3>& phases) {
    ComplexVector v = ComplexVector::Zero(8);
    v(4) = std::polar(p.alpha, phases[0]);  // |100>
    v(2) = std::polar(p.beta, phases[1]);   // |010>
    v(1) = std::polar(p.gamma, phases[2]);  // |001>
    return make_tri_state(v);
}

WClosedForms w_closed_forms(const WParams& p) {
    WClosedForms out;
    const double raw = -0.5 + 2.0 * p.alpha * p.beta +
                       0.5 * std::abs(p.alpha * p.alpha + p.beta * p.beta -
                                      p.gamma * p.gamma);
    out.fef_n = std::max(raw, 0.0);
    out.concurrence =
        2.0 * p.gamma * std::sqrt(p.alpha * p.alpha + p.beta * p.beta);
    return out;
}

}  // namespace fef
