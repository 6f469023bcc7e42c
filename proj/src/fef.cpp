#include "fef/fef.hpp"

#include <cmath>
#include <stdexcept>

namespace fef {

namespace {

const GeneratorBasis& pauli_basis() {
    static const GeneratorBasis basis = build_generator_basis(2);
    return basis;
}

ComplexMatrix make_bell_matrix() {
    const Complex I(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix b(4, 4);
    b << s, 0, 0, I * s,
         0, I * s, -s, 0,
         0, I * s, s, 0,
         s, 0, 0, -I * s;
    const double dev =
        (b.adjoint() * b - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        throw std::logic_error("bell_basis_matrix: transcription error, "
                               "unitarity deviation " + std::to_string(dev));
    }
    return b;
}

}  // namespace

const ComplexMatrix& bell_basis_matrix() {
    static const ComplexMatrix b = make_bell_matrix();
    return b;
}

double fidelity(const DensityMatrix& rho) {
    if (rho.dim_a != rho.dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "fidelity: local dims differ (" + std::to_string(rho.dim_a) +
                        " vs " + std::to_string(rho.dim_b) + ")");
    }
    const ComplexVector v = max_entangled_ket(rho.dim_a);
    const Complex val = v.dot(rho.matrix * v);
    if (std::abs(val.imag()) > 1e-12) {
        throw Error(ErrorKind::ImaginaryResidue,
                    "fidelity: imaginary residue " + std::to_string(val.imag()),
                    std::abs(val.imag()));
    }
    if (val.real() < -1e-10) {
        throw Error(ErrorKind::NotPositive,
                    "fidelity: negative expectation " +
                        std::to_string(val.real()),
                    val.real());
    }
    return std::max(val.real(), 0.0);
}

double fef_upper_bound(const DensityMatrix& rho, const GeneratorBasis& basis) {
    const RealMatrix m_rho = correlation_matrix(rho, basis);
    const RealMatrix m_plus =
        correlation_matrix(max_entangled_projector(basis.d), basis);
    const double d = basis.d;
    const RealMatrix product = m_rho.transpose() * m_plus;
    return 1.0 / (d * d) + 4.0 * ky_fan_norm(product);
}

double fef_two_qubit_kyfan(const DensityMatrix& rho) {
    if (rho.dim_a != 2 || rho.dim_b != 2) {
        throw Error(ErrorKind::DimensionMismatch,
                    "fef_two_qubit_kyfan: state is " +
                        std::to_string(rho.dim_a) + "x" +
                        std::to_string(rho.dim_b) + ", need 2x2");
    }
    return fef_upper_bound(rho, pauli_basis());
}

double fef_two_qubit_bell(const DensityMatrix& rho) {
    if (rho.dim_a != 2 || rho.dim_b != 2) {
        throw Error(ErrorKind::DimensionMismatch,
                    "fef_two_qubit_bell: state is " +
                        std::to_string(rho.dim_a) + "x" +
                        std::to_string(rho.dim_b) + ", need 2x2");
    }
    const ComplexMatrix& b = bell_basis_matrix();
    const RealMatrix sym = (b.adjoint() * rho.matrix * b).real();
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(
        0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double normalized_fef(double fef_value) {
    if (!(fef_value >= 0.0 && fef_value <= 1.0 + 1e-9)) {
        throw Error(ErrorKind::OutOfRange,
                    "normalized_fef: value " + std::to_string(fef_value) +
                        " outside [0, 1]",
                    fef_value);
    }
    return std::max(2.0 * fef_value - 1.0, 0.0);
}

double two_qubit_t_det(const DensityMatrix& rho) {
    const RealMatrix t = 4.0 * correlation_matrix(rho, pauli_basis());
    return t.determinant();
}

FefReport compute_report(const DensityMatrix& rho,
                         const GeneratorBasis& basis) {
    FefReport report;
    report.dim_a = rho.dim_a;
    report.dim_b = rho.dim_b;
    report.fidelity = fidelity(rho);
    report.upper_bound = fef_upper_bound(rho, basis);
    if (rho.dim_a == 2 && rho.dim_b == 2) {
        report.exact_two_qubit = fef_two_qubit_kyfan(rho);
        report.bell_cross_check = fef_two_qubit_bell(rho);
        report.normalized = normalized_fef(*report.exact_two_qubit);
    }
    return report;
}

}  // namespace fef
