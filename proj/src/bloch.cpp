#include "fef/bloch.hpp"

#include <cmath>

namespace fef {

namespace {

constexpr double kImagTol = 1e-10;

double real_checked(Complex value, const char* what) {
    if (std::abs(value.imag()) > kImagTol) {
        throw Error(ErrorKind::ImaginaryResidue,
                    std::string(what) + ": imaginary residue " +
                        std::to_string(value.imag()),
                    std::abs(value.imag()));
    }
    return value.real();
}

// Tr(rho K) without forming the product.
Complex trace_product(const ComplexMatrix& rho, const ComplexMatrix& k) {
    return (rho.transpose().cwiseProduct(k)).sum();
}

void require_matching(const DensityMatrix& rho, const GeneratorBasis& basis) {
    if (rho.dim_a != rho.dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "decompose: local dims differ (" +
                        std::to_string(rho.dim_a) + " vs " +
                        std::to_string(rho.dim_b) + ")");
    }
    if (basis.d != rho.dim_a) {
        throw Error(ErrorKind::DimensionMismatch,
                    "decompose: basis is for d=" + std::to_string(basis.d) +
                        ", state has d=" + std::to_string(rho.dim_a));
    }
}

}  // namespace

BlochDecomposition decompose(const DensityMatrix& rho,
                             const GeneratorBasis& basis) {
    require_matching(rho, basis);
    const int d = basis.d;
    const int n = basis.count();

    BlochDecomposition out;
    out.d = d;
    out.r = RealVector(n);
    out.s = RealVector(n);
    out.m = RealMatrix(n, n);

    const ComplexMatrix rho_a =
        partial_trace(rho.matrix, d, d, Subsystem::A);
    const ComplexMatrix rho_b =
        partial_trace(rho.matrix, d, d, Subsystem::B);
    for (int i = 0; i < n; ++i) {
        out.r(i) = 0.5 * real_checked(trace_product(rho_a, basis.generators[i]),
                                      "decompose r");
        out.s(i) = 0.5 * real_checked(trace_product(rho_b, basis.generators[i]),
                                      "decompose s");
    }
    out.m = correlation_matrix(rho, basis);
    return out;
}

DensityMatrix reconstruct(const BlochDecomposition& coeffs,
                          const GeneratorBasis& basis) {
    const int d = basis.d;
    const int n = basis.count();
    if (coeffs.d != d || coeffs.r.size() != n || coeffs.s.size() != n ||
        coeffs.m.rows() != n || coeffs.m.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "reconstruct: coefficient shapes do not match basis d=" +
                        std::to_string(d));
    }
    const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
    ComplexMatrix rho =
        ComplexMatrix::Identity(d * d, d * d) / double(d * d);
    for (int i = 0; i < n; ++i) {
        rho += (coeffs.r(i) / d) * kron(basis.generators[i], eye);
        rho += (coeffs.s(i) / d) * kron(eye, basis.generators[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rho += coeffs.m(i, j) *
                   kron(basis.generators[i], basis.generators[j]);
    try {
        return validate_state(rho, d, d);
    } catch (const Error& e) {
        throw Error(ErrorKind::ReconstructionNotPositive,
                    std::string("reconstruct: rebuilt matrix invalid: ") +
                        e.what(),
                    e.magnitude());
    }
}

RealMatrix correlation_matrix(const DensityMatrix& rho,
                              const GeneratorBasis& basis) {
    require_matching(rho, basis);
    const int n = basis.count();
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const ComplexMatrix prod =
                kron(basis.generators[i], basis.generators[j]);
            m(i, j) = 0.25 * real_checked(trace_product(rho.matrix, prod),
                                          "correlation_matrix");
        }
    return m;
}

}  // namespace fef
