#include "fef/state.hpp"

#include <cmath>

namespace fef {

DensityMatrix validate_state(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (dim_a < 2 || dim_b < 2) {
        throw Error(ErrorKind::InvalidDimension,
                    "validate_state: local dims must be >= 2, got " +
                        std::to_string(dim_a) + "x" + std::to_string(dim_b));
    }
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NonSquare,
                    "validate_state: matrix is " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()));
    }
    if (m.rows() != Eigen::Index(dim_a) * dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "validate_state: matrix order " + std::to_string(m.rows()) +
                        " does not match dim_a*dim_b = " +
                        std::to_string(dim_a * dim_b));
    }
    const double herm_dev = hermiticity_deviation(m);
    if (herm_dev > kHermTol) {
        throw Error(ErrorKind::NotHermitian,
                    "validate_state: Hermiticity deviation " +
                        std::to_string(herm_dev),
                    herm_dev);
    }
    DensityMatrix rho;
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    rho.matrix = 0.5 * (m + m.adjoint());

    const double trace_dev = std::abs(rho.matrix.trace() - Complex(1.0, 0.0));
    if (trace_dev > kTraceTol) {
        throw Error(ErrorKind::TraceNotOne,
                    "validate_state: trace deviates from 1 by " +
                        std::to_string(trace_dev),
                    trace_dev);
    }
    const RealVector eigs = hermitian_eigenvalues(rho.matrix);
    const double min_eig = eigs(eigs.size() - 1);
    if (min_eig < -kPsdSlack) {
        throw Error(ErrorKind::NotPositive,
                    "validate_state: min eigenvalue " + std::to_string(min_eig),
                    min_eig);
    }
    return rho;
}

ComplexVector max_entangled_ket(int d) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidDimension,
                    "max_entangled_ket: d must be >= 2, got " +
                        std::to_string(d));
    }
    ComplexVector v = ComplexVector::Zero(Eigen::Index(d) * d);
    const double amp = 1.0 / std::sqrt(double(d));
    for (int i = 0; i < d; ++i) v(i * d + i) = amp;
    return v;
}

DensityMatrix max_entangled_projector(int d) {
    const ComplexVector v = max_entangled_ket(d);
    return validate_state(v * v.adjoint(), d, d);
}

DensityMatrix product_noise_family(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::OutOfRange,
                    "product_noise_family: x must be in [0,1], got " +
                        std::to_string(x),
                    x);
    }
    ComplexMatrix tau = ComplexMatrix::Zero(3, 3);
    tau(0, 0) = x;
    tau(1, 1) = 1.0 - x;
    const ComplexMatrix sigma = kron(tau, tau);
    const ComplexMatrix plus = max_entangled_projector(3).matrix;
    return validate_state((8.0 / 9.0) * sigma + (1.0 / 9.0) * plus, 3, 3);
}

}  // namespace fef
