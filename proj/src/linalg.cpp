#include "fef/linalg.hpp"

#include <Eigen/SVD>

namespace fef {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NonSquare,
                    std::string(what) + ": matrix is " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

double hermiticity_deviation(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    require_square(m, "hermitian_eigenvalues");
    const double dev = hermiticity_deviation(m);
    if (dev > kHermTol) {
        throw Error(ErrorKind::NotHermitian,
                    "hermitian_eigenvalues: deviation " + std::to_string(dev),
                    dev);
    }
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym,
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

RealVector singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

RealVector singular_values(const RealMatrix& m) {
    Eigen::JacobiSVD<RealMatrix> svd(m);
    return svd.singularValues();
}

double ky_fan_norm(const RealMatrix& m) { return singular_values(m).sum(); }

double ky_fan_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep) {
    if (dim_a < 1 || dim_b < 1) {
        throw Error(ErrorKind::InvalidDimension,
                    "partial_trace: dims must be positive");
    }
    require_square(m, "partial_trace");
    if (m.rows() != Eigen::Index(dim_a) * dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "partial_trace: matrix is " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()) + ", expected " +
                        std::to_string(dim_a * dim_b));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int k = 0; k < dim_a; ++k)
                for (int j = 0; j < dim_b; ++j)
                    out(i, k) += m(i * dim_b + j, k * dim_b + j);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int j = 0; j < dim_b; ++j)
        for (int l = 0; l < dim_b; ++l)
            for (int i = 0; i < dim_a; ++i)
                out(j, l) += m(i * dim_b + j, i * dim_b + l);
    return out;
}

}  // namespace fef
