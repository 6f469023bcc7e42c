#pragma once

#include <complex>

#include <Eigen/Dense>

#include "fef/errors.hpp"

namespace fef {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-9;

/// Largest absolute deviation from Hermiticity, max |m - m^dag|.
double hermiticity_deviation(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, descending. The input is checked
/// against kHermTol and symmetrized before the solve, so results are
/// exactly real. Throws NonSquare / NotHermitian.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Singular values, descending (Jacobi SVD: deterministic, no RNG).
RealVector singular_values(const ComplexMatrix& m);
RealVector singular_values(const RealMatrix& m);

/// Ky Fan (trace) norm: sum of all singular values.
double ky_fan_norm(const RealMatrix& m);
double ky_fan_norm(const ComplexMatrix& m);

/// Kronecker product, row-major block convention:
/// (a ⊗ b)[i*rb + k][j*cb + l] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on C^{da} ⊗ C^{db} with the composite
/// index convention row = i*db + j. `keep` selects the surviving factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep);

}  // namespace fef
