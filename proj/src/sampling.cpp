#include "fef/sampling.hpp"

#include <Eigen/QR>

namespace fef {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

std::mt19937_64 seeded_rng(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

ComplexMatrix complex_gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

RealMatrix real_gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = normal(rng);
    return g;
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
    const ComplexMatrix g = complex_gaussian(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return q;
}

RealMatrix random_orthogonal(int n, std::mt19937_64& rng) {
    const RealMatrix g = real_gaussian(n, n, rng);
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

ComplexVector haar_ket(int n, std::mt19937_64& rng) {
    ComplexVector v = complex_gaussian(n, 1, rng).col(0);
    return v / v.norm();
}

DensityMatrix ginibre_state(int dim_a, int dim_b, std::mt19937_64& rng) {
    const int n = dim_a * dim_b;
    const ComplexMatrix g = complex_gaussian(n, n, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return validate_state(rho, dim_a, dim_b);
}

}  // namespace fef
