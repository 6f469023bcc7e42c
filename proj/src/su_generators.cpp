#include "fef/su_generators.hpp"

#include <cmath>

namespace fef {

GeneratorBasis build_generator_basis(int d) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidDimension,
                    "build_generator_basis: d must be >= 2, got " +
                        std::to_string(d));
    }
    GeneratorBasis basis;
    basis.d = d;
    basis.generators.reserve(d * d - 1);
    const Complex I(0.0, 1.0);

    for (int k = 0; k < d; ++k) {
        for (int l = k + 1; l < d; ++l) {
            ComplexMatrix g = ComplexMatrix::Zero(d, d);
            g(k, l) = 1.0;
            g(l, k) = 1.0;
            basis.generators.push_back(g);
        }
    }
    for (int k = 0; k < d; ++k) {
        for (int l = k + 1; l < d; ++l) {
            ComplexMatrix g = ComplexMatrix::Zero(d, d);
            g(k, l) = -I;
            g(l, k) = I;
            basis.generators.push_back(g);
        }
    }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix g = ComplexMatrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int k = 0; k < l; ++k) g(k, k) = scale;
        g(l, l) = -scale * l;
        basis.generators.push_back(g);
    }
    return basis;
}

double check_completeness(const GeneratorBasis& basis) {
    const int d = basis.d;
    double worst = 0.0;
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n) {
                    Complex sum = 0.0;
                    for (const auto& g : basis.generators)
                        sum += g(k, i) * g(m, n);
                    const double expected =
                        2.0 * (i == m) * (k == n) - (2.0 / d) * (k == i) * (m == n);
                    worst = std::max(worst, std::abs(sum - expected));
                }
    return worst;
}

double gram_deviation(const GeneratorBasis& basis) {
    const int n = basis.count();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex tr =
                (basis.generators[i] * basis.generators[j]).trace();
            const double expected = (i == j) ? 2.0 : 0.0;
            worst = std::max(worst, std::abs(tr - expected));
        }
    return worst;
}

GeneratorBasis rotate_basis(const GeneratorBasis& basis, const RealMatrix& o) {
    const int n = basis.count();
    if (o.rows() != n || o.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "rotate_basis: rotation is " + std::to_string(o.rows()) +
                        "x" + std::to_string(o.cols()) + ", expected " +
                        std::to_string(n));
    }
    const double dev =
        (o * o.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > 1e-9) {
        throw Error(ErrorKind::NotOrthogonal,
                    "rotate_basis: o o^T deviates from identity by " +
                        std::to_string(dev),
                    dev);
    }
    GeneratorBasis out;
    out.d = basis.d;
    out.generators.reserve(n);
    for (int i = 0; i < n; ++i) {
        ComplexMatrix g = ComplexMatrix::Zero(basis.d, basis.d);
        for (int j = 0; j < n; ++j) g += o(i, j) * basis.generators[j];
        out.generators.push_back(std::move(g));
    }
    return out;
}

}  // namespace fef
