#include "fef/oracle.hpp"

#include <cmath>
#include <vector>

#include "fef/sampling.hpp"

namespace fef {

namespace {

ComplexMatrix exp_i_hermitian_2x2(const ComplexMatrix& h) {
    // H = t I + b.sigma  =>  exp(iH) = e^{it} (cos|b| I + i sin|b| b^.sigma)
    const double t = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double b3 = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double b1 = h(0, 1).real();
    const double b2 = -h(0, 1).imag();
    const double r = std::sqrt(b1 * b1 + b2 * b2 + b3 * b3);
    const double c = std::cos(r);
    const double s = (r > 0.0) ? std::sin(r) / r : 1.0;
    const Complex phase = std::polar(1.0, t);
    const Complex I(0.0, 1.0);
    ComplexMatrix u(2, 2);
    u(0, 0) = phase * (c + I * s * b3);
    u(0, 1) = phase * (I * s * (b1 - I * b2));
    u(1, 0) = phase * (I * s * (b1 + I * b2));
    u(1, 1) = phase * (c - I * s * b3);
    return u;
}

ComplexMatrix hermitian_from_params(const std::vector<double>& p, int d) {
    ComplexMatrix h(d, d);
    for (int i = 0; i < d; ++i) h(i, i) = p[i];
    int idx = d;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            h(i, j) = Complex(p[idx], p[idx + 1]);
            h(j, i) = std::conj(h(i, j));
            idx += 2;
        }
    return h;
}

struct Objective {
    const ComplexMatrix& rho;
    int d;

    double operator()(const std::vector<double>& p) const {
        const ComplexMatrix h = hermitian_from_params(p, d);
        const ComplexMatrix u = exp_i_hermitian(h);
        // (I⊗U)|psi_+> has component U(j,i)/sqrt(d) at |ij>, so the
        // two amplitude factors contribute 1/d overall.
        Complex value = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Complex row = 0.0;
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l)
                        row += rho(i * d + j, k * d + l) * u(l, k);
                value += std::conj(u(j, i)) * row;
            }
        return value.real() / d;
    }
};

}  // namespace

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
    if (h.rows() == 2) return exp_i_hermitian_2x2(h);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const ComplexMatrix& v = solver.eigenvectors();
    ComplexVector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::polar(1.0, solver.eigenvalues()(k));
    return v * phases.asDiagonal() * v.adjoint();
}

double entangled_overlap(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (rho.dim_a != rho.dim_b || u.rows() != rho.dim_b || u.cols() != rho.dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "entangled_overlap: need equal local dims matching U");
    }
    const int d = rho.dim_a;
    ComplexVector w(d * d);
    const double amp = 1.0 / std::sqrt(double(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w(i * d + j) = u(j, i) * amp;
    return (w.adjoint() * rho.matrix * w)(0, 0).real();
}

OracleResult oracle_fef(const DensityMatrix& rho, const OracleConfig& cfg) {
    if (rho.dim_a != rho.dim_b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "oracle_fef: local dims differ (" +
                        std::to_string(rho.dim_a) + " vs " +
                        std::to_string(rho.dim_b) + ")");
    }
    if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.step_tol > 0.0)) {
        throw Error(ErrorKind::OutOfRange,
                    "oracle_fef: restarts, max_iters and step_tol must be "
                    "positive");
    }
    const int d = rho.dim_a;
    const int n_params = d * d;
    const Objective objective{rho.matrix, d};

    OracleResult result;
    result.best_value = -1.0;
    std::vector<double> p(n_params), best_p(n_params);

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        if (restart == 0) {
            std::fill(p.begin(), p.end(), 0.0);  // U = I
        } else {
            auto rng = seeded_rng(substream_seed(cfg.seed, restart));
            std::normal_distribution<double> normal(0.0, M_PI / 2.0);
            for (double& x : p) x = normal(rng);
        }

        double value = objective(p);
        double step = 0.5;
        for (int iter = 0; iter < cfg.max_iters && step >= cfg.step_tol;
             ++iter) {
            bool improved = false;
            for (int c = 0; c < n_params; ++c) {
                for (const double delta : {step, -step}) {
                    p[c] += delta;
                    const double trial = objective(p);
                    if (trial > value) {
                        value = trial;
                        improved = true;
                        break;
                    }
                    p[c] -= delta;
                }
            }
            if (!improved) step *= 0.5;
        }

        if (value > result.best_value) {
            result.best_value = value;
            result.best_restart = restart;
            best_p = p;
        }
    }

    result.best_unitary = exp_i_hermitian(hermitian_from_params(best_p, d));
    return result;
}

}  // namespace fef
