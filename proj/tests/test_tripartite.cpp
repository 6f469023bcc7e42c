#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fef/fef.hpp"
#include "fef/sampling.hpp"
#include "fef/tripartite.hpp"

using namespace fef;

namespace {

TriPureState ghz() {
    ComplexVector v = ComplexVector::Zero(8);
    v(0) = v(7) = 1.0 / std::sqrt(2.0);
    return make_tri_state(v);
}

TriPureState basis_ket(int index) {
    ComplexVector v = ComplexVector::Zero(8);
    v(index) = 1.0;
    return make_tri_state(v);
}

const double kThird = 1.0 / std::sqrt(3.0);

}  // namespace

TEST_CASE("state construction and norm check") {
    CHECK_NOTHROW(basis_ket(0));
    ComplexVector bad = ComplexVector::Zero(8);
    bad(0) = 1.1;
    try {
        make_tri_state(bad);
        FAIL("expected NormViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NormViolation);
    }
    CHECK_THROWS_AS(make_tri_state(ComplexVector::Ones(4) * 0.5), Error);
}

TEST_CASE("w state places amplitudes at |100>, |010>, |001>") {
    const WParams p = make_w_params(0.8, 0.6 * 0.8, 0.6 * 0.6);
    // indices 4a+2b+c
    const TriPureState psi = w_state(p);
    CHECK(psi.amplitudes(4) == Complex(p.alpha, 0));
    CHECK(psi.amplitudes(2) == Complex(p.beta, 0));
    CHECK(psi.amplitudes(1) == Complex(p.gamma, 0));
    CHECK(psi.amplitudes(0) == Complex(0, 0));

    const TriPureState phased = w_state(p, {0.3, -1.2, 2.5});
    CHECK(std::abs(phased.amplitudes(4)) == doctest::Approx(p.alpha));
    CHECK(std::arg(phased.amplitudes(2)) == doctest::Approx(-1.2));
}

TEST_CASE("w params validation") {
    CHECK_NOTHROW(make_w_params(kThird, kThird, kThird));
    try {
        make_w_params(1.0, 1.0, 1.0);
        FAIL("expected NormViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NormViolation);
    }
    try {
        make_w_params(-0.6, 0.8, 0.0);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
}

TEST_CASE("schmidt data across AB|C") {
    const SchmidtData product = schmidt_ab_c(basis_ket(0));
    CHECK(product.eta1 == doctest::Approx(1.0));
    CHECK(product.eta2 == doctest::Approx(0.0));

    const SchmidtData sym = schmidt_ab_c(ghz());
    CHECK(sym.eta1 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(sym.eta2 == doctest::Approx(1.0 / std::sqrt(2.0)));

    // singular values of the explicit 4x2 reshape at equal amplitudes
    const SchmidtData w = schmidt_ab_c(w_state(make_w_params(kThird, kThird, kThird)));
    CHECK(w.eta1 == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(w.eta2 == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));

    auto rng = seeded_rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const SchmidtData s = schmidt_ab_c(make_tri_state(haar_ket(8, rng)));
        CHECK(s.eta1 >= s.eta2);
        CHECK(s.eta2 >= 0.0);
        CHECK(s.eta1 * s.eta1 + s.eta2 * s.eta2 ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("reduced AB state of the W family matches the explicit matrix") {
    const WParams p = make_w_params(0.6, 0.48, std::sqrt(1 - 0.36 - 0.2304));
    const std::array<double, 3> phases{0.4, 1.9, -0.7};
    const TriPureState psi = w_state(p, phases);
    const ComplexMatrix ab = reduced_ab(psi).matrix;

    const Complex alpha = psi.amplitudes(4);
    const Complex beta = psi.amplitudes(2);
    const Complex gamma = psi.amplitudes(1);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = std::norm(gamma);
    expected(1, 1) = std::norm(beta);
    expected(2, 2) = std::norm(alpha);
    expected(2, 1) = alpha * std::conj(beta);
    expected(1, 2) = beta * std::conj(alpha);
    CHECK(ab.isApprox(expected, 1e-12));
}

TEST_CASE("concurrence across AB|C") {
    CHECK(concurrence_ab_c(basis_ket(0)) == doctest::Approx(0.0));
    CHECK(concurrence_ab_c(ghz()) == doctest::Approx(1.0).epsilon(1e-12));

    auto rng = seeded_rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        // closed form 2 gamma sqrt(alpha^2 + beta^2) for the W family
        ComplexVector g = complex_gaussian(3, 1, rng).col(0);
        const double norm = g.cwiseAbs().norm();
        const double a = std::abs(g(0)) / norm;
        const double b = std::abs(g(1)) / norm;
        const double c = std::abs(g(2)) / norm;
        const WParams p = make_w_params(a, b, c);
        CHECK(concurrence_ab_c(w_state(p)) ==
              doctest::Approx(2.0 * c * std::sqrt(a * a + b * b))
                  .epsilon(1e-10));
    }
}

TEST_CASE("tradeoff fixtures") {
    const TradeoffResult g = fef_concurrence_tradeoff(ghz());
    CHECK(g.fef_n == doctest::Approx(0.0));
    CHECK(g.bound == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(std::abs(g.slack) < 1e-7);

    const TradeoffResult product = fef_concurrence_tradeoff(basis_ket(0));
    CHECK(product.fef_n == doctest::Approx(0.0));
    CHECK(product.bound == doctest::Approx(1.0));
    CHECK(product.slack == doctest::Approx(1.0));

    const TradeoffResult w =
        fef_concurrence_tradeoff(w_state(make_w_params(kThird, kThird, kThird)));
    CHECK(w.fef_n == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(w.bound == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::abs(w.slack) < 1e-9);
}

TEST_CASE("tradeoff inequality holds on random pure states") {
    auto rng = seeded_rng(33);
    double min_slack = 1.0;
    for (int trial = 0; trial < 300; ++trial) {
        const TradeoffResult r =
            fef_concurrence_tradeoff(make_tri_state(haar_ket(8, rng)));
        CHECK(r.slack >= -1e-9);
        min_slack = std::min(min_slack, r.slack);
    }
    CHECK(min_slack >= -1e-9);
}

TEST_CASE("saturation on the equal-amplitude slice below sqrt(2)/2") {
    const double top = std::sqrt(2.0) / 2.0;
    for (int k = 0; k < 50; ++k) {
        const double gamma = top * k / 49.0;
        const double ab = std::sqrt((1.0 - gamma * gamma) / 2.0);
        const TradeoffResult r =
            fef_concurrence_tradeoff(w_state(make_w_params(ab, ab, gamma)));
        CHECK(std::abs(r.slack) < 1e-9);
    }
    // strictly separated beyond the saturation window
    const double gamma = 0.9;
    const double ab = std::sqrt((1.0 - gamma * gamma) / 2.0);
    const TradeoffResult r =
        fef_concurrence_tradeoff(w_state(make_w_params(ab, ab, gamma)));
    CHECK(r.slack > 0.5);
    CHECK(r.fef_n == doctest::Approx(0.0));
    CHECK(r.bound == doctest::Approx(0.62).epsilon(1e-9));
}

TEST_CASE("closed forms match the matrix path, phases included") {
    const WClosedForms bell_like =
        w_closed_forms(make_w_params(1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0));
    CHECK(bell_like.fef_n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell_like.concurrence == doctest::Approx(0.0));

    const WClosedForms equal =
        w_closed_forms(make_w_params(kThird, kThird, kThird));
    CHECK(equal.fef_n == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(equal.concurrence ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));

    const WClosedForms degenerate = w_closed_forms(make_w_params(0, 0, 1));
    CHECK(degenerate.fef_n == 0.0);
    CHECK(degenerate.concurrence == 0.0);

    auto rng = seeded_rng(34);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    for (int trial = 0; trial < 100; ++trial) {
        ComplexVector g = complex_gaussian(3, 1, rng).col(0);
        const double norm = g.cwiseAbs().norm();
        const WParams p = make_w_params(std::abs(g(0)) / norm,
                                        std::abs(g(1)) / norm,
                                        std::abs(g(2)) / norm);
        const std::array<double, 3> phases{angle(rng), angle(rng), angle(rng)};
        const TriPureState psi = w_state(p, phases);

        const WClosedForms closed = w_closed_forms(p);
        const double fef_n_matrix =
            normalized_fef(fef_two_qubit_kyfan(reduced_ab(psi)));
        CHECK(std::abs(closed.fef_n - fef_n_matrix) < 1e-9);
        CHECK(std::abs(closed.concurrence - concurrence_ab_c(psi)) < 1e-9);
    }
}
