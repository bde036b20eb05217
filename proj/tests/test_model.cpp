#include "doctest.h"

#include "xgbm/model.hpp"
#include "xgbm/quadrature.hpp"

#include <cmath>
#include <random>

using namespace xgbm;

TEST_CASE("p_to_q maps omega and preserves (theta, xi, rho)") {
    PParams p;
    p.alpha = 0.07;
    p.beta = 0.4;
    p.omega = 1.0;
    p.theta = 4.0;
    p.xi = 1.0;
    p.rho = -0.6;

    QParams q0 = p_to_q(p, 0.02, 0.01, 0.0);
    CHECK(q0.omega_q == doctest::Approx(p.omega).epsilon(1e-15));

    QParams q = p_to_q(p, 0.02, 0.01, 0.5);
    CHECK(q.omega_q == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.theta == p.theta);
    CHECK(q.xi == p.xi);
    CHECK(q.rho == p.rho);
    CHECK(q.r == 0.02);
    CHECK(q.q == 0.01);

    CHECK_THROWS_AS(p_to_q(p, 0.0, 0.0, 1.5), DomainError);
}

TEST_CASE("lambda_e") {
    PParams p;
    p.alpha = 0.05;
    p.beta = 0.0;
    p.omega = 1.0;
    p.theta = 4.0;
    p.xi = 1.0;
    CHECK(lambda_e(p, 0.05, 0.0, 0.2) == doctest::Approx(0.0));
    p.alpha = 0.0;
    p.beta = 1.0;
    CHECK(lambda_e(p, 0.0, 0.0, 0.2) == doctest::Approx(0.2));
    CHECK_THROWS_AS(lambda_e(p, 0.0, 0.0, -1.0), DomainError);
}

TEST_CASE("reduce: pinned Q-side point") {
    // omega_q=1, theta=4, xi=1, rho=0 at z = i/2
    QParams qp;
    qp.omega_q = 1.0;
    qp.theta = 4.0;
    qp.xi = 1.0;
    qp.rho = 0.0;
    ReducedCoeffs rc = reduce_q(qp, Cplx(0.0, 0.5));
    CHECK(rc.theta_z.real() == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(std::abs(rc.theta_z.imag()) < 1e-14);
    CHECK(rc.c_z.real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(rc.c_z.imag()) < 1e-14);
    CHECK(rc.psi_z.real() == doctest::Approx(0.0077221232).epsilon(1e-7));

    // z = 0: drift-free Fourier origin
    ReducedCoeffs rc0 = reduce_q(qp, Cplx(0.0, 0.0));
    CHECK(std::abs(rc0.c_z) < 1e-15);
    CHECK(std::abs(rc0.gamma_z) < 1e-15);
    CHECK(std::abs(rc0.psi_z) < 1e-15);
    CHECK(std::abs(rc0.zeta_z - 1.0) < 1e-15);
}

TEST_CASE("reduce: algebraic invariants on random strip points") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    QParams qp;
    qp.omega_q = 0.8;
    qp.theta = 3.0;
    qp.xi = 1.3;
    qp.rho = -0.7;
    for (int i = 0; i < 40; ++i) {
        Cplx z(40.0 * u(gen), u(gen) * 0.98 + 0.01);
        ReducedCoeffs rc = reduce_q(qp, z);
        Cplx resid = rc.r_z * rc.r_z - rc.theta_z * rc.theta_z - 4.0 * rc.c_z;
        CHECK(std::abs(resid) <
              1e-12 * std::max(1.0, std::abs(rc.r_z * rc.r_z)));
        CHECK(std::abs(rc.gamma_z - 0.5 * (rc.r_z - rc.theta_z)) < 1e-13 * (1.0 + std::abs(rc.r_z)));
        CHECK(std::abs(rc.zeta_z - 0.5 * (1.0 + rc.theta_z / rc.r_z)) < 1e-13);
        CHECK(std::abs(rc.psi_z - rc.tilde_omega * rc.gamma_z / rc.r_z) < 1e-13);
        CHECK(rc.r_z.real() > 0.0);
        // key relation a_nu(-nu) + 2 i nu = a_nu(nu)
        double nu = 3.0 * u(gen);
        CHECK(std::abs(rc.a_nu(-nu) + Cplx(0, 2 * nu) - rc.a_nu(nu)) < 1e-14);
    }
}

TEST_CASE("reduce: real-axis inequalities and strip positivity") {
    PParams pp;
    pp.alpha = 0.0;
    pp.beta = 0.3;
    pp.omega = 2.0;
    pp.theta = 4.0;
    pp.xi = 1.0;
    pp.rho = -0.8;
    for (double x : {0.0, 0.3, 1.0, 5.0, 40.0, 150.0}) {
        ReducedCoeffs rc = reduce_p(pp, Cplx(x, 0.0));
        CHECK(rc.theta_z.real() >= 0.0);
        CHECK(rc.c_z.real() >= 0.0);
    }
    QParams qp;
    qp.omega_q = 2.0;
    qp.theta = 4.0;
    qp.xi = 1.0;
    qp.rho = -0.8;
    for (double x = 0.0; x <= 200.0; x += 2.5) {
        ReducedCoeffs rc = reduce_q(qp, Cplx(x, 0.5));
        CHECK((rc.theta_z + rc.gamma_z).real() > 0.0);
    }
}

TEST_CASE("reduce: sign flip plus conjugated z conjugates theta_z") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Cplx z(5.0 * u(gen), u(gen));
        double om = 1.3, th = 2.7, xi = 0.9, rho = 0.4, beta = 0.2;
        ReducedCoeffs plus = reduce(om, th, xi, rho, z, ZSign::plus, beta);
        ReducedCoeffs minus =
            reduce(om, th, xi, rho, std::conj(z), ZSign::minus, beta);
        CHECK(std::abs(minus.theta_z - std::conj(plus.theta_z)) < 1e-13);
    }
}

TEST_CASE("stationary density: pinned means, unit mass") {
    CHECK(stationary_mean(2.0, 8.0) == doctest::Approx(0.125));
    CHECK(stationary_mean(4.0, 8.0) == doctest::Approx(0.375));
    for (double om : {1.5, 2.0, 3.7}) {
        // y = u^2 tames the integrable y^{om-2} endpoint for om < 2
        auto f = [&](double u) -> Cplx {
            return 2.0 * u * stationary_density(om, 8.0, u * u);
        };
        auto mass = quad::integrate_decaying(f, 0.0, 0.1, 7.0, 1e-12, 1e-11);
        CHECK(std::abs(mass.value.real() - 1.0) < 1e-10);
        auto mean = quad::integrate_decaying(
            [&](double u) -> Cplx {
                return 2.0 * u * u * u * stationary_density(om, 8.0, u * u);
            },
            0.0, 0.1, 7.0, 1e-12, 1e-11);
        CHECK(mean.value.real() ==
              doctest::Approx(stationary_mean(om, 8.0)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(stationary_density(0.9, 8.0, 0.1), RegimeError);
}
