#include "xgbm/model.hpp"

#include "xgbm/specfun.hpp"

#include <cmath>

namespace xgbm {

ReducedCoeffs reduce(double omega_like, double theta, double xi, double rho,
                     Cplx z, ZSign sign, double beta) {
    const double s = (sign == ZSign::plus) ? 1.0 : -1.0;
    const double xi2 = xi * xi;
    ReducedCoeffs rc;
    rc.tilde_omega = 2.0 * omega_like / xi2;
    rc.theta_z = (2.0 / xi2) * (theta + s * I * z * rho * xi);
    // c_z^{-s}(beta) = (z^2 - s i z (1 - 2 beta)) / xi^2
    rc.c_z = (z * z - s * I * z * (1.0 - 2.0 * beta)) / xi2;
    rc.r_z = std::sqrt(rc.theta_z * rc.theta_z + 4.0 * rc.c_z);
    rc.gamma_z = 0.5 * (rc.r_z - rc.theta_z);
    rc.zeta_z = 0.5 * (1.0 + rc.theta_z / rc.r_z);
    rc.psi_z = rc.tilde_omega * rc.gamma_z / rc.r_z;
    return rc;
}

QParams p_to_q(const PParams& p, double r, double q, double lambda_v) {
    p.validate();
    QParams out;
    out.r = r;
    out.q = q;
    out.omega_q = p.omega - lambda_v * p.xi;
    out.theta = p.theta;
    out.xi = p.xi;
    out.rho = p.rho;
    if (out.omega_q < 0.0)
        throw DomainError("p_to_q: omega_q = omega - lambda_v xi is negative");
    return out;
}

double lambda_e(const PParams& p, double r, double q, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("lambda_e: requires sigma > 0");
    return (p.alpha + p.beta * sigma * sigma - (r - q)) / sigma;
}

double stationary_density(double tilde_omega, double tilde_theta, double y) {
    if (!(tilde_omega > 1.0))
        throw RegimeError("stationary_density: no stationary limit for tilde_omega <= 1");
    if (!(tilde_theta > 0.0 && y > 0.0))
        throw DomainError("stationary_density: requires tilde_theta > 0, y > 0");
    double lg = std::lgamma(tilde_omega - 1.0);
    return tilde_theta *
           std::exp((tilde_omega - 2.0) * std::log(tilde_theta * y) -
                    tilde_theta * y - lg);
}

double stationary_mean(double tilde_omega, double tilde_theta) {
    if (!(tilde_omega > 1.0))
        throw RegimeError("stationary_mean: no stationary limit for tilde_omega <= 1");
    return (tilde_omega - 1.0) / tilde_theta;
}

} // namespace xgbm
