#ifndef XGBM_MODEL_HPP
#define XGBM_MODEL_HPP

// Model parameter records, the P -> Q measure map, and the z-dependent
// reduced coefficients of the auxiliary 1D problem. Volatility is annualized
// decimal vol; all rates are per year.

#include "xgbm/types.hpp"

namespace xgbm {

// Real-world dynamics: dS = (alpha + beta s^2) S dt + s S dB,
// ds = s (omega - theta s) dt + xi s dW, corr(dB,dW) = rho.
struct PParams {
    double alpha = 0.0;  // per year
    double beta = 0.0;
    double omega = 0.0;  // per year
    double theta = 0.0;  // per year per vol unit
    double xi = 1.0;     // per sqrt(year)
    double rho = 0.0;

    void validate() const {
        if (!(xi > 0.0)) throw DomainError("PParams: xi must be > 0");
        if (std::abs(rho) > 1.0) throw DomainError("PParams: |rho| must be <= 1");
        if (omega < 0.0) throw DomainError("PParams: omega must be >= 0");
    }
};

// Risk-neutral dynamics: alpha -> r - q, beta -> 0, omega -> omega_q;
// (theta, xi, rho) keep their P-measure values.
struct QParams {
    double r = 0.0;
    double q = 0.0;
    double omega_q = 0.0;
    double theta = 0.0;
    double xi = 1.0;
    double rho = 0.0;

    void validate() const {
        if (!(xi > 0.0)) throw DomainError("QParams: xi must be > 0");
        if (std::abs(rho) > 1.0) throw DomainError("QParams: |rho| must be <= 1");
        if (omega_q < 0.0) throw DomainError("QParams: omega_q must be >= 0");
    }

    double tilde_omega() const { return 2.0 * omega_q / (xi * xi); }
};

// Which sign of i z enters theta_z; the companion c-coefficient always takes
// the opposite sign, which is what pairs Eq.-level P and Q conventions
// without scattered sign flips.
enum class ZSign { plus, minus };

// Everything downstream needs about one Fourier point z.
struct ReducedCoeffs {
    double tilde_omega = 0.0;
    Cplx theta_z;
    Cplx c_z;
    Cplx r_z;      // principal sqrt(theta_z^2 + 4 c_z), Re >= 0
    Cplx gamma_z;  // (r_z - theta_z)/2
    Cplx zeta_z;   // (1 + theta_z/r_z)/2
    Cplx psi_z;    // tilde_omega * gamma_z / r_z

    // Spectral index maps from the risk-neutral notation box.
    Cplx a_nu(double nu) const {
        return Cplx(0.5 * (1.0 - tilde_omega), nu) + psi_z;
    }
    static Cplx b_nu(double nu) { return {1.0, 2.0 * nu}; }
    Cplx c_nu(double nu) const { return {0.5 * (tilde_omega - 1.0), nu}; }
    Cplx r_n(int n) const { return -(double(n) + psi_z); }
    Cplx s_n(int n) const {
        Cplx np = double(n) + psi_z;
        return np * np + (1.0 - tilde_omega) * np;
    }
    Cplx b_n(int n) const { return tilde_omega + 2.0 * r_n(n); }
    Cplx c_n(int n) const { return (tilde_omega - 1.0) + r_n(n); }
};

// Core reduction at Fourier point z. sign selects theta_z^{+/-}; the
// c-coefficient is c_z^{-/+}(beta) respectively. Q usage: sign=plus, beta=0;
// P usage: sign=minus, beta = P-measure beta.
ReducedCoeffs reduce(double omega_like, double theta, double xi, double rho,
                     Cplx z, ZSign sign, double beta = 0.0);

inline ReducedCoeffs reduce_q(const QParams& qp, Cplx z) {
    return reduce(qp.omega_q, qp.theta, qp.xi, qp.rho, z, ZSign::plus, 0.0);
}
inline ReducedCoeffs reduce_p(const PParams& pp, Cplx z) {
    return reduce(pp.omega, pp.theta, pp.xi, pp.rho, z, ZSign::minus, pp.beta);
}

// omega_Q = omega - lambda_v xi; (theta, xi, rho) are preserved exactly.
QParams p_to_q(const PParams& p, double r, double q, double lambda_v);

// Market price of equity risk implied by no-arbitrage.
double lambda_e(const PParams& p, double r, double q, double sigma);

// Stationary density of the standardized stand-alone volatility process,
// Psi(y) = theta~ (theta~ y)^{omega~ - 2} exp(-theta~ y) / Gamma(omega~ - 1).
double stationary_density(double tilde_omega, double tilde_theta, double y);

// Mean of the stationary density, (omega~ - 1)/theta~.
double stationary_mean(double tilde_omega, double tilde_theta);

} // namespace xgbm

#endif
