#ifndef XGBM_PRICING_HPP
#define XGBM_PRICING_HPP

// European put valuation from the fundamental transform, implied-volatility
// reporting, and the small-T / large-T asymptotic formulas.

#include "xgbm/model.hpp"
#include "xgbm/transform.hpp"
#include "xgbm/types.hpp"

namespace xgbm::pricing {

struct OptionSpec {
    double s0 = 100.0;     // spot
    double k = 100.0;      // strike
    double t = 1.0;        // years
    double sigma0 = 0.2;   // initial vol

    void validate() const {
        if (!(s0 > 0.0 && k > 0.0 && t > 0.0 && sigma0 > 0.0))
            throw DomainError("OptionSpec: all fields must be positive");
    }
};

struct PriceResult {
    double price = 0.0;
    // K e^{-rT} - price carried separately: for very large T the put is
    // within machine epsilon of its upper bound and only the complement
    // retains relative precision for the implied vol.
    double complement = 0.0;
    double implied_vol = 0.0;
    transform::TransformDiagnostics diagnostics;
};

// Put payoff factor 1/(z^2 - i z); z must lie strictly inside the strip
// 0 < Im z < 1.
Cplx payoff_transform(Cplx z);

double black_scholes_put(double s0, double k, double t, double r, double q,
                         double sigma);
// K e^{-rT} - P computed as a sum of positive terms.
double bs_put_complement(double s0, double k, double t, double r, double q,
                         double sigma);

// Black-Scholes put vol by safeguarded bracketing to 1e-10.
double implied_vol(double price, const OptionSpec& opt, double r, double q);
double implied_vol_from_complement(double complement, const OptionSpec& opt,
                                   double r, double q);

PriceResult put_price(const OptionSpec& opt, const QParams& qp,
                      const QuadCfg& cfg);

// T -> 0 smile limit (SABR variance-covariance structure; drifts drop out).
double smile_small_t(double k, const OptionSpec& opt, double xi, double rho);

struct LargeTAsymptotics {
    double lambda_star;    // principal eigenvalue / mass gap
    double sigma_imp_inf;  // sqrt(8 lambda*)
};
// Case 1, martingale-preserving regime (rho <= theta/xi).
LargeTAsymptotics large_t_asymptotics(const QParams& qp);

// Case 2 T = infinity limit via the stationary transform; requires r = q = 0.
double put_price_infinity_case2(const OptionSpec& opt, const QParams& qp,
                                const QuadCfg& cfg);

} // namespace xgbm::pricing

#endif
