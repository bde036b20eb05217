#include "xgbm/green.hpp"

#include "xgbm/quadrature.hpp"
#include "xgbm/specfun.hpp"

#include <cmath>

namespace xgbm::green {

using specfun::kummer_m;
using specfun::log_abs_gamma_imag_sq;
using specfun::log_gamma;
using specfun::pochhammer;
using specfun::tricomi_u;

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

SpectralData spectral_data(const AuxCoeffs& aux) {
    SpectralData sd;
    sd.r = std::sqrt(aux.theta * aux.theta + 4.0 * aux.c);
    sd.gamma = 0.5 * (sd.r - aux.theta);
    sd.psi = (std::abs(sd.r) == 0.0) ? Cplx{0.0, 0.0}
                                     : aux.omega * sd.gamma / sd.r;
    double margin = 0.5 * (aux.omega - 1.0) - sd.psi.real();
    if (margin > 1e-9) {
        sd.n_max = int(std::floor(margin));
        // a pole exactly on the boundary does not enter (strict indicator)
        if (double(sd.n_max) >= margin - 1e-9) --sd.n_max;
    }
    for (int n = 0; n <= sd.n_max; ++n) {
        Cplx np = double(n) + sd.psi;
        sd.poles.push_back(np * np + (1.0 - aux.omega) * np);
    }
    return sd;
}

namespace {

// Panel width resolving the (r^2 y y')^{i nu} oscillation; adaptivity
// refines within panels.
double nu_panel_width(Cplx r, double y, double y2) {
    double l = std::abs(std::log(r * r * y * y2));
    return std::min(1.0, kPi / (1.0 + l));
}

} // namespace

Cplx green_spectral(double tau, double y, double y2, const AuxCoeffs& aux,
                    const QuadCfg& cfg) {
    if (!(tau > 0.0) || !(y > 0.0) || !(y2 > 0.0))
        throw DomainError("green_spectral: requires tau, y, y2 > 0");
    const SpectralData sd = spectral_data(aux);
    const double om = aux.omega;
    const Cplx r = sd.r, gamma = sd.gamma, psi = sd.psi;
    const Cplx log_ry = std::log(r * y), log_ry2 = std::log(r * y2);

    Cplx total{0.0, 0.0};
    if (sd.has_discrete()) {
        // R (R y')^{om-2} e^{-gamma y - (theta+gamma) y'} sum phi_n e^{s_n tau}
        Cplx pref = r * std::exp((om - 2.0) * log_ry2 - gamma * y -
                                 (aux.theta + gamma) * y2);
        Cplx sum{0.0, 0.0};
        double nfact = 1.0;
        for (int n = 0; n <= sd.n_max; ++n) {
            if (n > 0) nfact *= double(n);
            Cplx rn = -(double(n) + psi);
            Cplx bn = om + 2.0 * rn;
            Cplx phi = (om - 1.0 - 2.0 * n - 2.0 * psi) * pochhammer(bn, n) /
                       nfact * std::exp(-log_gamma(bn)) *
                       std::exp(rn * (log_ry + log_ry2)) *
                       kummer_m(Cplx(-double(n)), bn, r * y) *
                       kummer_m(Cplx(-double(n)), bn, r * y2);
            sum += phi * std::exp(sd.poles[size_t(n)] * tau);
        }
        total += pref * sum;
    }

    // continuous spectrum; weight e^{-(nu^2 + (1-om)^2/4) tau}
    const double cut_decay = 0.25 * (1.0 - om) * (1.0 - om) * tau;
    if (cut_decay < 700.0) {
        Cplx pref = std::exp((om - 2.0) * std::log(y2) +
                             0.5 * (1.0 - om) * (std::log(y) + std::log(y2)) -
                             gamma * y - (aux.theta + gamma) * y2);
        auto integrand = [&](double nu) -> Cplx {
            Cplx anu = Cplx(0.5 * (1.0 - om), nu) + psi;
            Cplx amnu = Cplx(0.5 * (1.0 - om), -nu) + psi;
            Cplx bnu(1.0, 2.0 * nu);
            Cplx logpref = log_gamma(anu) + log_gamma(amnu) -
                           log_abs_gamma_imag_sq(2.0 * nu) +
                           Cplx(0.0, nu) * (log_ry + log_ry2) -
                           (nu * nu * tau + cut_decay);
            return std::exp(logpref) / (2.0 * kPi) *
                   tricomi_u(anu, bnu, r * y) * tricomi_u(anu, bnu, r * y2);
        };
        double numax =
            cfg.nu_max > 0.0 ? cfg.nu_max : std::sqrt(41.0 / tau) + 2.0;
        numax = std::min(numax, 2000.0);
        quad::TailPolicy tail;
        tail.consecutive = 4;
        tail.factor = 1e-13;
        auto res = quad::integrate_decaying(integrand, 0.0,
                                            nu_panel_width(r, y, y2), numax,
                                            cfg.abs_tol, cfg.rel_tol, tail);
        total += pref * res.value;
        double tol = std::max(10.0 * cfg.abs_tol,
                              100.0 * cfg.rel_tol * std::abs(total));
        if (std::abs(pref) * res.error > tol + 1e-12)
            throw ConvergenceError("green_spectral: nu-quadrature failed",
                                   std::abs(pref) * res.error, tol);
    }
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
        throw ConvergenceError("green_spectral: non-finite result", 1.0, 0.0);
    return total;
}

Cplx green_hat(Cplx s, double y, double y2, const AuxCoeffs& aux) {
    const double om = aux.omega;
    Cplx r = std::sqrt(aux.theta * aux.theta + 4.0 * aux.c);
    Cplx gamma = 0.5 * (r - aux.theta);
    Cplx psi = (std::abs(r) == 0.0) ? Cplx{0.0, 0.0} : om * gamma / r;
    Cplx root = std::sqrt(Cplx((1.0 - om) * (1.0 - om)) + 4.0 * s);
    Cplx rs = 0.5 * (1.0 - om) + 0.5 * root;
    Cplx bs = 1.0 + root; // = om + 2 rs
    Cplx as = rs + psi;
    Cplx logpref = log_gamma(as) - log_gamma(bs) + (bs - 1.0) * std::log(r) +
                   rs * std::log(y) + (rs + om - 2.0) * std::log(y2) -
                   gamma * y - (gamma + aux.theta) * y2;
    double ylo = std::min(y, y2), yhi = std::max(y, y2);
    return std::exp(logpref) * kummer_m(as, bs, r * ylo) *
           tricomi_u(as, bs, r * yhi);
}

Cplx green_bromwich(double tau, double y, double y2, const AuxCoeffs& aux,
                    const QuadCfg& cfg) {
    if (!(tau > 0.0)) throw DomainError("green_bromwich: requires tau > 0");
    const double s0 = 1.0;
    const double vmax = 400.0 / tau;
    auto eval = [&](long n_steps) -> Cplx {
        const double h = 2.0 * vmax / double(n_steps);
        Cplx acc{0.0, 0.0};
        for (long k = 0; k <= n_steps; ++k) {
            double v = -vmax + h * double(k);
            Cplx val = std::exp(Cplx(0.0, v * tau)) *
                       green_hat(Cplx(s0, v), y, y2, aux);
            acc += (k == 0 || k == n_steps) ? 0.5 * val : val;
        }
        return acc * (h * std::exp(s0 * tau) / (2.0 * kPi));
    };
    long n = 16000; // h tau = 0.05: resolves e^{i v tau} across the window
    Cplx coarse = eval(n), fine = eval(2 * n);
    double tol = std::max(cfg.abs_tol * 100.0,
                          cfg.rel_tol * 100.0 * std::abs(fine));
    double err = std::abs(fine - coarse) / 3.0;
    if (err > tol) { // one Richardson refinement, then report failure
        Cplx finest = eval(4 * n);
        err = std::abs(finest - fine) / 3.0;
        fine = finest;
        if (err > tol)
            throw ConvergenceError("green_bromwich: trapezoid not converged",
                                   err, tol);
    }
    return fine;
}

} // namespace xgbm::green
