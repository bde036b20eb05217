#include "xgbm/pricing.hpp"

#include "xgbm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>
#include <map>

namespace xgbm::pricing {

namespace {
constexpr double kPi = 3.141592653589793238462643;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
} // namespace

Cplx payoff_transform(Cplx z) {
    if (!(z.imag() > 0.0 && z.imag() < 1.0))
        throw DomainError("payoff_transform: z outside the strip 0 < Im z < 1");
    return 1.0 / (z * z - I * z);
}

double black_scholes_put(double s0, double k, double t, double r, double q,
                         double sigma) {
    if (sigma <= 0.0)
        return std::max(k * std::exp(-r * t) - s0 * std::exp(-q * t), 0.0);
    double sq = sigma * std::sqrt(t);
    double d1 = (std::log(s0 / k) + (r - q + 0.5 * sigma * sigma) * t) / sq;
    double d2 = d1 - sq;
    return k * std::exp(-r * t) * norm_cdf(-d2) -
           s0 * std::exp(-q * t) * norm_cdf(-d1);
}

double bs_put_complement(double s0, double k, double t, double r, double q,
                         double sigma) {
    // K e^{-rT} - P = K e^{-rT} N(d2) + S0 e^{-qT} N(-d1): positive terms only
    if (sigma <= 0.0)
        return std::min(k * std::exp(-r * t), s0 * std::exp(-q * t));
    double sq = sigma * std::sqrt(t);
    double d1 = (std::log(s0 / k) + (r - q + 0.5 * sigma * sigma) * t) / sq;
    double d2 = d1 - sq;
    return k * std::exp(-r * t) * norm_cdf(d2) +
           s0 * std::exp(-q * t) * norm_cdf(-d1);
}

double implied_vol_from_complement(double complement, const OptionSpec& opt,
                                   double r, double q) {
    opt.validate();
    const double upper = std::min(opt.k * std::exp(-r * opt.t),
                                  opt.s0 * std::exp(-q * opt.t));
    const double slop = 1e-9 * opt.k;
    if (complement > upper + slop || complement < -slop)
        throw DomainError("implied_vol: price outside no-arbitrage bounds");
    auto C = [&](double sigma) {
        return bs_put_complement(opt.s0, opt.k, opt.t, r, q, sigma);
    };
    if (complement >= C(1e-12)) return 0.0;   // at (or within noise of) intrinsic
    if (complement <= 0.0) throw DomainError("implied_vol: price at upper bound");
    double lo = 1e-12, hi = 1.0;
    while (C(hi) > complement) {
        hi *= 2.0;
        if (hi > 1e4)
            throw DomainError("implied_vol: no volatility matches the price");
    }
    // C is monotone decreasing in sigma
    for (int it = 0; it < 200 && hi - lo > 1e-10 * std::max(1.0, lo); ++it) {
        double mid = 0.5 * (lo + hi);
        (C(mid) > complement ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double implied_vol(double price, const OptionSpec& opt, double r, double q) {
    return implied_vol_from_complement(opt.k * std::exp(-r * opt.t) - price,
                                       opt, r, q);
}

namespace {

// Contour integral I = int_0^inf Re{ e^{-izX} H(z) / (z^2 - iz) } dx along
// z = i c + x.
//
// The driver places panel boundaries at the transition windows (inside a
// window H is served by linear interpolation between the cached edge
// values), grows panel widths geometrically, and stops on a geometric
// tail-sum estimate: H often decays only algebraically in x, which a
// fixed-width monitor would chase for thousands of panels.
struct ContourIntegrator {
    std::function<Cplx(double)> h_of_x; // full H evaluation at z = x + i c
    double X = 0.0;
    double c = 0.5;
    const QuadCfg* cfg = nullptr;
    std::vector<double> transitions;
    int interpolated = 0;
    double interp_error = 0.0;

    struct Window {
        double lo, hi;
        Cplx h_lo, h_hi;
    };
    std::vector<Window> windows;

    void build_windows() {
        double eps = cfg->transition_eps;
        for (double xs : transitions) {
            Window w;
            w.lo = std::max(xs - eps, 0.0);
            w.hi = xs + eps;
            w.h_lo = h_of_x(w.lo);
            w.h_hi = h_of_x(w.hi);
            // curvature probe at the transition point itself (H is smooth
            // there even though its two components jump); shrink the window
            // if linear interpolation would be the dominant error
            Cplx hm = h_of_x(xs);
            double curv = std::abs(w.h_lo + w.h_hi - 2.0 * hm);
            if (curv > 0.2 * cfg->abs_tol && eps > 4e-5) {
                double shrink = std::sqrt(0.2 * cfg->abs_tol / curv);
                double e2 = std::max(eps * std::min(1.0, shrink), 2e-5);
                w.lo = std::max(xs - e2, 0.0);
                w.hi = xs + e2;
                w.h_lo = h_of_x(w.lo);
                w.h_hi = h_of_x(w.hi);
                curv = std::abs(w.h_lo + w.h_hi - 2.0 * hm);
            }
            interp_error += 0.5 * curv;
            windows.push_back(w);
        }
    }

    Cplx h_value(double x) {
        for (const auto& w : windows)
            if (x >= w.lo && x <= w.hi) {
                ++interpolated;
                double t = (x - w.lo) / (w.hi - w.lo);
                return w.h_lo + t * (w.h_hi - w.h_lo);
            }
        return h_of_x(x);
    }

    double integrand(double x) {
        Cplx z(x, c);
        Cplx val = std::exp(-I * z * X) * h_value(x) / (z * z - I * z);
        return val.real();
    }

    struct Result {
        double value = 0.0;
        double error = 0.0;
        double reached = 0.0;
    };

    Result run() {
        build_windows();
        auto f = [&](double x) -> Cplx { return integrand(x); };
        const double abs_tol = cfg->abs_tol, rel_tol = cfg->rel_tol;
        Result out;

        // breakpoints: window edges sorted along the axis
        std::vector<double> edges{0.0};
        for (const auto& w : windows) {
            if (w.lo > edges.back()) edges.push_back(w.lo);
            edges.push_back(w.hi);
        }
        const double w0 = std::min(2.0, kPi / (1.0 + std::abs(X)));
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            double lo = edges[i], hi = edges[i + 1];
            double step = std::min(w0, hi - lo);
            for (double a = lo; a < hi; a += step) {
                double b = std::min(a + step, hi);
                auto p = quad::integrate(f, a, b, abs_tol * 0.05, rel_tol * 0.1);
                out.value += p.value.real();
                out.error += p.error;
            }
        }

        // open tail from the last breakpoint
        double lo = edges.back();
        double width = w0;
        const double width_cap =
            std::abs(X) < 0.02 ? 1e18 : std::max(8.0 * w0, 12.0 / std::abs(X));
        const double cap = cfg->x_max > 0.0 ? cfg->x_max : 1e6;
        double prev_panel = 0.0;
        int quiet = 0;
        while (lo < cap) {
            double hi = std::min(lo + width, cap);
            auto p = quad::integrate(f, lo, hi, abs_tol * 0.05, rel_tol * 0.1);
            out.value += p.value.real();
            out.error += p.error;
            double mag = std::abs(p.value);
            double scale = std::max(std::abs(out.value), abs_tol);
            // geometric tail estimate from consecutive panel magnitudes
            double ratio = (prev_panel > 0.0 && mag > 0.0)
                               ? std::min(mag / prev_panel, 0.9)
                               : 0.9;
            double tail_est = mag * ratio / (1.0 - ratio);
            if (tail_est < std::max(1e-8 * scale, abs_tol * 0.1) &&
                mag < std::max(1e-7 * scale, abs_tol)) {
                if (++quiet >= 2) {
                    out.reached = hi;
                    out.error += tail_est;
                    return out;
                }
            } else {
                quiet = 0;
            }
            prev_panel = mag;
            lo = hi;
            width = std::min(width * 1.7, width_cap);
        }
        out.reached = cap;
        return out;
    }
};

} // namespace

PriceResult put_price(const OptionSpec& opt, const QParams& qp,
                      const QuadCfg& cfg) {
    opt.validate();
    qp.validate();
    cfg.validate();
    const double X = (qp.r - qp.q) * opt.t + std::log(opt.s0 / opt.k);
    const double disc_k = opt.k * std::exp(-qp.r * opt.t);
    const auto pcase = transform::classify_case(qp);

    PriceResult res;
    res.diagnostics.used = pcase;

    ContourIntegrator ci;
    ci.X = X;
    ci.c = cfg.contour_height;
    ci.cfg = &cfg;
    if (pcase == transform::PricingCase::case1) {
        ci.transitions = transform::transition_points(qp, cfg);
        ci.h_of_x = [&](double x) {
            return transform::h_case1(opt.t, opt.sigma0, Cplx(x, cfg.contour_height),
                                      qp, cfg);
        };
    } else {
        ci.h_of_x = [&](double x) {
            return transform::h_case2(opt.t, opt.sigma0, Cplx(x, cfg.contour_height),
                                      qp, cfg, &res.diagnostics);
        };
    }
    auto integral = ci.run();
    res.diagnostics.transition_points = ci.transitions;
    res.diagnostics.interpolated_evals = ci.interpolated;
    res.diagnostics.error_estimate =
        (integral.error + ci.interp_error) * disc_k / kPi;

    res.complement = disc_k * integral.value / kPi;
    res.price = disc_k - res.complement;

    const double lower = std::max(disc_k - opt.s0 * std::exp(-qp.q * opt.t), 0.0);
    const double slop = 1e-7 * opt.k + 10.0 * res.diagnostics.error_estimate;
    if (res.price < lower - slop || res.price > disc_k + slop)
        throw Error("put_price: result violates static no-arbitrage bounds");
    res.implied_vol = implied_vol_from_complement(
        std::clamp(res.complement, 0.0,
                   std::min(disc_k, opt.s0 * std::exp(-qp.q * opt.t))),
        opt, qp.r, qp.q);
    return res;
}

double smile_small_t(double k, const OptionSpec& opt, double xi, double rho) {
    if (!(k > 0.0)) throw DomainError("smile_small_t: strike must be positive");
    if (!(std::abs(rho) < 1.0))
        throw DomainError("smile_small_t: requires |rho| < 1");
    const double z = (2.0 * xi / opt.sigma0) * std::log(opt.s0 / k);
    if (std::abs(z) < 1e-4)
        return opt.sigma0 / (1.0 + 0.25 * rho * z); // F(z) = z (1 + rho z/4 + ...)
    double root = std::sqrt(1.0 - rho * z + 0.25 * z * z);
    double f = 2.0 * std::log((0.5 * z - rho + root) / (1.0 - rho));
    return z * opt.sigma0 / f;
}

LargeTAsymptotics large_t_asymptotics(const QParams& qp) {
    qp.validate();
    const double om = qp.tilde_omega();
    if (om < 1.0)
        throw RegimeError("large_t_asymptotics: requires Case 1 (om~ >= 1)");
    if (qp.rho > qp.theta / qp.xi)
        throw RegimeError("large_t_asymptotics: martingale-preserving regime "
                          "requires rho <= theta/xi");
    const double prod = qp.theta * (qp.theta - qp.rho * qp.xi);
    const double zeta =
        prod > 0.0 ? 1.0 / std::sqrt(1.0 + qp.xi * qp.xi / (4.0 * prod)) : 0.0;
    const double om_c = zeta > 0.0 ? 1.0 / zeta
                                   : std::numeric_limits<double>::infinity();
    double lam;
    if (om >= om_c) {
        double psi_star = 0.5 * om * (1.0 - zeta);
        lam = 0.5 * qp.xi * qp.xi * ((om - 1.0) * psi_star - psi_star * psi_star);
    } else {
        lam = 0.125 * qp.xi * qp.xi * (om - 1.0) * (om - 1.0);
    }
    return {lam, std::sqrt(8.0 * lam)};
}

double put_price_infinity_case2(const OptionSpec& opt, const QParams& qp,
                                const QuadCfg& cfg) {
    opt.validate();
    if (transform::classify_case(qp) != transform::PricingCase::case2)
        throw RegimeError("put_price_infinity_case2: requires Case 2");
    if (qp.r != 0.0 || qp.q != 0.0)
        throw RegimeError("put_price_infinity_case2: requires r = q = 0");
    ContourIntegrator ci;
    ci.X = std::log(opt.s0 / opt.k);
    ci.c = cfg.contour_height;
    ci.cfg = &cfg;
    ci.h_of_x = [&](double x) {
        return transform::h_stationary(opt.sigma0, Cplx(x, cfg.contour_height), qp);
    };
    auto integral = ci.run();
    return opt.k * (1.0 - integral.value / kPi);
}

} // namespace xgbm::pricing
