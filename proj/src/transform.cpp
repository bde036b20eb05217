#include "xgbm/transform.hpp"

#include "xgbm/green.hpp"
#include "xgbm/quadrature.hpp"
#include "xgbm/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace xgbm::transform {

using specfun::gauss_2f1;
using specfun::kummer_m;
using specfun::log_abs_gamma_imag_sq;
using specfun::log_gamma;
using specfun::pochhammer;
using specfun::rgamma;
using specfun::tricomi_u;

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

PricingCase classify_case(const QParams& qp) {
    return qp.tilde_omega() >= 1.0 ? PricingCase::case1 : PricingCase::case2;
}

namespace {

// Hypergeometric factor of the Slater U-integral. Branch preference is
// |1 - zeta| < 1; the Re zeta > 1/2 form is the fallback.
//
//   branch 1: F(c_par, conj_par, third; 1 - zeta)
//   branch 2: zeta^{-c_par} F(a_nu, c_par, third; 1 - 1/zeta)
Cplx slater_factor(Cplx a_nu, Cplx c_par, Cplx conj_par, Cplx third,
                   Cplx zeta) {
    Cplx w1 = 1.0 - zeta;
    if (std::abs(w1) <= 0.98) return gauss_2f1(c_par, conj_par, third, w1);
    if (zeta.real() > 0.5) {
        Cplx w2 = 1.0 - 1.0 / zeta;
        if (std::abs(w2) <= 0.995)
            return std::exp(-c_par * std::log(zeta)) *
                   gauss_2f1(a_nu, c_par, third, w2);
    }
    throw BranchError("slater_factor: neither 2F1 branch applies", zeta);
}

struct Case1Terms {
    ReducedCoeffs rc;
    green::SpectralData sd;
    double tau;
    Cplx u;      // R_z y
    Cplx log_u;
    Cplx log_zeta;
};

Case1Terms case1_setup(double T, double y, Cplx z, const QParams& qp) {
    Case1Terms t;
    t.rc = reduce_q(qp, z);
    t.sd = green::spectral_data(green::AuxCoeffs::from_reduced(t.rc));
    t.tau = 0.5 * qp.xi * qp.xi * T;
    t.u = t.rc.r_z * y;
    t.log_u = std::log(t.u);
    t.log_zeta = std::log(t.rc.zeta_z);
    return t;
}

} // namespace

HParts h_case1_parts(double T, double y, Cplx z, const QParams& qp,
                     const QuadCfg& cfg) {
    if (!(T > 0.0) || !(y > 0.0))
        throw DomainError("h_case1: requires T, y > 0");
    const Case1Terms t = case1_setup(T, y, z, qp);
    const double om = t.rc.tilde_omega;
    const Cplx psi = t.rc.psi_z;

    Cplx hd{0.0, 0.0};
    double nfact = 1.0;
    for (int n = 0; n <= t.sd.n_max; ++n) {
        if (n > 0) nfact *= double(n);
        const Cplx rn = t.rc.r_n(n), bn = t.rc.b_n(n), cn = t.rc.c_n(n);
        Cplx phi = (om - 1.0 - 2.0 * n - 2.0 * psi) * pochhammer(bn, n) /
                   nfact * std::exp(log_gamma(cn) - log_gamma(bn) -
                                    cn * t.log_zeta + rn * t.log_u) *
                   gauss_2f1(Cplx(-double(n)), cn, bn, 1.0 / t.rc.zeta_z) *
                   kummer_m(Cplx(-double(n)), bn, t.u);
        hd += phi * std::exp(t.sd.poles[size_t(n)] * t.tau);
    }

    Cplx hc{0.0, 0.0};
    const double cut_decay = 0.25 * (1.0 - om) * (1.0 - om) * t.tau;
    const Cplx rg_psi = rgamma(psi);
    if (cut_decay < 700.0 && rg_psi != Cplx{0.0, 0.0}) {
        auto integrand = [&](double nu) -> Cplx {
            const Cplx anu = t.rc.a_nu(nu), amnu = t.rc.a_nu(-nu);
            const Cplx bnu = ReducedCoeffs::b_nu(nu), cnu = t.rc.c_nu(nu);
            Cplx logpref = log_gamma(anu) + log_gamma(amnu) +
                           2.0 * std::real(log_gamma(cnu)) -
                           log_abs_gamma_imag_sq(2.0 * nu) +
                           (Cplx(0.5 * (1.0 - om), nu)) * t.log_u -
                           (nu * nu * t.tau + cut_decay);
            return std::exp(logpref) * rg_psi / (2.0 * kPi) *
                   tricomi_u(anu, bnu, t.u) *
                   slater_factor(anu, cnu, std::conj(cnu), psi, t.rc.zeta_z);
        };
        double numax =
            cfg.nu_max > 0.0 ? cfg.nu_max : std::sqrt(41.0 / t.tau) + 2.0;
        numax = std::min(numax, 4000.0);
        double width = std::min(1.0, kPi / (1.0 + std::abs(t.log_u)));
        quad::TailPolicy tail;
        tail.consecutive = 4;
        tail.factor = 1e-13;
        auto res = quad::integrate_decaying(integrand, 0.0, width, numax,
                                            cfg.abs_tol, cfg.rel_tol, tail);
        hc = res.value;
    }

    const Cplx efac = std::exp(-t.rc.gamma_z * y);
    HParts out;
    out.discrete = efac * hd;
    out.continuous = efac * hc;
    out.total = out.discrete + out.continuous;
    if (!std::isfinite(out.total.real()) || !std::isfinite(out.total.imag()))
        throw ConvergenceError("h_case1: non-finite result", 1.0, 0.0);
    return out;
}

Cplx h_case1(double T, double y, Cplx z, const QParams& qp,
             const QuadCfg& cfg) {
    return h_case1_parts(T, y, z, qp, cfg).total;
}

int pole_count(const QParams& qp, Cplx z) {
    ReducedCoeffs rc = reduce_q(qp, z);
    return green::spectral_data(green::AuxCoeffs::from_reduced(rc)).n_max + 1;
}

std::vector<double> transition_points(const QParams& qp, const QuadCfg& cfg) {
    std::vector<double> pts;
    if (classify_case(qp) == PricingCase::case2) return pts;
    const double c = cfg.contour_height;
    const double om = qp.tilde_omega();
    auto count = [&](double x) { return pole_count(qp, Cplx(x, c)); };
    auto psi_margin = [&](double x) {
        ReducedCoeffs rc = reduce_q(qp, Cplx(x, c));
        return 0.5 * (om - 1.0) - rc.psi_z.real();
    };
    const double hard_cap = cfg.x_max > 0.0 ? cfg.x_max : 4000.0;
    const double step = 0.25;
    double x = 0.0;
    int cur = count(0.0);
    double last_change = 0.0;
    while (x < hard_cap) {
        double x2 = std::min(x + step, hard_cap);
        int nxt = count(x2);
        while (nxt != cur) {
            // bisect the first change inside (x, x2]
            double lo = x, hi = x2;
            for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
                double mid = 0.5 * (lo + hi);
                if (count(mid) == cur)
                    lo = mid;
                else
                    hi = mid;
            }
            pts.push_back(0.5 * (lo + hi));
            last_change = pts.back();
            cur = count(hi);
            x = hi;
        }
        x = x2;
        // Re psi -> om/2 at large x, so the margin ends below -1/2 and the
        // count stays at zero; stop once it is safely past.
        if (cur == 0 && psi_margin(x) < -0.2 && x > last_change + 10.0) break;
    }
    return pts;
}

Cplx h_stationary(double y, Cplx z, const QParams& qp) {
    if (!(y > 0.0)) throw DomainError("h_stationary: requires y > 0");
    const ReducedCoeffs rc = reduce_q(qp, z);
    const double om = rc.tilde_omega;
    if (om == 0.0) return std::exp(-rc.gamma_z * y);
    if (std::abs(om - 1.0) < 1e-13) {
        // U(psi, 1, 0) diverges: h -> 0 for z != 0 and 1 at z = 0
        return (std::abs(rc.psi_z) < 1e-14) ? Cplx{1.0, 0.0} : Cplx{0.0, 0.0};
    }
    if (std::abs(rc.psi_z) < 1e-14) return {1.0, 0.0}; // U(0,b,x) = 1, gamma=0
    // U(a, b, 0) = Gamma(1-b)/Gamma(a-b+1) for Re b < 1
    Cplx u0 = std::exp(log_gamma(Cplx(1.0 - om)) -
                       log_gamma(rc.psi_z - om + 1.0));
    return std::exp(-rc.gamma_z * y) *
           tricomi_u(rc.psi_z, Cplx(om), rc.r_z * y) / u0;
}

SeriesCoeffs series_coeffs(Cplx z, const QParams& qp, int n_terms) {
    if (n_terms < 1) throw DomainError("series_coeffs: n_terms >= 1");
    const ReducedCoeffs rc = reduce_q(qp, z);
    const double om = rc.tilde_omega;
    const Cplx psi = rc.psi_z;
    const Cplx cc = rc.zeta_z - 1.0;
    const int n = n_terms;

    // f_k(a, b, c) = sum_{m<=k} (a)_m / ((b)_m m!) c^{k-m} / (k-m)!, the
    // Taylor coefficients of e^{c u} M(a, b, u).
    auto coeffs = [&](Cplx a, Cplx b) {
        std::vector<Cplx> tm(size_t(n) + 1), cpow(size_t(n) + 1);
        tm[0] = 1.0;
        bool a_zero = std::abs(a) < 1e-15;
        for (int m = 1; m <= n; ++m)
            tm[size_t(m)] = a_zero ? Cplx{0.0, 0.0}
                                   : tm[size_t(m - 1)] * (a + double(m - 1)) /
                                         ((b + double(m - 1)) * double(m));
        cpow[0] = 1.0;
        for (int k = 1; k <= n; ++k)
            cpow[size_t(k)] = cpow[size_t(k - 1)] * cc / double(k);
        std::vector<Cplx> f(size_t(n) + 1);
        for (int k = 0; k <= n; ++k) {
            Cplx s{0.0, 0.0};
            for (int m = 0; m <= k; ++m)
                s += tm[size_t(m)] * cpow[size_t(k - m)];
            f[size_t(k)] = s;
        }
        return f;
    };

    SeriesCoeffs out;
    out.a = coeffs(psi, Cplx(om));
    out.b = coeffs(psi - om + 1.0, Cplx(2.0 - om));
    Cplx rg_psi = rgamma(psi);
    Cplx pref =
        (rg_psi == Cplx{0.0, 0.0})
            ? Cplx{0.0, 0.0}
            : std::exp(log_gamma(Cplx(om - 1.0)) + log_gamma(psi - om + 1.0) -
                       log_gamma(Cplx(1.0 - om))) *
                  rg_psi;
    for (auto& bk : out.b) bk *= pref;
    return out;
}

Cplx h_case2(double T, double y, Cplx z, const QParams& qp, const QuadCfg& cfg,
             TransformDiagnostics* diag) {
    if (!(T > 0.0) || !(y > 0.0))
        throw DomainError("h_case2: requires T, y > 0");
    if (classify_case(qp) != PricingCase::case2)
        throw RegimeError("h_case2: parameters are Case 1");
    const ReducedCoeffs rc = reduce_q(qp, z);
    const double om = rc.tilde_omega;
    const Cplx psi = rc.psi_z;
    const double tau = 0.5 * qp.xi * qp.xi * T;
    const Cplx u = rc.r_z * y;
    const Cplx log_u = std::log(u);
    const int n_terms = cfg.case2_terms;

    Cplx h = h_stationary(y, z, qp);
    const double cut_decay = 0.25 * (1.0 - om) * (1.0 - om) * tau;
    if (cut_decay > 700.0) return h;

    const SeriesCoeffs sc = series_coeffs(z, qp, n_terms);
    double tail_ratio = 0.0;

    auto integrand = [&](double nu) -> Cplx {
        const Cplx anu = rc.a_nu(nu), amnu = rc.a_nu(-nu);
        const Cplx bnu = ReducedCoeffs::b_nu(nu);
        Cplx base = std::exp(log_gamma(anu) + log_gamma(amnu) -
                             log_abs_gamma_imag_sq(2.0 * nu) +
                             Cplx(0.5 * (1.0 - om), nu) * log_u -
                             (nu * nu * tau + cut_decay)) /
                    (2.0 * kPi) * tricomi_u(anu, bnu, u);
        // phi-type terms: c_{nu,n} = n - 1/2 + om/2 + i nu, third = psi + n
        Cplx kappa{0.0, 0.0};
        Cplx last{0.0, 0.0};
        {
            Cplx cn1(0.5 * om + 0.5, nu); // n = 1
            double re_lg = 2.0 * std::real(log_gamma(cn1));
            Cplx lg_third = log_gamma(psi + 1.0);
            for (int n = 1; n <= n_terms; ++n) {
                Cplx cn(double(n) - 0.5 + 0.5 * om, nu);
                Cplx term = sc.a[size_t(n)] * std::exp(re_lg - lg_third) *
                            slater_factor(anu, cn, std::conj(cn),
                                          psi + double(n), rc.zeta_z);
                kappa += term;
                if (n == n_terms) last = term;
                re_lg += 2.0 * std::log(std::abs(cn));
                lg_third += std::log(psi + double(n));
            }
        }
        // psi-type terms: d_{nu,n} = n + 1/2 - om/2 + i nu,
        // third = 1 - om + psi + n
        {
            Cplx dn0(0.5 - 0.5 * om, nu);
            double re_lg = 2.0 * std::real(log_gamma(dn0));
            Cplx lg_third = log_gamma(1.0 - om + psi);
            for (int n = 0; n <= n_terms; ++n) {
                Cplx dn(double(n) + 0.5 - 0.5 * om, nu);
                Cplx term = sc.b[size_t(n)] * std::exp(re_lg - lg_third) *
                            slater_factor(anu, dn, std::conj(dn),
                                          1.0 - om + psi + double(n),
                                          rc.zeta_z);
                kappa += term;
                if (n == n_terms) last += term;
                re_lg += 2.0 * std::log(std::abs(dn));
                lg_third += std::log(1.0 - om + psi + double(n));
            }
        }
        double kmag = std::abs(kappa);
        if (kmag > 0.0)
            tail_ratio = std::max(tail_ratio, std::abs(last) / kmag);
        return base * kappa;
    };

    double numax = cfg.nu_max > 0.0 ? cfg.nu_max : std::sqrt(41.0 / tau) + 2.0;
    numax = std::min(numax, 4000.0);
    double width = std::min(1.0, kPi / (1.0 + std::abs(log_u)));
    quad::TailPolicy tail;
    tail.consecutive = 4;
    tail.factor = 1e-13;
    auto res = quad::integrate_decaying(integrand, 0.0, width, numax,
                                        cfg.abs_tol, cfg.rel_tol, tail);
    if (diag) {
        diag->used = PricingCase::case2;
        diag->error_estimate = res.error;
        if (tail_ratio > cfg.rel_tol) diag->truncation_warning = true;
    }
    Cplx out = h - std::exp(-rc.gamma_z * y) * res.value;
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw ConvergenceError("h_case2: non-finite result", 1.0, 0.0);
    return out;
}

Cplx fundamental_transform(double T, double y, Cplx z, const QParams& qp,
                           const QuadCfg& cfg, TransformDiagnostics* diag) {
    if (classify_case(qp) == PricingCase::case1) {
        if (diag) diag->used = PricingCase::case1;
        return h_case1(T, y, z, qp, cfg);
    }
    return h_case2(T, y, z, qp, cfg, diag);
}

} // namespace xgbm::transform
