#ifndef XGBM_QUADRATURE_HPP
#define XGBM_QUADRATURE_HPP

// Adaptive Gauss-Kronrod (15-point) panels over finite intervals plus a
// semi-infinite driver with a running decay monitor for the Fourier- and
// nu-integrations. Integrands may be real- or complex-valued.

#include "xgbm/types.hpp"

#include <array>
#include <cmath>
#include <functional>

namespace xgbm::quad {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;
    int evals = 0;
};

template <typename F>
PanelResult gk15(F&& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Cplx resg{0.0, 0.0}, resk{0.0, 0.0};
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Cplx fl = f(mid - dx), fr = f(mid + dx);
        const Cplx sum = fl + fr;
        resk += kWgk[j] * sum;
        if (j % 2 == 1) resg += kWg[j / 2] * sum; // odd Kronrod index = Gauss node
    }
    const Cplx fc = f(mid);
    resk += kWgk[7] * fc;
    resg += kWg[3] * fc;
    PanelResult r;
    r.value = resk * h;
    r.error = std::abs(resk - resg) * std::abs(h);
    // QUADPACK-style sharpening of the raw error estimate.
    if (r.error > 0.0) r.error = std::min(r.error, std::pow(200.0 * r.error, 1.5));
    r.evals = 15;
    return r;
}

// Adaptive bisection on [a,b] to abs_tol + rel_tol * |estimate|.
template <typename F>
PanelResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                      int max_depth = 26) {
    struct Rec {
        F& f;
        double abs_tol, rel_tol;
        int max_depth;
        int evals = 0;
        PanelResult run(double lo, double hi, const PanelResult& whole, int depth) {
            evals += whole.evals;
            double tol = std::max(abs_tol, rel_tol * std::abs(whole.value));
            if (whole.error <= tol || depth >= max_depth) return whole;
            double mid = 0.5 * (lo + hi);
            PanelResult l = run(lo, mid, gk15(f, lo, mid), depth + 1);
            PanelResult r = run(mid, hi, gk15(f, mid, hi), depth + 1);
            return {l.value + r.value, l.error + r.error, 0};
        }
    };
    Rec rec{f, abs_tol, rel_tol, max_depth};
    PanelResult out = rec.run(a, b, gk15(f, a, b), 0);
    out.evals = rec.evals;
    return out;
}

struct TailPolicy {
    int consecutive = 5;      // panels in a row that must be negligible
    double factor = 1e-12;    // "negligible" relative to the accumulated value
    double growth = 1.6;      // geometric growth of panel width
    double max_width_mult = 16.0;
};

struct TailResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;
    int evals = 0;
    double reached = 0.0;     // upper edge actually integrated to
    bool hit_cap = false;     // stopped by hard cap rather than decay
};

// Integrate f from a towards +infinity on expanding panels. Stops when
// `policy.consecutive` panels contribute less than factor * |accumulated|
// (plus an absolute floor), or at the hard cap.
template <typename F>
TailResult integrate_decaying(F&& f, double a, double panel_width, double hard_cap,
                              double abs_tol, double rel_tol,
                              TailPolicy policy = {}) {
    TailResult out;
    double lo = a;
    double w = panel_width;
    int quiet = 0;
    const double panel_abs = std::max(abs_tol * 1e-2, 1e-300);
    while (lo < hard_cap) {
        double hi = std::min(lo + w, hard_cap);
        PanelResult p = integrate(f, lo, hi, panel_abs, rel_tol * 0.1);
        out.value += p.value;
        out.error += p.error;
        out.evals += p.evals;
        double scale = std::max(std::abs(out.value), abs_tol);
        if (std::abs(p.value) < std::max(policy.factor * scale, panel_abs)) {
            if (++quiet >= policy.consecutive) {
                out.reached = hi;
                return out;
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        w = std::min(w * policy.growth, panel_width * policy.max_width_mult);
    }
    out.reached = hard_cap;
    out.hit_cap = true;
    return out;
}

} // namespace xgbm::quad

#endif
