#ifndef XGBM_SPECFUN_HPP
#define XGBM_SPECFUN_HPP

// Complex-argument special functions used throughout the library: log-gamma,
// Kummer M, Tricomi U, Gauss 2F1, the upper incomplete gamma and the modified
// Bessel function of imaginary order. Every routine here is validated against
// an arbitrary-precision golden grid (tests/data/specfun_golden.csv).

#include "xgbm/types.hpp"

namespace xgbm::specfun {

// Series policy: compensated summation, hard term cap, and a stop rule of
// three consecutive terms below 1e-17 * |partial sum|.
inline constexpr int kSeriesCap = 10000;
inline constexpr double kSeriesTol = 1e-17;

// True if z lies within tol of a nonpositive integer; on success *n holds
// the integer as a nonnegative count (z ~ -n).
bool is_nonpositive_integer(Cplx z, double tol = 1e-13, long* n = nullptr);

// Principal-path log Gamma, real on the positive real axis. Throws
// DomainError at nonpositive-integer poles.
Cplx log_gamma(Cplx z);

// exp(log_gamma), and the reciprocal 1/Gamma which is entire (returns 0 at
// the poles of Gamma).
Cplx gamma_fn(Cplx z);
Cplx rgamma(Cplx z);

// log |Gamma(i x)|^2 = log(pi / (x sinh(pi x))) for real x != 0, evaluated
// without overflow for large x and without cancellation for small x.
double log_abs_gamma_imag_sq(double x);

// Pochhammer symbol (a)_n for small nonnegative n.
Cplx pochhammer(Cplx a, int n);

// Confluent hypergeometric M(a,b,z) (Kummer). Terminates exactly when a is a
// nonpositive integer; uses the Kummer transform for Re z < 0. Throws
// DomainError when b is a nonpositive integer (use the regularized variant),
// ConvergenceError if the term cap is exceeded.
Cplx kummer_m(Cplx a, Cplx b, Cplx z);

// M(a,b,z) / Gamma(b); entire in b.
Cplx kummer_m_regularized(Cplx a, Cplx b, Cplx z);

struct TricomiDiag {
    bool limit_branch_taken = false;  // near-integer b handled by extrapolation
};

// Tricomi U(a,b,z) for Re z > 0 via the two-M representation; b within 1e-5
// of an integer is handled by Richardson extrapolation in b (the diagnostic
// records that the limit branch ran).
Cplx tricomi_u(Cplx a, Cplx b, Cplx z, TricomiDiag* diag = nullptr);

// Gauss hypergeometric F(a,b;c;z). Requires |z| < 1 unless a or b is a
// nonpositive integer (terminating polynomial, any z).
Cplx gauss_2f1(Cplx a, Cplx b, Cplx c, Cplx z);

// Upper incomplete gamma Gamma(s,x) for real s > 0, x >= 0.
double upper_incomplete_gamma(double s, double x);

// Modified Bessel function of imaginary order, K_{i nu}(z), Re z > 0.
// Real-valued for real z; the real-argument overload reports underflow.
Cplx bessel_k_imag_order_z(double nu, Cplx z);
double bessel_k_imag_order(double nu, double x, bool* underflow = nullptr);

} // namespace xgbm::specfun

#endif
