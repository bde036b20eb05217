#ifndef XGBM_TRANSFORM_HPP
#define XGBM_TRANSFORM_HPP

// The fundamental transform H(T, y; z): Case 1 closed form through the
// Slater integrals, the Case 2 regularized construction, and transition-point
// management along the Fourier contour.

#include "xgbm/model.hpp"
#include "xgbm/types.hpp"

#include <vector>

namespace xgbm::transform {

enum class PricingCase { case1, case2 };

// Case 1 iff omega_q >= xi^2/2 (boundary included).
PricingCase classify_case(const QParams& qp);

struct TransformDiagnostics {
    PricingCase used = PricingCase::case1;
    std::vector<double> transition_points;
    double error_estimate = 0.0;
    int interpolated_evals = 0;       // z-samples served by interpolation
    bool truncation_warning = false;  // case-2 tail term above rel_tol
};

struct HParts {
    Cplx total;
    Cplx discrete;
    Cplx continuous;
};

// Case 1 transform, with the discrete/continuous split exposed (the split
// jumps at transition points; the sum does not).
HParts h_case1_parts(double T, double y, Cplx z, const QParams& qp,
                     const QuadCfg& cfg);
Cplx h_case1(double T, double y, Cplx z, const QParams& qp, const QuadCfg& cfg);

// All x in [0, x_max] where the discrete pole count along z = i c + x
// changes, located by bisection on the integer count to 1e-6.
std::vector<double> transition_points(const QParams& qp, const QuadCfg& cfg);

// Discrete pole count N_e at one contour point.
int pole_count(const QParams& qp, Cplx z);

// Stationary solution h(y; z) = e^{-gamma_z y} U(psi_z, om~, R_z y) /
// U(psi_z, om~, 0); the om~ = 0 branch is e^{-gamma_z y}.
Cplx h_stationary(double y, Cplx z, const QParams& qp);

// Taylor data of h about y = 0: h = sum A_n (R y)^n + (R y)^{1-om~} sum
// B_n (R y)^n, with a[0] = 1.
struct SeriesCoeffs {
    std::vector<Cplx> a;
    std::vector<Cplx> b;
};
SeriesCoeffs series_coeffs(Cplx z, const QParams& qp, int n_terms);

// Case 2 regularized transform, series truncated at cfg.case2_terms.
Cplx h_case2(double T, double y, Cplx z, const QParams& qp, const QuadCfg& cfg,
             TransformDiagnostics* diag = nullptr);

// Case dispatch.
Cplx fundamental_transform(double T, double y, Cplx z, const QParams& qp,
                           const QuadCfg& cfg,
                           TransformDiagnostics* diag = nullptr);

} // namespace xgbm::transform

#endif
