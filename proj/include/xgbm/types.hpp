#ifndef XGBM_TYPES_HPP
#define XGBM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace xgbm {

using Cplx = std::complex<double>;

inline constexpr Cplx I{0.0, 1.0};

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A series or quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double achieved, double requested)
        : Error(msg + " (achieved " + std::to_string(achieved) +
                ", requested " + std::to_string(requested) + ")"),
          achieved_error(achieved), requested_error(requested) {}
    double achieved_error;
    double requested_error;
};

// Neither hypergeometric branch of the Slater integral applies.
class BranchError : public Error {
public:
    BranchError(const std::string& msg, Cplx zeta_value)
        : Error(msg + " (zeta = " + std::to_string(zeta_value.real()) + (zeta_value.imag() < 0 ? " - " : " + ") +
                std::to_string(std::abs(zeta_value.imag())) + "i)"),
          zeta(zeta_value) {}
    Cplx zeta;
};

// Parameters outside the regime an asymptotic or defect formula assumes.
class RegimeError : public Error {
public:
    explicit RegimeError(const std::string& msg) : Error(msg) {}
};

// Quadrature / truncation policy shared by the nested nu- and z-integrations.
//
// nu_max and x_max <= 0 mean "choose automatically": nu_max from the Gaussian
// weight exp(-nu^2 tau), x_max from the running decay monitor on the Fourier
// contour.
struct QuadCfg {
    double contour_height = 0.5;   // c in z = i c + x, must lie in (0,1)
    double nu_max = 0.0;
    double x_max = 0.0;
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    double transition_eps = 1e-3;  // half-width of the interpolation window
    int case2_terms = 10;          // truncation of the regularized series

    void validate() const {
        if (!(contour_height > 0.0 && contour_height < 1.0))
            throw DomainError("QuadCfg: contour_height must lie in (0,1)");
        if (case2_terms < 1)
            throw DomainError("QuadCfg: case2_terms must be >= 1");
    }
};

} // namespace xgbm

#endif
