#ifndef XGBM_GREEN_HPP
#define XGBM_GREEN_HPP

// The auxiliary 1D Green function G(tau, y, y'; omega, theta, c): spectral
// form as the production path and Bromwich Laplace inversion as the in-repo
// oracle. Both accept the complex (theta, c) the Fourier reduction produces.

#include "xgbm/model.hpp"
#include "xgbm/types.hpp"

#include <vector>

namespace xgbm::green {

struct AuxCoeffs {
    double omega = 0.0; // real, >= 0
    Cplx theta;
    Cplx c; // Re c >= 0 on every reduction path

    static AuxCoeffs from_reduced(const ReducedCoeffs& rc) {
        return {rc.tilde_omega, rc.theta_z, rc.c_z};
    }
};

struct SpectralData {
    Cplx gamma;
    Cplx r;   // sqrt(theta^2 + 4c), principal branch
    Cplx psi; // omega gamma / r
    int n_max = -1;          // -1: empty discrete set
    std::vector<Cplx> poles; // s_n = (n+psi)^2 + (1-omega)(n+psi)

    bool has_discrete() const { return n_max >= 0; }
};

// Pole set for one (omega, theta, c) triple. The discrete set is non-empty
// iff (omega-1)/2 > Re psi; a pole sitting within 1e-9 of that boundary is
// excluded (the indicator in the spectral formula is a strict inequality).
SpectralData spectral_data(const AuxCoeffs& aux);

// Spectral representation: discrete residue sum plus the continuous
// nu-integral with weight exp(-(nu^2 + (1-omega)^2/4) tau).
Cplx green_spectral(double tau, double y, double y2, const AuxCoeffs& aux,
                    const QuadCfg& cfg);

// Laplace-domain Green function along Re s > 0 (also the building block of
// the Bromwich oracle).
Cplx green_hat(Cplx s, double y, double y2, const AuxCoeffs& aux);

// Bromwich inversion along Re s = 1, |Im s| <= 400/tau, trapezoid with a
// Richardson check. Oracle only; no performance requirement.
Cplx green_bromwich(double tau, double y, double y2, const AuxCoeffs& aux,
                    const QuadCfg& cfg);

} // namespace xgbm::green

#endif
