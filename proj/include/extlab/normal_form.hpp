#pragma once

// Reduction of a phase to quadratic normal form around a base point:
// translation, Galilean shear, diagonalization, parabolic rescaling. The
// reduced phase is xi^T D xi / 2 + E(xi) with D = diag(+-1) and E small in
// C^L on B(0,2).

#include <utility>

#include "extlab/phases.hpp"

namespace extlab {

// Fixed residual factor: reduction fails when the measured C^L bound of E
// exceeds this multiple of eps0.
inline constexpr double kNormalFormResidualFactor = 2.0;

struct NormalFormReport {
    Vec xi0;
    double eps0 = 0.0;
    int L_order = 4;
    SymMat D;               // diag(+-1), positive entries first
    Mat L;                  // frequency map linear part: xi = xi0 + eps0 * L * zeta
    Vec drift;              // grad phi(xi0)
    double phase_at_base = 0.0;
    double residual_bound = 0.0; // measured sup of |d^beta E|, |beta| <= L_order, on B(0,2)
    PhaseFunction reduced;

    Vec map_frequency(const Vec& zeta) const { return xi0 + eps0 * L.mul(zeta); }
    // forward space-time map: phases satisfy
    //   x.xi + t phi(xi) = [x.xi0 + t phi(xi0)] + y.zeta + tau phi_red(zeta)
    std::pair<Vec, double> map_spacetime(const Vec& x, double t) const {
        Vec y = (L.tmul(x + t * drift)) * eps0;
        return {y, eps0 * eps0 * t};
    }
};

// Preconditions: |xi0| <= 1, 0 < eps0 <= 0.05, nondegenerate Hessian at xi0,
// and the rescaled verification ball must stay inside phi's domain.
NormalFormReport normal_form_reduce(const PhaseFunction& phi, const Vec& xi0, double eps0,
                                    int L_order = 4);

} // namespace extlab
