#pragma once

// Legendre-type dual of a normal-form phase: eta(x) solves grad phi(eta) = -x
// by Newton iteration, psi(x) = x . eta(x) + phi(eta(x)).

#include "extlab/phases.hpp"

namespace extlab {

struct LegendreDual {
    PhaseFunction phi;
    SymMat D;          // diagonal signs of the Hessian at 0 (Newton seed)
    double radius = 15.0 / 8.0;
    double tol = 1e-12;
    int max_iter = 50;

    // Throws PreconditionError for |x| > radius, NumericsError when Newton
    // fails to reach |grad phi(eta) + x| < tol.
    Vec eta(const Vec& x) const;
    double psi(const Vec& x) const;
    double residual(const Vec& x) const;
};

LegendreDual legendre_dual(const PhaseFunction& phi, double radius = 15.0 / 8.0,
                           double tol = 1e-12, int max_iter = 50);

} // namespace extlab
