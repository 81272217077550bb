#include "extlab/legendre.hpp"

#include <cmath>

#include "extlab/errors.hpp"

namespace extlab {

LegendreDual legendre_dual(const PhaseFunction& phi, double radius, double tol, int max_iter) {
    if (!phi.in_domain(Vec::zero(phi.d)))
        throw PreconditionError("legendre_dual: phase must be defined near the origin");
    LegendreDual ld;
    ld.phi = phi;
    ld.radius = radius;
    ld.tol = tol;
    ld.max_iter = max_iter;
    // A normal-form phase has Hessian ~ diag(+-1) at 0; the diagonal signs
    // give the quadratic-model seed.
    HessianData hd = hessian_data(phi, Vec::zero(phi.d));
    ld.D = SymMat::diag(phi.d, hd.H.a11 >= 0.0 ? 1.0 : -1.0,
                        phi.d == 2 ? (hd.H.a22 >= 0.0 ? 1.0 : -1.0) : 0.0);
    return ld;
}

Vec LegendreDual::eta(const Vec& x) const {
    if (x.d != phi.d) throw PreconditionError("LegendreDual::eta: dimension mismatch");
    if (norm2(x) > radius + 1e-12)
        throw PreconditionError("LegendreDual::eta: point outside dual domain");
    // Seed with the pure-quadratic solution D^{-1}(-x); D^{-1} = D.
    Vec e = -D.mul(x);
    for (int it = 0; it < max_iter; ++it) {
        Vec r = phi.grad(e) + x;
        double rn = norm2(r);
        if (rn < tol) return e;
        Vec step = solve_sym(phi.hess(e), r);
        e = e - step;
    }
    if (norm2(phi.grad(e) + x) < tol) return e;
    throw NumericsError("LegendreDual::eta: Newton did not converge");
}

double LegendreDual::psi(const Vec& x) const {
    Vec e = eta(x);
    return dot(x, e) + phi.value(e);
}

double LegendreDual::residual(const Vec& x) const {
    Vec e = eta(x);
    return norm2(phi.grad(e) + x);
}

} // namespace extlab
