#pragma once

// Phase surfaces: smooth real phases xi -> phi(xi) with analytic gradient and
// Hessian evaluators, a builtin catalog, and Hessian spectral data.

#include <functional>
#include <string>
#include <vector>

#include "extlab/smallvec.hpp"

namespace extlab {

struct PhaseFunction {
    int d = 1;
    std::string label;
    // evaluators valid on domain_inner <= |xi| <= domain_radius
    double domain_inner = 0.0;
    double domain_radius = 0.0;
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> grad;
    std::function<SymMat(const Vec&)> hess;

    bool in_domain(const Vec& xi, double pad = 0.0) const {
        double r = norm2(xi);
        return r >= domain_inner - pad && r <= domain_radius + pad;
    }
};

// Catalog:
//   "elliptic"    d=1,2   |xi|^2/2
//   "hyperbolic"  d=2     (xi1^2 - xi2^2)/2
//   "fractional"  d=1,2   |xi|^alpha on the annulus 1/2 <= |xi| <= 2; params {alpha}, alpha > 0
//   "perturbed"   d=1,2   xi^T D xi / 2 + eps0 * rho(xi); params {eps0 [, d1, d2]},
//                         0 < eps0 <= 0.05, diagonal signs default +1
PhaseFunction builtin_phase(const std::string& name, int d, const std::vector<double>& params = {});

// The fixed cubic-flat perturbation rho (unit C^4 norm on B(0,2)): value,
// gradient, Hessian. Exposed so tests can re-measure the normalization.
double perturbation_bump(const Vec& xi);
Vec perturbation_bump_grad(const Vec& xi);
SymMat perturbation_bump_hess(const Vec& xi);
double perturbation_c4_normalizer(int d);

struct HessianData {
    SymMat H;
    double det = 0.0;
    int signature = 0; // #positive - #negative eigenvalues
};

// Throws NumericsError when |det| < 1e-12 * (max |eigenvalue|)^d.
HessianData hessian_data(const PhaseFunction& phi, const Vec& xi);

} // namespace extlab
