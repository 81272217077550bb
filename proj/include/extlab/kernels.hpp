#pragma once

// The oscillatory kernel K(x,t) = int e^{i(x.xi + t phi(xi))} a(xi) dxi,
// evaluated two independent ways: adaptive quadrature (oracle grade) and the
// stationary-phase leading term. Fitting the gap between them measures the
// expansion's error order.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "extlab/amplitude.hpp"
#include "extlab/fit.hpp"
#include "extlab/phases.hpp"
#include "extlab/smallvec.hpp"

namespace extlab {

struct KernelSample {
    Vec x;
    double t = 0.0;
    std::complex<double> value{0.0, 0.0};
    std::string method;           // "quadrature" | "stationary_phase"
    double estimated_error = 0.0;
    long evaluations = 0;
    bool converged = true;        // quadrature met tol within the eval budget
    bool stationary_in_support = true;
};

// Quadrature budget caps: |t| <= 1e5 for d=1, |t| <= 1e3 for d=2; beyond that
// the call refuses with BudgetError. Within the cap, running out of integrand
// evaluations returns the best value with converged = false and an honest
// estimated_error. initial_refine multiplies the oscillation-aware starting
// panel density (used by self-consistency checks).
KernelSample kernel_quadrature(const PhaseFunction& phi, const Amplitude& a, const Vec& x,
                               double t, double tol, int initial_refine = 1);

// Leading term t^{-d/2} e^{i t psi(x/t)} a0(x/t) with
// a0(v) = (2 pi)^{d/2} |det H(eta(v))|^{-1/2} e^{i pi sigma / 4} a(eta(v)).
// Requires t >= 1 and |x| < (5/4) t. When the stationary point eta(x/t) falls
// outside the open support of a, returns value 0 with
// stationary_in_support = false.
KernelSample stationary_phase_leading(const PhaseFunction& phi, const Amplitude& a,
                                      const Vec& x, double t);

// Fits log |K_quad - K_leading| against log t along a dyadic ladder at fixed
// ray v = x/t = x_dir. Expected slope -(d/2 + 1). Requires >= 4 dyadic points,
// all >= 2^6; throws BudgetError if quadrature fails to converge at any rung.
SlopeFit asymptotic_error_fit(const PhaseFunction& phi, const Amplitude& a, const Vec& x_dir,
                              const std::vector<double>& t_values);

// Estimates the first correction coefficient c1 in
// K_quad - K_lead = c1 t^{-d/2-1} + O(t^{-d/2-2}) by Richardson extrapolation
// on the top two rungs (exact for dyadic ladders), subtracts it, and fits the
// residual order. Expected slope <= -(d/2 + 2) + fuzz. Fixed ray v = 0.
SlopeFit richardson_residual_fit(const PhaseFunction& phi, const Amplitude& a,
                                 const std::vector<double>& t_values);

struct DecayCheckReport {
    int M = 0;
    std::vector<double> weighted; // |K(x_i,t_i)| (1+|x_i|)^M (1+t_i)^M per sample
    double max_weighted = 0.0;
    double min_weighted = 0.0;
};

// Non-stationary regime check: every sample must satisfy t >= 1 and
// |x| >= (5/4) t, so the phase gradient never vanishes on supp a and K decays
// faster than any weight the amplitude's smoothness supports. M <= 3.
DecayCheckReport nonstationary_decay_check(const PhaseFunction& phi, const Amplitude& a, int M,
                                           const std::vector<std::pair<Vec, double>>& samples);

} // namespace extlab
