#pragma once

// Adaptive panel quadrature for oscillatory integrands: Gauss-Kronrod 7/15
// pairs on an oscillation-aware initial partition, worst-panel splitting until
// the summed error estimate meets the tolerance.

#include <complex>
#include <functional>

namespace extlab {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double estimated_error = 0.0;
    long evaluations = 0;
    int panels = 0;
    bool converged = false;
};

// oscillation_rate: an upper bound on |d(phase)/dxi| over [a,b]; the initial
// partition puts >= 15 nodes per oscillation period. eval_budget counts
// integrand evaluations; on exhaustion the best estimate is returned with
// converged = false.
QuadResult integrate_oscillatory(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double abs_tol, double oscillation_rate,
                                 long eval_budget = 20'000'000);

} // namespace extlab
