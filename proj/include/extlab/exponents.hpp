#pragma once

// Closed-form critical-exponent arithmetic and admissibility-region
// classification. Every slope prediction used by the experiment drivers comes
// from here, so there is a single source of truth for the exponent algebra.

#include <string>

namespace extlab {

struct ExponentSet {
    int d = 1;
    double q = 2.0;
    double r = 2.0;
    double s = 0.0;
    double alpha = 2.0; // propagator order, where applicable
};

struct CriticalExponents {
    double s_q = 0.0;    // (d+2)/q - d/2
    double s_c = 0.0;    // d/r + 2/q - d/2
    double s_c_w = 0.0;  // (d-1)/r + 2/q - (d-1)/2, defined for d >= 2
    bool has_s_c_w = false;
    double gamma1 = 0.0; // 1/q + d/r - d/2
};

CriticalExponents critical_exponents(int d, double q, double r);

// Region tags, in precedence order:
//   interior              d/r + 2/q > d/2 and d/r + 1/q < d/2 (both strict)
//   endpoint_line         d/r + 1/q = d/2 (tol 1e-12) and q != 2
//   strichartz_admissible d/r + 2/q <= d/2
//   forbidden_low_q       q <= 2(d+1)/d
//   outside               everything else
struct RegionClass {
    std::string tag;
    double sum_2q = 0.0; // d/r + 2/q - d/2
    double sum_1q = 0.0; // d/r + 1/q - d/2
};

// Requires q, r in [2, inf).
RegionClass classify_region(int d, double q, double r);

// Predicted log-log slope of the concentrated-cap ratio: s_c - s.
double knapp_predicted_slope(int d, double q, double r, double s);

// Weight/derivative exponent pair (mu, nu) for the weighted space-time
// estimates: alpha != 1 gives mu = s_c, nu = (2 - alpha)/q; alpha = 1 (the
// wave case, d >= 2) gives mu = s_c_w, nu = 1/2 + 1/q - 1/r.
struct WeightedPair {
    double mu = 0.0;
    double nu = 0.0;
};
WeightedPair weighted_exponent_pair(int d, double q, double r, double alpha);

} // namespace extlab
