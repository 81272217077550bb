#pragma once

// Ordinary least squares on (log x, log y): the workhorse for every
// scaling-exponent measurement.

#include <vector>

namespace extlab {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 1.0;
    int n = 0;
};

// Requires matching sizes, n >= 2, x strictly positive and strictly
// increasing, y strictly positive. A constant y gives slope 0 and r2 = 1.
SlopeFit slope_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace extlab
