#pragma once

// Scalar bump/cutoff library. Cosine-power bumps have closed-form integrals
// (used as frozen references in tests); the exponential mollifier and
// smoothstep provide C-infinity cutoffs where unlimited smoothness matters.

#include <cmath>
#include <cstdint>

#include "extlab/errors.hpp"

namespace extlab::bumps {

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

// cos^m(pi*s/(2R)) for |s| <= R, 0 outside. C^{m-1} across the support edge,
// value 1 at s = 0.
inline double cospow(double s, double R, int m) {
    double u = std::abs(s) / R;
    if (u >= 1.0) return 0.0;
    return std::pow(std::cos(0.5 * M_PI * u), m);
}

// int_0^{pi/2} cos^m(t) dt via the finite Fourier expansion of cos^m.
inline double cospow_halfperiod_integral(int m) {
    double twom = std::pow(2.0, -m);
    double s = 0.0;
    for (int j = m; j >= 1; j -= 2) {
        int k = (m - j) / 2;
        double c = 2.0 * twom * binomial(m, k);
        // int_0^{pi/2} cos(j t) dt = sin(j pi/2)/j
        s += c * std::sin(0.5 * M_PI * j) / j;
    }
    if (m % 2 == 0) s += twom * binomial(m, m / 2) * 0.5 * M_PI;
    return s;
}

// int_0^{pi/2} t cos^m(t) dt, same expansion.
inline double cospow_halfperiod_moment(int m) {
    double twom = std::pow(2.0, -m);
    double s = 0.0;
    for (int j = m; j >= 1; j -= 2) {
        int k = (m - j) / 2;
        double c = 2.0 * twom * binomial(m, k);
        // int_0^{pi/2} t cos(j t) dt = (pi/(2j)) sin(j pi/2) + (cos(j pi/2)-1)/j^2
        s += c * (0.5 * M_PI / j * std::sin(0.5 * M_PI * j) +
                  (std::cos(0.5 * M_PI * j) - 1.0) / (double(j) * j));
    }
    if (m % 2 == 0) s += twom * binomial(m, m / 2) * M_PI * M_PI / 8.0;
    return s;
}

// int_{-R}^{R} cos^m(pi s/(2R)) ds
inline double cospow_integral_1d(double R, int m) {
    return 4.0 * R / M_PI * cospow_halfperiod_integral(m);
}

// int_{|x|<=R, x in R^2} cos^m(pi |x|/(2R)) dx
inline double cospow_integral_radial_2d(double R, int m) {
    return 8.0 * R * R / M_PI * cospow_halfperiod_moment(m);
}

// Monotone ramp: 0 at u <= 0, 1 at u >= 1, derivative proportional to
// sin^8(pi u). Flat to eighth order at both ends, so a cutoff glued from it
// keeps the fast transform-side decay of the cosine-power family (the
// C-infinity smoothstep below decays much more slowly in practice).
inline double cospow_ramp(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double x = 2.0 * M_PI * u;
    return (35.0 * M_PI * u - 28.0 * std::sin(x) + 7.0 * std::sin(2.0 * x) -
            (4.0 / 3.0) * std::sin(3.0 * x) + 0.125 * std::sin(4.0 * x)) /
           (35.0 * M_PI);
}

// Mollifier exp(1 - 1/(1-u^2)) on |u|<1 (value 1 at 0), with derivatives.
inline double mollifier(double u) {
    double u2 = u * u;
    if (u2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u2));
}

// exp(-1/u) glue and the C-infinity transition S: 0 for u<=0, 1 for u>=1.
inline double glue(double u) { return u <= 0.0 ? 0.0 : std::exp(-1.0 / u); }

inline double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = glue(u), b = glue(1.0 - u);
    return a / (a + b);
}

// Plateau cutoff in a scalar variable: 1 on |s| <= r0, 0 for |s| >= r1,
// C-infinity in between. Requires 0 <= r0 < r1.
inline double plateau(double s, double r0, double r1) {
    double u = std::abs(s);
    if (u <= r0) return 1.0;
    if (u >= r1) return 0.0;
    return smoothstep((r1 - u) / (r1 - r0));
}

// B(u) = exp(-u/(4-u)) for u in (-inf, 4), 0 beyond; B(0)=1 and all derivatives
// vanish as u -> 4. Used as the radial cutoff of the cubic-flat perturbation.
struct RadialCutoff {
    static double value(double u) {
        if (u >= 4.0) return 0.0;
        return std::exp(-u / (4.0 - u));
    }
    static double d1(double u) {
        if (u >= 4.0) return 0.0;
        double w = 4.0 - u;
        return value(u) * (-4.0 / (w * w));
    }
    static double d2(double u) {
        if (u >= 4.0) return 0.0;
        double w = 4.0 - u;
        double f1 = -4.0 / (w * w);
        double f2 = -8.0 / (w * w * w);
        return value(u) * (f2 + f1 * f1);
    }
};

} // namespace extlab::bumps
