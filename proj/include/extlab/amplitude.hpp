#pragma once

// Radial amplitude cutoffs a(xi) with a(0) = 1, supported in B(0, support_radius).

#include <cmath>
#include <functional>
#include <string>

#include "extlab/bumps.hpp"
#include "extlab/errors.hpp"
#include "extlab/smallvec.hpp"

namespace extlab {

struct Amplitude {
    int d = 1;
    std::string family;        // "cospow" | "plateau" | "mollifier"
    double support_radius = 1.0;
    int order = 8;             // cospow exponent m (smoothness C^{m-1})
    double inner_radius = 0.5; // plateau: identically 1 on B(0, inner_radius)
    std::function<double(const Vec&)> eval;
    bool has_closed_form_integral = false;
    double closed_form_integral = 0.0; // int_{R^d} a(xi) dxi when available

    double operator()(const Vec& xi) const { return eval(xi); }
};

// family "cospow": cos^order(pi |xi| / (2R)), closed-form integral.
// family "plateau": 1 on B(0, inner_radius), C-infinity decay to 0 at R.
// family "mollifier": exp(1 - 1/(1 - |xi/R|^2)), C-infinity.
// family "ramp": 1 on B(0, inner_radius), cosine-power ramp to 0 at R (C^8;
//   much faster transform-side tails than the C-infinity plateau glue).
inline Amplitude make_amplitude(const std::string& family, int d, double support_radius = 1.0,
                                int order = 8, double inner_radius = 0.5) {
    if (d < 1 || d > 2) throw PreconditionError("amplitude: d must be 1 or 2");
    if (support_radius <= 0.0) throw PreconditionError("amplitude: support_radius must be positive");

    Amplitude a;
    a.d = d;
    a.family = family;
    a.support_radius = support_radius;
    a.order = order;
    a.inner_radius = inner_radius;

    const double R = support_radius;
    if (family == "cospow") {
        if (order < 1) throw PreconditionError("amplitude: cospow order must be >= 1");
        const int m = order;
        a.eval = [R, m](const Vec& xi) { return bumps::cospow(norm2(xi), R, m); };
        a.has_closed_form_integral = true;
        a.closed_form_integral = (d == 1) ? bumps::cospow_integral_1d(R, m)
                                          : bumps::cospow_integral_radial_2d(R, m);
    } else if (family == "plateau") {
        if (!(inner_radius > 0.0 && inner_radius < R))
            throw PreconditionError("amplitude: plateau needs 0 < inner_radius < support_radius");
        const double r0 = inner_radius;
        a.eval = [r0, R](const Vec& xi) { return bumps::plateau(norm2(xi), r0, R); };
    } else if (family == "mollifier") {
        a.eval = [R](const Vec& xi) { return bumps::mollifier(norm2(xi) / R); };
    } else if (family == "ramp") {
        if (!(inner_radius > 0.0 && inner_radius < R))
            throw PreconditionError("amplitude: ramp needs 0 < inner_radius < support_radius");
        const double r0 = inner_radius;
        a.eval = [r0, R](const Vec& xi) {
            return bumps::cospow_ramp((R - norm2(xi)) / (R - r0));
        };
        if (d == 1) {
            // flat part 2 r0 plus two shoulders averaging 1/2 by the point
            // symmetry ramp(u) + ramp(1-u) = 1
            a.has_closed_form_integral = true;
            a.closed_form_integral = r0 + R;
        }
    } else {
        throw PreconditionError("amplitude: unknown family '" + family + "'");
    }
    return a;
}

} // namespace extlab
