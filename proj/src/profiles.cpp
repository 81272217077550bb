#include "extlab/profiles.hpp"

#include <cmath>
#include <limits>

#include "extlab/bumps.hpp"
#include "extlab/errors.hpp"

namespace extlab {

namespace {

// All smooth families use the same cos^8 cutoff; |f|^2 is then cos^16, whose
// integrals bumps.hpp knows in closed form.
constexpr int kOrder = 8;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

FrequencyProfile bump_profile(int d, const Vec& center, double width) {
    if (d < 1 || d > 2) throw PreconditionError("bump_profile: d must be 1 or 2");
    if (width <= 0.0) throw PreconditionError("bump_profile: width must be positive");
    FrequencyProfile f;
    f.d = d;
    f.descriptor = "bump(center=" + fmt(center.v[0]) +
                   (d == 2 ? "," + fmt(center.v[1]) : std::string()) + ",width=" + fmt(width) + ")";
    Vec c = center;
    f.eval = [c, width](const Vec& xi) -> std::complex<double> {
        Vec u = xi;
        u.v[0] -= c.v[0];
        u.v[1] -= c.v[1];
        return bumps::cospow(norm2(u), width, kOrder);
    };
    f.support_radius = norm2(center) + width;
    f.has_l2_closed_form = true;
    f.l2_closed_form = std::sqrt(d == 1 ? bumps::cospow_integral_1d(width, 2 * kOrder)
                                        : bumps::cospow_integral_radial_2d(width, 2 * kOrder));
    return f;
}

FrequencyProfile knapp_profile(double lambda, int d) {
    if (d < 1 || d > 2) throw PreconditionError("knapp_profile: d must be 1 or 2");
    if (!(lambda >= 2.0)) throw PreconditionError("knapp_profile: lambda must be >= 2");
    FrequencyProfile f;
    f.d = d;
    f.lambda = lambda;
    f.descriptor = "knapp(lambda=" + fmt(lambda) + ")";
    const double amp = std::pow(lambda, 0.5 * d);
    f.eval = [amp, lambda](const Vec& xi) -> std::complex<double> {
        return amp * bumps::cospow(norm2(xi), 1.0 / lambda, kOrder);
    };
    f.support_radius = 1.0 / lambda;
    // lambda^d int eta(lambda xi)^2 dxi = int eta^2: independent of lambda.
    f.has_l2_closed_form = true;
    f.l2_closed_form = std::sqrt(d == 1 ? bumps::cospow_integral_1d(1.0, 2 * kOrder)
                                        : bumps::cospow_integral_radial_2d(1.0, 2 * kOrder));
    return f;
}

FrequencyProfile annular_bump_profile(int d, double lo, double hi) {
    if (d < 1 || d > 2) throw PreconditionError("annular_bump_profile: d must be 1 or 2");
    if (!(0.0 < lo && lo < hi)) throw PreconditionError("annular_bump_profile: need 0 < lo < hi");
    FrequencyProfile f;
    f.d = d;
    f.descriptor = "annular_bump(band=" + fmt(lo) + ":" + fmt(hi) + ")";
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    f.eval = [mid, half](const Vec& xi) -> std::complex<double> {
        return bumps::cospow(norm2(xi) - mid, half, kOrder);
    };
    f.support_radius = hi;
    f.band_lo = lo;
    f.band_hi = hi;
    f.has_l2_closed_form = true;
    // d=1: both signed intervals; d=2: 2 pi int rho cos^16 d rho, whose odd
    // moment about mid vanishes by symmetry.
    f.l2_closed_form = std::sqrt(d == 1 ? 2.0 * bumps::cospow_integral_1d(half, 2 * kOrder)
                                        : 2.0 * M_PI * mid * bumps::cospow_integral_1d(half, 2 * kOrder));
    return f;
}

FrequencyProfile angular_mode_profile(int m, double lo, double hi) {
    FrequencyProfile base = annular_bump_profile(2, lo, hi);
    FrequencyProfile f = base;
    f.mode = m;
    f.descriptor = "angular_mode(m=" + std::to_string(m) + ",band=" + fmt(lo) + ":" + fmt(hi) + ")";
    f.eval = [base, m](const Vec& xi) -> std::complex<double> {
        double r = norm2(xi);
        if (r == 0.0) return 0.0;
        double theta = std::atan2(xi.v[1], xi.v[0]);
        return base.eval(xi) * std::polar(1.0, m * theta);
    };
    // |f| is radial; the annular closed form carries over.
    return f;
}

FrequencyProfile constant_profile(int d) {
    if (d < 1 || d > 2) throw PreconditionError("constant_profile: d must be 1 or 2");
    FrequencyProfile f;
    f.d = d;
    f.descriptor = "constant_on_support";
    f.eval = [](const Vec&) -> std::complex<double> { return 1.0; };
    f.support_radius = std::numeric_limits<double>::infinity();
    return f;
}

FrequencyProfile modulate_profile(const FrequencyProfile& f, const Vec& x0) {
    FrequencyProfile g = f;
    g.descriptor = f.descriptor + "*e^(i xi.x0)";
    auto base = f.eval;
    Vec shift = x0;
    g.eval = [base, shift](const Vec& xi) {
        return base(xi) * std::polar(1.0, dot(xi, shift));
    };
    g.has_l2_closed_form = f.has_l2_closed_form; // |f| unchanged
    return g;
}

FrequencyProfile sum_profiles(const FrequencyProfile& f, const FrequencyProfile& g) {
    if (f.d != g.d) throw PreconditionError("sum_profiles: dimension mismatch");
    FrequencyProfile s = f;
    s.descriptor = f.descriptor + "+" + g.descriptor;
    auto fe = f.eval, ge = g.eval;
    s.eval = [fe, ge](const Vec& xi) { return fe(xi) + ge(xi); };
    s.support_radius = std::max(f.support_radius, g.support_radius);
    s.band_lo = 0.0;
    s.band_hi = 0.0;
    s.has_l2_closed_form = false;
    s.l2_closed_form = 0.0;
    return s;
}

} // namespace extlab
