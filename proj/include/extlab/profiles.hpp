#pragma once

// Frequency-side data catalog: the functions f fed to the extension operator
// and the initial spectra fed to multiplier evolutions. Each profile carries
// enough support metadata for node placement and Nyquist checks, plus
// closed-form normalization data where the family admits one.

#include <complex>
#include <functional>
#include <string>

#include "extlab/smallvec.hpp"

namespace extlab {

struct FrequencyProfile {
    int d = 1;
    std::string descriptor; // family tag with parameters, e.g. "knapp(lambda=8)"
    std::function<std::complex<double>(const Vec&)> eval;

    // Closed ball |xi| <= support_radius containing the support. The constant
    // profile reports the radius as infinity; combine with the amplitude's.
    double support_radius = 1.0;

    // Annular families record their radial band [band_lo, band_hi]; 0/0 otherwise.
    double band_lo = 0.0;
    double band_hi = 0.0;

    bool has_l2_closed_form = false;
    double l2_closed_form = 0.0;

    double lambda = 0.0; // concentration parameter, knapp family
    int mode = 0;        // angular mode m, angular_mode family

    std::complex<double> operator()(const Vec& xi) const { return eval(xi); }
};

// Scalar bump cos^8(pi |xi - center| / (2 width)) at the given center.
FrequencyProfile bump_profile(int d, const Vec& center, double width);

// f(xi) = lambda^{d/2} eta(lambda xi) with the fixed smooth eta = cos^8 bump on
// B(0,1). The L^2 norm is lambda-independent (closed form recorded). lambda >= 2.
FrequencyProfile knapp_profile(double lambda, int d);

// Radial bump supported on the annulus lo <= |xi| <= hi (0 < lo < hi).
FrequencyProfile annular_bump_profile(int d, double lo, double hi);

// d = 2 only: annular radial bump times e^{i m theta}. |f| is radial, so the
// L^2 closed form of the annular bump carries over.
FrequencyProfile angular_mode_profile(int m, double lo, double hi);

// f identically 1; the effective support comes from the amplitude.
FrequencyProfile constant_profile(int d);

// Same profile modulated by e^{i xi . x0} (translates the extension field by
// x0 in space).
FrequencyProfile modulate_profile(const FrequencyProfile& f, const Vec& x0);

// Pointwise sum (used by linearity property checks).
FrequencyProfile sum_profiles(const FrequencyProfile& f, const FrequencyProfile& g);

} // namespace extlab
