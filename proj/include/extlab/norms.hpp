#pragma once

// Every norm the toolkit measures: mixed L^q_t L^r_x and its weak-in-time
// variant, Sobolev H^s / homogeneous, the power-weighted L^2 with a
// fractional-derivative multiplier, Sobolev norms on the circle, and the
// angular (sphere-only-derivatives) Sobolev norm on planar grids.

#include <complex>
#include <vector>

#include "extlab/grid.hpp"

namespace extlab {

// Space-time samples: a time ladder (strictly increasing, not necessarily
// uniform) of spatial slices sharing one grid geometry.
struct SpaceTimeField {
    GridFunction proto; // spatial geometry; proto.data unused
    std::vector<double> times;
    std::vector<std::complex<double>> data; // slice-major

    static SpaceTimeField make(const GridFunction& geometry, std::vector<double> times);
    long slice_size() const { return proto.size(); }
    std::complex<double>& at(long ti, long xi) { return data[size_t(ti * slice_size() + xi)]; }
    const std::complex<double>& at(long ti, long xi) const {
        return data[size_t(ti * slice_size() + xi)];
    }
    GridFunction slice(int ti) const;
    double max_abs() const;
};

struct MixedNormSpec {
    double q = 2.0;
    double r = 2.0;
    double t0 = 0.0;
    double t1 = 1.0;
};

// Spatial L^r by trapezoid at each time sample in [t0, t1], then L^q of that
// profile by trapezoid over the (possibly non-uniform) time ladder. With
// boundary_check, the field must decay below 1e-8 x its global max on the
// spatial box edge at every used slice (deliberately windowed measurements
// pass false and report the truncation).
double mixed_norm(const SpaceTimeField& u, const MixedNormSpec& spec, bool boundary_check = true);

// Weak L^{q,infty} in time of the spatial L^r profile: the level-set supremum
// sup_alpha alpha |{t : G(t) > alpha}|^{1/q}, evaluated exactly on the sorted
// sample values with the same trapezoid weights as mixed_norm (which makes
// weak <= strong an identity, not an approximation).
double weak_mixed_norm(const SpaceTimeField& u, double q, double r, double t0, double t1,
                       bool boundary_check = true);

// Spatial L^r of one slice by trapezoid weights (h/2 at the box edge).
double spatial_lr(const GridFunction& g, double r);

struct SobolevSpec {
    double s = 0.0;
    bool homogeneous = false; // allowed only for 0 < s < d/2
};

// DFT-side quadrature of (2 pi)^{-d} int (1+|xi|^2)^s |fhat|^2 (or |xi|^{2s}
// when homogeneous); at s = 0 this is Parseval-exact equal to grid_l2. The
// spectrum must be Nyquist-safe: relative mass outside |xi|_inf <= xi_max/2
// below 1e-6.
double sobolev_norm(const GridFunction& f, const SobolevSpec& spec);

// || |x|^mu g ||_2 with ghat = |xi|^nu fhat. mu in (-d/2, d/2); the cell at
// x = 0 uses the closed-form cell average of |x|^{2 mu}. nu < 0 requires
// negligible spectral mass at xi = 0.
double weighted_l2_norm(const GridFunction& f, double mu, double nu);

// Sobolev norm of order s on the circle from >= 256 uniform angular samples
// f(theta_j), theta_j = 2 pi j / M: (2 pi sum_m (1+m^2)^s |c_m|^2)^{1/2}
// with c_m the Fourier-series coefficients. Top-quarter mode mass above
// 1e-10 of the total is rejected as aliasing.
double circle_sobolev_norm(const std::vector<std::complex<double>>& samples, double s);

// Angular Sobolev norm on a d=2 grid: polar resample (bilinear, 4x angular
// oversampling), per-ring Fourier multiplier (1+m^2)^{nu/2}, then radial
// midpoint integration with weight r. Radial data reduces to the plain L^2
// norm for every nu.
double angular_sobolev_norm(const GridFunction& f, double nu);

} // namespace extlab
