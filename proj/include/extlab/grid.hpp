#pragma once

// Uniform centered grids carrying complex samples, with continuum-scaled DFT:
//   forward   fhat(xi_m) = h^d sum_j f(x_j) e^{-i x_j . xi_m}
//   inverse   f(x_j) = (2 pi)^{-d} (dxi)^d sum_m fhat(xi_m) e^{+i x_j . xi_m}
// Sample index i maps to coordinate (i - n/2) h per axis, both sides, so the
// frequency lattice is the signed symmetric one: xi_m = 2 pi m / (n h),
// m in [-n/2, n/2).

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "extlab/smallvec.hpp"

namespace extlab {

struct GridFunction {
    int d = 1;
    std::array<int, 2> n{1, 1};   // samples per axis (n[1] unused for d=1)
    std::array<double, 2> h{1.0, 1.0};
    std::vector<std::complex<double>> data; // row-major: index = i0 * n[1] + i1

    static GridFunction make(int d, std::array<int, 2> n, std::array<double, 2> h);

    long size() const { return d == 1 ? n[0] : long(n[0]) * n[1]; }
    double cell() const { return d == 1 ? h[0] : h[0] * h[1]; }
    double coord(int axis, int idx) const { return (idx - n[axis] / 2) * h[axis]; }
    Vec point(int i0, int i1 = 0) const {
        return d == 1 ? Vec(coord(0, i0)) : Vec(coord(0, i0), coord(1, i1));
    }
    std::complex<double>& at(int i0, int i1 = 0) {
        return data[d == 1 ? size_t(i0) : size_t(i0) * size_t(n[1]) + size_t(i1)];
    }
    const std::complex<double>& at(int i0, int i1 = 0) const {
        return data[d == 1 ? size_t(i0) : size_t(i0) * size_t(n[1]) + size_t(i1)];
    }
    // physical box edge along an axis: samples cover [-n/2 h, (n/2 - 1) h]
    double extent(int axis) const { return n[axis] * h[axis]; }
};

// Fills samples from a pointwise evaluator.
GridFunction sample_grid(int d, std::array<int, 2> n, std::array<double, 2> h,
                         const std::function<std::complex<double>(const Vec&)>& f);

// Forward transform; the result grid lives on the frequency lattice
// (spacing 2 pi / (n h) per axis). Power-of-two n per axis required.
// Samples a frequency-side function on the dual lattice of the (n, h) spatial
// grid (the geometry dft produces); idft of the result is the band-limited
// field on (n, h) with that spectrum.
GridFunction sample_spectrum(int d, std::array<int, 2> n, std::array<double, 2> h,
                             const std::function<std::complex<double>(const Vec&)>& f);

GridFunction dft(const GridFunction& f);
// Inverse of dft (returns the grid with spacing 2 pi / (n dxi)).
GridFunction idft(const GridFunction& fhat);

// f -> inverse DFT of m(xi) fhat(xi); stays on the physical side.
GridFunction apply_multiplier(const GridFunction& f,
                              const std::function<std::complex<double>(const Vec&)>& m);

// | ||f||_2^2 - (2 pi)^{-d} ||fhat||_2^2 | / ||f||_2^2 (grid quadrature both sides).
double parseval_residual(const GridFunction& f);

// sqrt(h^d sum |f|^2)
double grid_l2(const GridFunction& f);

// Unnormalized in-place FFT in standard bin order (out[k] = sum_j in[j]
// e^{-+ 2 pi i jk/n}); even length required. Building block for the
// circle-harmonic sums, which do not live on a GridFunction.
void fft_inplace(std::vector<std::complex<double>>& buf, bool forward);

} // namespace extlab
