#include "extlab/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "extlab/errors.hpp"

namespace extlab {

namespace {

// FFTW's planner is not thread safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void check_geometry(const GridFunction& g) {
    if (g.d < 1 || g.d > 2) throw PreconditionError("grid: d must be 1 or 2");
    for (int a = 0; a < g.d; ++a) {
        if (g.n[a] < 2 || g.n[a] % 2 != 0)
            throw PreconditionError("grid: samples per axis must be even and >= 2");
        if (!(g.h[a] > 0.0)) throw PreconditionError("grid: spacing must be positive");
    }
    if (long(g.data.size()) != g.size()) throw PreconditionError("grid: sample count mismatch");
}

void run_fft(std::vector<std::complex<double>>& buf, int d, const std::array<int, 2>& n, int sign) {
    auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = d == 1 ? fftw_plan_dft_1d(n[0], raw, raw, sign, FFTW_ESTIMATE)
                      : fftw_plan_dft_2d(n[0], n[1], raw, raw, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw NumericsError("grid: FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

// Centered index i holds frequency m = i - n/2, which lives at FFT bin
// (i + n/2) mod n; the centering of BOTH lattices contributes e^{i pi m},
// i.e. the sign (-1)^{i + n/2}.
inline int bin(int i, int n) { return (i + n / 2) % n; }
inline double csign(int i, int n) { return ((i + n / 2) & 1) ? -1.0 : 1.0; }

GridFunction freq_geometry(const GridFunction& f) {
    GridFunction out;
    out.d = f.d;
    out.n = f.n;
    for (int a = 0; a < f.d; ++a) out.h[a] = 2.0 * M_PI / (f.n[a] * f.h[a]);
    if (f.d == 1) out.h[1] = 1.0;
    out.data.resize(f.data.size());
    return out;
}

} // namespace

GridFunction GridFunction::make(int d, std::array<int, 2> n, std::array<double, 2> h) {
    GridFunction g;
    g.d = d;
    g.n = n;
    g.h = h;
    if (d == 1) {
        g.n[1] = 1;
        g.h[1] = 1.0;
    }
    g.data.assign(size_t(d == 1 ? n[0] : long(n[0]) * n[1]), {0.0, 0.0});
    check_geometry(g);
    return g;
}

GridFunction sample_grid(int d, std::array<int, 2> n, std::array<double, 2> h,
                         const std::function<std::complex<double>(const Vec&)>& f) {
    GridFunction g = GridFunction::make(d, n, h);
    if (d == 1) {
        for (int i = 0; i < g.n[0]; ++i) g.at(i) = f(g.point(i));
    } else {
        for (int i = 0; i < g.n[0]; ++i)
            for (int j = 0; j < g.n[1]; ++j) g.at(i, j) = f(g.point(i, j));
    }
    return g;
}

GridFunction sample_spectrum(int d, std::array<int, 2> n, std::array<double, 2> h,
                             const std::function<std::complex<double>(const Vec&)>& f) {
    std::array<double, 2> hxi = {2.0 * M_PI / (n[0] * h[0]),
                                 d == 2 ? 2.0 * M_PI / (n[1] * h[1]) : 0.0};
    return sample_grid(d, n, hxi, f);
}

GridFunction dft(const GridFunction& f) {
    check_geometry(f);
    const int n0 = f.n[0], n1 = f.d == 2 ? f.n[1] : 1;
    std::vector<std::complex<double>> buf = f.data;
    run_fft(buf, f.d, f.n, FFTW_FORWARD);

    GridFunction out = freq_geometry(f);
    const double scale = f.cell();
    for (int i = 0; i < n0; ++i) {
        double si = csign(i, n0);
        for (int j = 0; j < n1; ++j) {
            double s = f.d == 2 ? si * csign(j, n1) : si;
            out.data[size_t(i) * n1 + j] =
                scale * s * buf[size_t(bin(i, n0)) * n1 + (f.d == 2 ? bin(j, n1) : 0)];
        }
    }
    return out;
}

GridFunction idft(const GridFunction& fhat) {
    check_geometry(fhat);
    const int n0 = fhat.n[0], n1 = fhat.d == 2 ? fhat.n[1] : 1;
    std::vector<std::complex<double>> buf(fhat.data.size());
    for (int i = 0; i < n0; ++i) {
        double si = csign(i, n0);
        for (int j = 0; j < n1; ++j) {
            double s = fhat.d == 2 ? si * csign(j, n1) : si;
            buf[size_t(bin(i, n0)) * n1 + (fhat.d == 2 ? bin(j, n1) : 0)] =
                s * fhat.data[size_t(i) * n1 + j];
        }
    }
    run_fft(buf, fhat.d, fhat.n, FFTW_BACKWARD);

    GridFunction out = freq_geometry(fhat);
    const double scale = fhat.cell() / std::pow(2.0 * M_PI, fhat.d);
    for (size_t k = 0; k < buf.size(); ++k) out.data[k] = scale * buf[k];
    return out;
}

GridFunction apply_multiplier(const GridFunction& f,
                              const std::function<std::complex<double>(const Vec&)>& m) {
    GridFunction fh = dft(f);
    const int n1 = fh.d == 2 ? fh.n[1] : 1;
    for (int i = 0; i < fh.n[0]; ++i)
        for (int j = 0; j < n1; ++j) fh.at(i, j) *= m(fh.point(i, j));
    return idft(fh);
}

double grid_l2(const GridFunction& f) {
    double s = 0.0;
    for (const auto& z : f.data) s += std::norm(z);
    return std::sqrt(f.cell() * s);
}

void fft_inplace(std::vector<std::complex<double>>& buf, bool forward) {
    if (buf.size() < 2 || buf.size() % 2 != 0)
        throw PreconditionError("fft_inplace: length must be even and >= 2");
    std::array<int, 2> n{int(buf.size()), 1};
    run_fft(buf, 1, n, forward ? FFTW_FORWARD : FFTW_BACKWARD);
}

double parseval_residual(const GridFunction& f) {
    double phys = grid_l2(f);
    if (phys == 0.0) return 0.0;
    GridFunction fh = dft(f);
    double spec = grid_l2(fh) / std::pow(2.0 * M_PI, 0.5 * f.d);
    return std::abs(phys * phys - spec * spec) / (phys * phys);
}

} // namespace extlab
