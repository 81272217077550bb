#include "extlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "extlab/errors.hpp"

namespace extlab {

namespace {

// trapezoid weight along one axis: h/2 at the sampled box edges
double axis_weight(int i, int n, double h) { return (i == 0 || i == n - 1) ? 0.5 * h : h; }

std::vector<int> window_indices(const std::vector<double>& times, double t0, double t1) {
    double tol = 1e-12 * (std::abs(t0) + std::abs(t1) + 1.0);
    std::vector<int> idx;
    for (size_t i = 0; i < times.size(); ++i)
        if (times[i] >= t0 - tol && times[i] <= t1 + tol) idx.push_back(int(i));
    if (idx.size() < 2)
        throw PreconditionError("mixed norm: window must contain at least two time samples");
    return idx;
}

// trapezoid weights for a (possibly non-uniform) increasing ladder
std::vector<double> ladder_weights(const std::vector<double>& t) {
    size_t n = t.size();
    std::vector<double> w(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double lo = i == 0 ? t[0] : 0.5 * (t[i - 1] + t[i]);
        double hi = i + 1 == n ? t[n - 1] : 0.5 * (t[i] + t[i + 1]);
        w[i] = hi - lo;
    }
    return w;
}

void enforce_boundary_decay(const SpaceTimeField& u, const std::vector<int>& used) {
    double global = 0.0, edge = 0.0;
    const int n0 = u.proto.n[0], n1 = u.proto.d == 2 ? u.proto.n[1] : 1;
    for (int ti : used) {
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j) {
                double a = std::abs(u.at(ti, long(i) * n1 + j));
                global = std::max(global, a);
                bool on_edge = i == 0 || i == n0 - 1 || (u.proto.d == 2 && (j == 0 || j == n1 - 1));
                if (on_edge) edge = std::max(edge, a);
            }
    }
    if (global > 0.0 && edge > 1e-8 * global)
        throw NumericsError("mixed norm: field has not decayed at the spatial box edge (box too small)");
}

std::vector<double> profile(const SpaceTimeField& u, double r, const std::vector<int>& idx) {
    std::vector<double> G;
    G.reserve(idx.size());
    for (int ti : idx) G.push_back(spatial_lr(u.slice(ti), r));
    return G;
}

} // namespace

SpaceTimeField SpaceTimeField::make(const GridFunction& geometry, std::vector<double> times) {
    if (times.size() < 2) throw PreconditionError("space-time field: need at least two times");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw PreconditionError("space-time field: times must be strictly increasing");
    SpaceTimeField u;
    u.proto = geometry;
    u.proto.data.assign(size_t(geometry.size()), {0.0, 0.0});
    u.times = std::move(times);
    u.data.assign(size_t(u.proto.size()) * u.times.size(), {0.0, 0.0});
    return u;
}

GridFunction SpaceTimeField::slice(int ti) const {
    GridFunction g = proto;
    long n = slice_size();
    for (long i = 0; i < n; ++i) g.data[size_t(i)] = at(ti, i);
    return g;
}

double SpaceTimeField::max_abs() const {
    double m = 0.0;
    for (const auto& z : data) m = std::max(m, std::abs(z));
    return m;
}

double spatial_lr(const GridFunction& g, double r) {
    if (!(r >= 1.0)) throw PreconditionError("spatial_lr: r must be >= 1");
    const int n0 = g.n[0], n1 = g.d == 2 ? g.n[1] : 1;
    double s = 0.0;
    for (int i = 0; i < n0; ++i) {
        double wi = axis_weight(i, n0, g.h[0]);
        for (int j = 0; j < n1; ++j) {
            double w = g.d == 2 ? wi * axis_weight(j, n1, g.h[1]) : wi;
            s += w * std::pow(std::abs(g.at(i, j)), r);
        }
    }
    return std::pow(s, 1.0 / r);
}

double mixed_norm(const SpaceTimeField& u, const MixedNormSpec& spec, bool boundary_check) {
    if (!(spec.q >= 1.0) || !(spec.r >= 1.0))
        throw PreconditionError("mixed_norm: q, r must be >= 1 and finite");
    auto idx = window_indices(u.times, spec.t0, spec.t1);
    if (boundary_check) enforce_boundary_decay(u, idx);
    std::vector<double> sub;
    for (int i : idx) sub.push_back(u.times[size_t(i)]);
    auto w = ladder_weights(sub);
    auto G = profile(u, spec.r, idx);
    double s = 0.0;
    for (size_t i = 0; i < G.size(); ++i) s += w[i] * std::pow(G[i], spec.q);
    return std::pow(s, 1.0 / spec.q);
}

double weak_mixed_norm(const SpaceTimeField& u, double q, double r, double t0, double t1,
                       bool boundary_check) {
    if (!(q >= 1.0) || !(r >= 1.0)) throw PreconditionError("weak_mixed_norm: q, r must be >= 1");
    auto idx = window_indices(u.times, t0, t1);
    if (boundary_check) enforce_boundary_decay(u, idx);
    std::vector<double> sub;
    for (int i : idx) sub.push_back(u.times[size_t(i)]);
    auto w = ladder_weights(sub);
    auto G = profile(u, r, idx);
    // sup over levels alpha of alpha * |{G > alpha}|^{1/q} is attained at a
    // sample value; scan them in decreasing order with cumulative measure.
    std::vector<size_t> order(G.size());
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return G[a] > G[b]; });
    double cum = 0.0, best = 0.0;
    for (size_t j : order) {
        cum += w[j];
        best = std::max(best, G[j] * std::pow(cum, 1.0 / q));
    }
    return best;
}

double sobolev_norm(const GridFunction& f, const SobolevSpec& spec) {
    if (spec.homogeneous && !(spec.s > 0.0 && spec.s < 0.5 * f.d))
        throw PreconditionError("sobolev_norm: homogeneous flag requires 0 < s < d/2");
    GridFunction fh = dft(f);
    const int n0 = fh.n[0], n1 = fh.d == 2 ? fh.n[1] : 1;
    double total = 0.0, outer = 0.0, weighted = 0.0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            Vec xi = fh.point(i, j);
            double m2 = std::norm(fh.at(i, j));
            total += m2;
            bool near_nyquist = std::abs(xi[0]) > 0.5 * M_PI / f.h[0] ||
                                (fh.d == 2 && std::abs(xi[1]) > 0.5 * M_PI / f.h[1]);
            if (near_nyquist) outer += m2;
            double rho2 = dot(xi, xi);
            weighted += m2 * (spec.homogeneous ? std::pow(rho2, spec.s)
                                               : std::pow(1.0 + rho2, spec.s));
        }
    if (total > 0.0 && outer > 1e-6 * total)
        throw PreconditionError("sobolev_norm: spectrum reaches the Nyquist margin (grid too coarse)");
    return std::sqrt(fh.cell() * weighted / std::pow(2.0 * M_PI, f.d));
}

double weighted_l2_norm(const GridFunction& f, double mu, double nu) {
    if (!(std::abs(mu) < 0.5 * f.d))
        throw PreconditionError("weighted_l2_norm: need |mu| < d/2 for an integrable weight");
    GridFunction g = f;
    if (nu != 0.0) {
        if (nu < 0.0) {
            GridFunction fh = dft(f);
            double total = 0.0;
            for (const auto& z : fh.data) total += std::norm(z);
            double at0 = std::norm(fh.at(fh.n[0] / 2, fh.d == 2 ? fh.n[1] / 2 : 0));
            if (total > 0.0 && at0 > 1e-12 * total)
                throw PreconditionError(
                    "weighted_l2_norm: nu < 0 needs vanishing spectral mass at xi = 0");
        }
        g = apply_multiplier(f, [nu](const Vec& xi) -> std::complex<double> {
            double rho = norm2(xi);
            return rho == 0.0 ? 0.0 : std::pow(rho, nu);
        });
    }
    const int n0 = g.n[0], n1 = g.d == 2 ? g.n[1] : 1;
    const double cell = g.cell();
    double s = 0.0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            Vec x = g.point(i, j);
            double rho = norm2(x);
            double wavg;
            if (rho == 0.0) {
                // closed-form cell average of |x|^{2 mu} over the singular cell:
                // interval of length h in d=1, equal-area disk in d=2
                if (g.d == 1) {
                    wavg = std::pow(0.5 * g.h[0], 2.0 * mu) / (2.0 * mu + 1.0);
                } else {
                    double R = std::sqrt(cell / M_PI);
                    wavg = std::pow(R, 2.0 * mu) / (mu + 1.0);
                }
            } else {
                wavg = std::pow(rho, 2.0 * mu);
            }
            s += cell * wavg * std::norm(g.at(i, j));
        }
    return std::sqrt(s);
}

double circle_sobolev_norm(const std::vector<std::complex<double>>& samples, double s) {
    const size_t M = samples.size();
    if (M < 256 || M % 2 != 0)
        throw PreconditionError("circle_sobolev_norm: need >= 256 (even) uniform angular samples");
    std::vector<std::complex<double>> buf = samples;
    fft_inplace(buf, true);
    const long half = long(M) / 2;
    double total = 0.0, top = 0.0, weighted = 0.0;
    for (long m = -half; m < half; ++m) {
        size_t k = size_t((m + long(M)) % long(M));
        double c2 = std::norm(buf[k]) / double(M * M);
        total += c2;
        if (std::abs(m) > half / 2) top += c2;
        weighted += std::pow(1.0 + double(m) * double(m), s) * c2;
    }
    if (total > 0.0 && top > 1e-10 * total)
        throw PreconditionError("circle_sobolev_norm: top-quarter mode mass indicates aliasing");
    return std::sqrt(2.0 * M_PI * weighted);
}

double angular_sobolev_norm(const GridFunction& f, double nu) {
    if (f.d != 2) throw PreconditionError("angular_sobolev_norm: d = 2 grids only");
    const double hmin = std::min(f.h[0], f.h[1]);
    const double r_max = std::min((f.n[0] / 2 - 1) * f.h[0], (f.n[1] / 2 - 1) * f.h[1]);
    const double hr = 0.5 * hmin;
    const int nr = int(std::floor(r_max / hr));
    if (nr < 8) throw PreconditionError("angular_sobolev_norm: grid too small for a polar resample");

    size_t M = 64;
    while (double(M) < 4.0 * 2.0 * M_PI * r_max / hmin) M *= 2;

    auto bilinear = [&](double x, double y) -> std::complex<double> {
        double ui = x / f.h[0] + f.n[0] / 2;
        double vj = y / f.h[1] + f.n[1] / 2;
        int i0 = int(std::floor(ui)), j0 = int(std::floor(vj));
        if (i0 < 0 || j0 < 0 || i0 + 1 >= f.n[0] || j0 + 1 >= f.n[1]) return {0.0, 0.0};
        double du = ui - i0, dv = vj - j0;
        return (1 - du) * (1 - dv) * f.at(i0, j0) + du * (1 - dv) * f.at(i0 + 1, j0) +
               (1 - du) * dv * f.at(i0, j0 + 1) + du * dv * f.at(i0 + 1, j0 + 1);
    };

    std::vector<std::complex<double>> ring(M);
    const long half = long(M) / 2;
    double acc = 0.0, total = 0.0, top = 0.0;
    for (int l = 0; l < nr; ++l) {
        double r = (l + 0.5) * hr;
        for (size_t j = 0; j < M; ++j) {
            double th = 2.0 * M_PI * double(j) / double(M);
            ring[j] = bilinear(r * std::cos(th), r * std::sin(th));
        }
        fft_inplace(ring, true);
        double ring_sum = 0.0;
        for (long m = -half; m < half; ++m) {
            size_t k = size_t((m + long(M)) % long(M));
            double c2 = std::norm(ring[k]) / double(M * M);
            total += r * c2;
            if (std::abs(m) > half / 2) top += r * c2;
            ring_sum += std::pow(1.0 + double(m) * double(m), nu) * c2;
        }
        acc += hr * r * 2.0 * M_PI * ring_sum;
    }
    if (total > 0.0 && top > 1e-6 * total)
        throw PreconditionError("angular_sobolev_norm: polar resample aliasing above threshold");
    return std::sqrt(acc);
}

} // namespace extlab
