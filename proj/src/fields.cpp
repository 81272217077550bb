#include "extlab/fields.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "extlab/dyadic.hpp"
#include "extlab/errors.hpp"
#include "extlab/kernels.hpp"
#include "extlab/legendre.hpp"
#include "extlab/parallel.hpp"
#include "extlab/quadrature.hpp"

namespace extlab {

namespace {

using cplx = std::complex<double>;

std::vector<double> linspace(double t0, double t1, int nt) {
    if (nt < 2 || !(t1 > t0)) throw PreconditionError("evolution spec: need nt >= 2 and t1 > t0");
    std::vector<double> ts(static_cast<size_t>(nt), 0.0);
    for (int i = 0; i < nt; ++i) ts[size_t(i)] = t0 + (t1 - t0) * double(i) / double(nt - 1);
    return ts;
}

} // namespace

EvolutionSpec EvolutionSpec::make(int d, std::array<int, 2> n, std::array<double, 2> h, double t0,
                                  double t1, int nt) {
    EvolutionSpec spec;
    spec.geometry = GridFunction::make(d, n, h);
    spec.times = linspace(t0, t1, nt);
    return spec;
}

SpaceTimeField extension_field(const PhaseFunction& phi, const Amplitude& a,
                               const FrequencyProfile& f, const EvolutionSpec& spec) {
    const int d = spec.geometry.d;
    if (phi.d != d || a.d != d || f.d != d)
        throw PreconditionError("extension_field: dimension mismatch");
    const double R = std::min(a.support_radius, f.support_radius);
    if (!(R > 0.0) || R > 1.0 + 1e-12)
        throw PreconditionError("extension_field: a*f must be supported in B(0,1)");

    // Largest phase gradient |x + t grad phi(xi)| over the evaluation set.
    // Convex in t, per-axis extremal in x, so endpoints suffice; xi sweeps a
    // probe lattice on the integrand's support.
    const double tmin = spec.times.front(), tmax = spec.times.back();
    double M = 0.0;
    const int probe = 33;
    bool any_probe = false;
    const int p1 = d == 2 ? probe : 1;
    for (int i = 0; i < probe; ++i) {
        for (int j = 0; j < p1; ++j) {
            Vec xi = d == 1 ? Vec(-R + 2.0 * R * (i + 0.5) / probe)
                            : Vec(-R + 2.0 * R * (i + 0.5) / probe, -R + 2.0 * R * (j + 0.5) / probe);
            if (norm2(xi) > R || !phi.in_domain(xi)) continue;
            any_probe = true;
            Vec g = phi.grad(xi);
            for (double tt : {tmin, tmax}) {
                double s = 0.0;
                for (int ax = 0; ax < d; ++ax) {
                    double lo = spec.geometry.coord(ax, 0) + tt * g.v[ax];
                    double hi = spec.geometry.coord(ax, spec.geometry.n[ax] - 1) + tt * g.v[ax];
                    double w = std::max(std::abs(lo), std::abs(hi));
                    s += w * w;
                }
                M = std::max(M, std::sqrt(s));
            }
        }
    }
    if (!any_probe) throw PreconditionError("extension_field: support lies outside the phase domain");

    const double delta_req = 2.0 * M_PI / (10.0 * std::max(M, 1e-9));
    long n_axis = std::max<long>(spec.min_nodes_axis, long(std::ceil(2.0 * R / delta_req)));
    long total = d == 1 ? n_axis : n_axis * n_axis;
    if (total > spec.node_budget)
        throw BudgetError("extension_field: resolution budget exceeded (" + std::to_string(total) +
                          " nodes needed, budget " + std::to_string(spec.node_budget) +
                          "); refusing rather than aliasing");

    // Midpoint lattice; drop nodes where the weight vanishes.
    const double delta = 2.0 * R / double(n_axis);
    const double cellw = d == 1 ? delta : delta * delta;
    std::vector<double> nx0, nx1, nph;
    std::vector<cplx> nw;
    const long na1 = d == 2 ? n_axis : 1;
    for (long i = 0; i < n_axis; ++i) {
        for (long j = 0; j < na1; ++j) {
            Vec xi = d == 1 ? Vec(-R + (double(i) + 0.5) * delta)
                            : Vec(-R + (double(i) + 0.5) * delta, -R + (double(j) + 0.5) * delta);
            if (norm2(xi) > R || !phi.in_domain(xi)) continue;
            cplx w = a.eval(xi) * f.eval(xi) * cellw;
            if (w == cplx(0.0, 0.0)) continue;
            nx0.push_back(xi.v[0]);
            nx1.push_back(d == 2 ? xi.v[1] : 0.0);
            nph.push_back(phi.value(xi));
            nw.push_back(w);
        }
    }

    SpaceTimeField u = SpaceTimeField::make(spec.geometry, spec.times);
    const long slice = u.slice_size();
    const long npts = slice * long(u.times.size());
    const long nn = long(nw.size());
    const double* X0 = nx0.data();
    const double* X1 = nx1.data();
    const double* PH = nph.data();
    const cplx* W = nw.data();

    parallel_for(npts, [&](long lo, long hi) {
        for (long p = lo; p < hi; ++p) {
            long ti = p / slice, xi_idx = p % slice;
            double tt = u.times[size_t(ti)];
            long i0 = d == 1 ? xi_idx : xi_idx / u.proto.n[1];
            long i1 = d == 1 ? 0 : xi_idx % u.proto.n[1];
            double x0 = u.proto.coord(0, int(i0));
            double x1 = d == 2 ? u.proto.coord(1, int(i1)) : 0.0;
            cplx acc(0.0, 0.0);
            for (long m = 0; m < nn; ++m) {
                double ph = x0 * X0[m] + x1 * X1[m] + tt * PH[m];
                acc += W[m] * cplx(std::cos(ph), std::sin(ph));
            }
            u.data[size_t(p)] = acc;
        }
    });
    return u;
}

SpaceTimeField multiplier_evolution(const GridFunction& phi0, EvolutionSymbol sym, double alpha,
                                    const std::vector<double>& times) {
    if (sym == EvolutionSymbol::fractional && !(alpha > 0.0))
        throw PreconditionError("multiplier_evolution: alpha must be positive");
    if (sym == EvolutionSymbol::half_wave) alpha = 1.0;

    // dft hands back the dual-lattice geometry, so fhat.coord is the
    // frequency itself.
    GridFunction fhat = dft(phi0);

    // Spectral hygiene: two-fold Nyquist margin always; an annulus clear of
    // the origin whenever the symbol is not smooth there.
    double total = 0.0, outer = 0.0, dc = 0.0;
    const double half_nyq = M_PI / (2.0 * (phi0.d == 2 ? std::max(phi0.h[0], phi0.h[1]) : phi0.h[0]));
    const double core = 4.0 * (phi0.d == 2 ? std::max(fhat.h[0], fhat.h[1]) : fhat.h[0]);
    const long n1 = phi0.d == 2 ? phi0.n[1] : 1;
    for (long i = 0; i < phi0.n[0]; ++i) {
        for (long j = 0; j < n1; ++j) {
            double xi0 = fhat.coord(0, int(i));
            double xi1 = phi0.d == 2 ? fhat.coord(1, int(j)) : 0.0;
            double r = std::sqrt(xi0 * xi0 + xi1 * xi1);
            double m2 = std::norm(fhat.at(i, j));
            total += m2;
            if (r > half_nyq) outer += m2;
            if (r <= core) dc += m2;
        }
    }
    if (total <= 0.0) throw PreconditionError("multiplier_evolution: zero input");
    if (outer > 1e-9 * total)
        throw PreconditionError("multiplier_evolution: spectrum exceeds half the Nyquist radius "
                                "(needs two-fold margin)");
    const bool needs_annulus = sym == EvolutionSymbol::half_wave || alpha < 2.0;
    if (needs_annulus && dc > 1e-8 * total)
        throw PreconditionError("multiplier_evolution: symbol |xi|^" + std::to_string(alpha) +
                                " is not smooth at 0; spectrum must live in an annulus away from 0");

    SpaceTimeField u = SpaceTimeField::make(phi0, times);
    const long nt = long(times.size());
    parallel_for(nt, [&](long lo, long hi) {
        for (long ti = lo; ti < hi; ++ti) {
            double tt = u.times[size_t(ti)];
            GridFunction ghat = fhat;
            for (long i = 0; i < phi0.n[0]; ++i) {
                for (long j = 0; j < n1; ++j) {
                    double xi0 = fhat.coord(0, int(i));
                    double xi1 = phi0.d == 2 ? fhat.coord(1, int(j)) : 0.0;
                    double r = std::sqrt(xi0 * xi0 + xi1 * xi1);
                    double m = sym == EvolutionSymbol::half_wave ? r : std::pow(r, alpha);
                    ghat.at(i, j) *= std::polar(1.0, tt * m);
                }
            }
            GridFunction slice = idft(ghat);
            std::copy(slice.data.begin(), slice.data.end(),
                      u.data.begin() + ti * u.slice_size());
        }
    });
    return u;
}

GridFunction lp_frequency_slice(const FrequencyProfile& f, int k, int nx, double extent) {
    if (f.d != 1) throw PreconditionError("lp_frequency_slice: d = 1 only");
    GridFunction g = sample_grid(1, {nx, 1}, {2.0 * extent / nx, 0.0},
                                 [&](const Vec& xi) { return f.eval(xi); });
    return lp_project(g, k, LpMode::standard);
}

GridFunction dual_phase_field(const PhaseFunction& phi, const Amplitude& a,
                              const FrequencyProfile& f, int k, double t, int nx) {
    if (phi.d != 1 || a.d != 1 || f.d != 1)
        throw PreconditionError("dual_phase_field: implemented for d = 1");
    if (k < 1) throw PreconditionError("dual_phase_field: k must be >= 1");
    const double pow2k = std::ldexp(1.0, k);
    if (!(t >= 16.0 * pow2k))
        throw PreconditionError("dual_phase_field: t below the 16 * 2^k threshold");
    if (!std::isfinite(f.support_radius))
        throw PreconditionError("dual_phase_field: profile must be compactly supported");
    if (nx < 16 || nx % 2 != 0) throw PreconditionError("dual_phase_field: nx must be even, >= 16");

    // The dual-phase coefficient lives on the gradient range of the phase; the
    // construction needs it inside B(0, 3/2).
    double vmax = 0.0;
    const int probe = 129;
    for (int i = 0; i < probe; ++i) {
        Vec xi(-a.support_radius + 2.0 * a.support_radius * (i + 0.5) / probe);
        if (!phi.in_domain(xi)) continue;
        vmax = std::max(vmax, norm2(phi.grad(xi)));
    }
    if (vmax > 1.5)
        throw PreconditionError("dual_phase_field: coefficient support escapes B(0, 3/2)");

    const LegendreDual ld = legendre_dual(phi);

    // Leading coefficient A0(v): Hessian normalization at the critical point
    // eta(v), zero once eta leaves the amplitude support.
    auto A0 = [&](double v) -> cplx {
        Vec vv(v);
        if (norm2(vv) >= ld.radius) return 0.0;
        Vec eta;
        try {
            eta = ld.eta(vv);
        } catch (const NumericsError&) {
            return 0.0;
        }
        if (norm2(eta) >= a.support_radius || !phi.in_domain(eta)) return 0.0;
        double av = a.eval(eta);
        if (av == 0.0) return 0.0;
        HessianData hd = hessian_data(phi, eta);
        return std::sqrt(2.0 * M_PI / std::abs(hd.det)) *
               std::polar(av, 0.25 * M_PI * double(hd.signature));
    };

    const double rf = f.support_radius;
    auto f_check = [&](double y) -> cplx {
        QuadResult q = integrate_oscillatory(
            [&](double xi) { return f.eval(Vec(xi)) * std::polar(1.0, y * xi); }, -rf, rf, 1e-15,
            std::abs(y) * std::max(rf, 1e-3));
        return q.value / (2.0 * M_PI);
    };
    auto g_k = [&](double y) -> cplx {
        double b = BumpPartition::beta(std::abs(y) / pow2k);
        if (b == 0.0) return 0.0;
        return b * f_check(y);
    };

    // Scale of the localized profile, for the outer absolute tolerance.
    double gscale = 0.0;
    for (int i = 0; i <= 32; ++i) {
        double y = pow2k * (0.5 + 1.5 * double(i) / 32.0);
        gscale = std::max(gscale, std::abs(g_k(y)));
        gscale = std::max(gscale, std::abs(g_k(-y)));
    }
    const double seg_len = 1.5 * pow2k;
    const double tol_outer = std::max(1e-18, 1e-9 * gscale * seg_len);
    const double rate = a.support_radius + rf;

    GridFunction F = GridFunction::make(1, {nx, 1}, {4.0 / nx, 0.0});
    parallel_for(nx, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            const double x = F.coord(0, int(i));
            // A0 vanishes beyond the gradient range; |y|/t <= 1/8 at the
            // mandated times.
            if (std::abs(x) > vmax + 2.0 * pow2k / t + 1e-9) {
                F.at(i) = 0.0;
                continue;
            }
            auto integrand = [&](double y) -> cplx {
                double v = x - y / t;
                cplx c = A0(v);
                if (c == cplx(0.0, 0.0)) return 0.0;
                cplx g = g_k(y);
                if (g == cplx(0.0, 0.0)) return 0.0;
                return std::polar(1.0, t * ld.psi(Vec(v))) * c * g;
            };
            cplx acc(0.0, 0.0);
            for (double sgn : {-1.0, 1.0}) {
                double y0 = sgn < 0 ? -2.0 * pow2k : 0.5 * pow2k;
                double y1 = sgn < 0 ? -0.5 * pow2k : 2.0 * pow2k;
                QuadResult q = integrate_oscillatory(integrand, y0, y1, tol_outer, rate, 4'000'000);
                acc += q.value;
            }
            if (acc == cplx(0.0, 0.0)) {
                F.at(i) = 0.0;
            } else {
                F.at(i) = std::polar(1.0, -t * ld.psi(Vec(x))) / std::sqrt(t) * acc;
            }
        }
    });
    return F;
}

} // namespace extlab
