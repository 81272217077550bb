#include "extlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "extlab/errors.hpp"
#include "extlab/legendre.hpp"
#include "extlab/quadrature.hpp"

namespace extlab {

namespace {

constexpr double kBudgetT1d = 1e5;
constexpr double kBudgetT2d = 1024.0;

// Sampled sup of |grad phi| over the amplitude's support (intersected with
// the phase domain), padded 30%. Only used to seed panel counts; the adaptive
// splitter corrects any underestimate.
double grad_sup(const PhaseFunction& phi, double R) {
    double sup = 0.0;
    if (phi.d == 1) {
        for (int i = 0; i <= 64; ++i) {
            double xi = -R + 2.0 * R * double(i) / 64.0;
            Vec p(xi);
            if (!phi.in_domain(p)) continue;
            sup = std::max(sup, std::abs(phi.grad(p)[0]));
        }
    } else {
        for (int i = 0; i <= 32; ++i)
            for (int j = 0; j <= 32; ++j) {
                Vec p(-R + 2.0 * R * double(i) / 32.0, -R + 2.0 * R * double(j) / 32.0);
                if (norm2(p) > R || !phi.in_domain(p)) continue;
                sup = std::max(sup, norm2(phi.grad(p)));
            }
    }
    return 1.3 * sup;
}

// 1d integration sub-intervals of [-R, R]: the annular-domain case excludes
// (-inner, inner) where the phase is undefined (the amplitude is taken as
// effectively supported in the phase's domain there).
std::vector<std::pair<double, double>> intervals_1d(const PhaseFunction& phi, double R) {
    double inner = phi.domain_inner;
    if (inner <= 0.0) return {{-R, R}};
    if (inner >= R)
        throw PreconditionError("kernel_quadrature: amplitude support lies inside the phase's excluded disk");
    return {{-R, -inner}, {inner, R}};
}

} // namespace

KernelSample kernel_quadrature(const PhaseFunction& phi, const Amplitude& a, const Vec& x,
                               double t, double tol, int initial_refine) {
    if (!(tol > 0.0)) throw PreconditionError("kernel_quadrature: tol must be positive");
    if (x.d != phi.d || a.d != phi.d)
        throw PreconditionError("kernel_quadrature: dimension mismatch");
    if (initial_refine < 1) throw PreconditionError("kernel_quadrature: initial_refine must be >= 1");
    const double cap = phi.d == 1 ? kBudgetT1d : kBudgetT2d;
    if (std::abs(t) > cap)
        throw BudgetError("kernel_quadrature: |t| exceeds the quadrature budget for d=" +
                          std::to_string(phi.d));

    const double R = a.support_radius;
    const double G = grad_sup(phi, R);

    KernelSample out;
    out.x = x;
    out.t = t;
    out.method = "quadrature";

    if (phi.d == 1) {
        auto segs = intervals_1d(phi, R);
        const double rate = double(initial_refine) * (std::abs(x[0]) + std::abs(t) * G);
        for (auto [lo, hi] : segs) {
            auto f = [&](double xi) {
                Vec p(xi);
                double amp = a.eval(p);
                if (amp == 0.0) return std::complex<double>(0.0, 0.0);
                double ph = x[0] * xi + t * phi.value(p);
                return std::complex<double>(amp * std::cos(ph), amp * std::sin(ph));
            };
            QuadResult q = integrate_oscillatory(f, lo, hi, tol / double(segs.size()), rate);
            out.value += q.value;
            out.estimated_error += q.estimated_error;
            out.evaluations += q.evaluations;
            out.converged = out.converged && q.converged;
        }
        return out;
    }

    // d = 2: nested quadrature, inner along xi1 at fixed xi2. Inner absolute
    // tolerance tol/(8R) keeps the inherited error below tol/4 after the
    // length-2R outer integration; the outer rule itself gets tol/2.
    const double inner_tol = tol / (8.0 * R);
    const double rate_in = double(initial_refine) * (std::abs(x[0]) + std::abs(t) * G);
    const double rate_out = double(initial_refine) * (std::abs(x[1]) + std::abs(t) * G);
    const double inner_r = phi.domain_inner;
    long evals = 0;
    double worst_inner = 0.0;
    bool inner_ok = true;

    auto outer_f = [&](double xi2) -> std::complex<double> {
        double w2 = R * R - xi2 * xi2;
        if (w2 <= 0.0) return {0.0, 0.0};
        double w = std::sqrt(w2);
        auto f = [&](double xi1) {
            Vec p(xi1, xi2);
            double amp = a.eval(p);
            if (amp == 0.0) return std::complex<double>(0.0, 0.0);
            double ph = x[0] * xi1 + x[1] * xi2 + t * phi.value(p);
            return std::complex<double>(amp * std::cos(ph), amp * std::sin(ph));
        };
        std::vector<std::pair<double, double>> segs;
        double win2 = inner_r * inner_r - xi2 * xi2;
        if (inner_r > 0.0 && win2 > 0.0) {
            double win = std::sqrt(win2);
            if (win >= w) return {0.0, 0.0};
            segs = {{-w, -win}, {win, w}};
        } else {
            segs = {{-w, w}};
        }
        std::complex<double> val(0.0, 0.0);
        for (auto [lo, hi] : segs) {
            QuadResult q = integrate_oscillatory(f, lo, hi, inner_tol / double(segs.size()),
                                                 rate_in, 2'000'000);
            val += q.value;
            evals += q.evaluations;
            worst_inner = std::max(worst_inner, q.estimated_error);
            inner_ok = inner_ok && q.converged;
        }
        return val;
    };

    QuadResult q = integrate_oscillatory(outer_f, -R, R, tol / 2.0, rate_out, 40'000);
    out.value = q.value;
    out.evaluations = evals + q.evaluations;
    out.estimated_error = q.estimated_error + 2.0 * R * worst_inner;
    out.converged = q.converged && inner_ok;
    return out;
}

KernelSample stationary_phase_leading(const PhaseFunction& phi, const Amplitude& a,
                                      const Vec& x, double t) {
    if (x.d != phi.d || a.d != phi.d)
        throw PreconditionError("stationary_phase_leading: dimension mismatch");
    if (!(t >= 1.0)) throw PreconditionError("stationary_phase_leading: requires t >= 1");
    if (!(norm2(x) < 1.25 * t))
        throw PreconditionError("stationary_phase_leading: requires |x| < (5/4) t");

    KernelSample out;
    out.x = x;
    out.t = t;
    out.method = "stationary_phase";

    Vec v = x * (1.0 / t);
    LegendreDual ld = legendre_dual(phi);
    Vec eta = ld.eta(v);
    if (!(norm2(eta) < a.support_radius)) {
        out.value = {0.0, 0.0};
        out.stationary_in_support = false;
        return out;
    }

    HessianData hd = hessian_data(phi, eta);
    double amp = a.eval(eta);
    double mag = std::pow(2.0 * M_PI, 0.5 * phi.d) / std::sqrt(std::abs(hd.det));
    double ph = t * ld.psi(v) + M_PI * double(hd.signature) / 4.0;
    double scale = std::pow(t, -0.5 * phi.d) * mag * amp;
    out.value = {scale * std::cos(ph), scale * std::sin(ph)};
    return out;
}

namespace {

void check_dyadic_ladder(const std::vector<double>& t_values) {
    if (t_values.size() < 4)
        throw PreconditionError("asymptotic fit: need at least 4 ladder points");
    for (size_t i = 0; i < t_values.size(); ++i) {
        if (!(t_values[i] >= 64.0))
            throw PreconditionError("asymptotic fit: ladder points must be >= 2^6");
        if (i > 0 && std::abs(t_values[i] / t_values[i - 1] - 2.0) > 1e-12)
            throw PreconditionError("asymptotic fit: ladder must be dyadic (consecutive ratio 2)");
    }
}

std::complex<double> gap_at(const PhaseFunction& phi, const Amplitude& a, const Vec& v,
                            double t, double extra_order) {
    // Quadrature tolerance tracks the expected gap magnitude so the oracle
    // error stays a small fraction of the quantity being fitted.
    double tol = std::max(1e-13, 1e-4 * std::pow(t, -(0.5 * phi.d + extra_order)));
    KernelSample kq = kernel_quadrature(phi, a, v * t, t, tol);
    if (!kq.converged)
        throw BudgetError("asymptotic fit: quadrature budget exhausted at t = " + std::to_string(t));
    KernelSample kl = stationary_phase_leading(phi, a, v * t, t);
    return kq.value - kl.value;
}

} // namespace

SlopeFit asymptotic_error_fit(const PhaseFunction& phi, const Amplitude& a, const Vec& x_dir,
                              const std::vector<double>& t_values) {
    check_dyadic_ladder(t_values);
    std::vector<double> ts, gaps;
    for (double t : t_values) {
        ts.push_back(t);
        gaps.push_back(std::abs(gap_at(phi, a, x_dir, t, 1.0)));
    }
    return slope_fit(ts, gaps);
}

SlopeFit richardson_residual_fit(const PhaseFunction& phi, const Amplitude& a,
                                 const std::vector<double>& t_values) {
    check_dyadic_ladder(t_values);
    const Vec v = Vec::zero(phi.d);
    const double lead_order = 0.5 * phi.d + 1.0;
    const size_t n = t_values.size();

    std::vector<std::complex<double>> gap(n);
    for (size_t i = 0; i < n; ++i) gap[i] = gap_at(phi, a, v, t_values[i], 2.0);

    // y_i = gap_i * t_i^{d/2+1} = c1 + c2 / t_i + ...; on a dyadic ladder
    // 2 y_n - y_{n-1} cancels the 1/t term exactly.
    auto y = [&](size_t i) { return gap[i] * std::pow(t_values[i], lead_order); };
    std::complex<double> c1 = 2.0 * y(n - 1) - y(n - 2);

    std::vector<double> ts, res;
    for (size_t i = 0; i < n; ++i) {
        ts.push_back(t_values[i]);
        res.push_back(std::abs(gap[i] - c1 * std::pow(t_values[i], -lead_order)));
    }
    return slope_fit(ts, res);
}

DecayCheckReport nonstationary_decay_check(const PhaseFunction& phi, const Amplitude& a, int M,
                                           const std::vector<std::pair<Vec, double>>& samples) {
    if (M < 0 || M > 3) throw PreconditionError("nonstationary_decay_check: M must be in [0, 3]");
    if (samples.empty()) throw PreconditionError("nonstationary_decay_check: no samples");
    for (auto& [x, t] : samples) {
        if (!(t >= 1.0) || !(norm2(x) >= 1.25 * t))
            throw PreconditionError("nonstationary_decay_check: sample outside |x| >= (5/4) t, t >= 1");
    }
    const double tol = phi.d == 1 ? 1e-12 : 1e-10;
    DecayCheckReport rep;
    rep.M = M;
    for (auto& [x, t] : samples) {
        KernelSample k = kernel_quadrature(phi, a, x, t, tol);
        double w = std::abs(k.value) * std::pow(1.0 + norm2(x), M) * std::pow(1.0 + std::abs(t), M);
        rep.weighted.push_back(w);
    }
    rep.max_weighted = *std::max_element(rep.weighted.begin(), rep.weighted.end());
    rep.min_weighted = *std::min_element(rep.weighted.begin(), rep.weighted.end());
    return rep;
}

} // namespace extlab
