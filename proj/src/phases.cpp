#include "extlab/phases.hpp"

#include <cmath>
#include <limits>

#include "extlab/bumps.hpp"
#include "extlab/errors.hpp"

namespace extlab {

namespace {

// C^4(B(0,2)) sup norms of the raw cubic-flat bump xi1^3 * B(|xi|^2), measured
// once from exact symbolic derivatives on a dense grid (2e6 points for d=1,
// 2001^2 for d=2, each with local zoom at the argmax) and frozen here. The sup
// is the pure order-4 xi1 derivative near |xi1| = 1.912, attained on the
// xi2 = 0 axis, which is why both dimensions share the value. A unit test
// re-measures by finite differences and must land within 1%.
constexpr double kRhoRawC4NormD1 = 8584.659077;
constexpr double kRhoRawC4NormD2 = 8584.659077;

double rho_raw(const Vec& xi) {
    double u = dot(xi, xi);
    return xi[0] * xi[0] * xi[0] * bumps::RadialCutoff::value(u);
}

Vec rho_raw_grad(const Vec& xi) {
    double u = dot(xi, xi);
    double B = bumps::RadialCutoff::value(u);
    double B1 = bumps::RadialCutoff::d1(u);
    double p = xi[0] * xi[0] * xi[0];
    Vec g = Vec::zero(xi.d);
    g[0] = 3.0 * xi[0] * xi[0] * B + p * B1 * 2.0 * xi[0];
    if (xi.d == 2) g[1] = p * B1 * 2.0 * xi[1];
    return g;
}

SymMat rho_raw_hess(const Vec& xi) {
    double u = dot(xi, xi);
    double B = bumps::RadialCutoff::value(u);
    double B1 = bumps::RadialCutoff::d1(u);
    double B2 = bumps::RadialCutoff::d2(u);
    double x = xi[0];
    double p = x * x * x;
    double px = 3.0 * x * x;
    SymMat h;
    h.d = xi.d;
    // d^2/dx^2 [p B] = p'' B + 2 p' B_x + p B_xx with B_x = 2x B1 etc.
    h.a11 = 6.0 * x * B + 2.0 * px * 2.0 * x * B1 + p * (2.0 * B1 + 4.0 * x * x * B2);
    if (xi.d == 2) {
        double y = xi[1];
        h.a12 = px * 2.0 * y * B1 + p * 4.0 * x * y * B2;
        h.a22 = p * (2.0 * B1 + 4.0 * y * y * B2);
    }
    return h;
}

PhaseFunction make_elliptic(int d) {
    PhaseFunction p;
    p.d = d;
    p.label = "elliptic";
    p.domain_radius = std::numeric_limits<double>::infinity();
    p.value = [](const Vec& xi) { return 0.5 * dot(xi, xi); };
    p.grad = [](const Vec& xi) { return xi; };
    p.hess = [d](const Vec&) { return SymMat::identity(d); };
    return p;
}

PhaseFunction make_hyperbolic() {
    PhaseFunction p;
    p.d = 2;
    p.label = "hyperbolic";
    p.domain_radius = std::numeric_limits<double>::infinity();
    p.value = [](const Vec& xi) { return 0.5 * (xi[0] * xi[0] - xi[1] * xi[1]); };
    p.grad = [](const Vec& xi) { return Vec(xi[0], -xi[1]); };
    p.hess = [](const Vec&) { return SymMat::diag(2, 1.0, -1.0); };
    return p;
}

PhaseFunction make_fractional(int d, double alpha) {
    if (alpha <= 0.0) throw PreconditionError("fractional phase needs alpha > 0");
    PhaseFunction p;
    p.d = d;
    p.label = "fractional";
    p.domain_inner = 0.5;
    p.domain_radius = 2.0;
    p.value = [alpha](const Vec& xi) { return std::pow(norm2(xi), alpha); };
    p.grad = [alpha](const Vec& xi) {
        double r = norm2(xi);
        return xi * (alpha * std::pow(r, alpha - 2.0));
    };
    p.hess = [alpha, d](const Vec& xi) {
        double r = norm2(xi);
        double c1 = alpha * std::pow(r, alpha - 2.0);
        double c2 = alpha * (alpha - 2.0) * std::pow(r, alpha - 4.0);
        SymMat h = SymMat::identity(d).scaled(c1);
        h.a11 += c2 * xi[0] * xi[0];
        if (d == 2) {
            h.a12 += c2 * xi[0] * xi[1];
            h.a22 += c2 * xi[1] * xi[1];
        }
        return h;
    };
    return p;
}

PhaseFunction make_perturbed(int d, const std::vector<double>& params) {
    if (params.empty()) throw PreconditionError("perturbed phase needs params {eps0 [, d1, d2]}");
    double eps0 = params[0];
    if (!(eps0 > 0.0) || eps0 > 0.05)
        throw PreconditionError("perturbed phase needs 0 < eps0 <= 0.05");
    double d1 = params.size() > 1 ? params[1] : 1.0;
    double d2 = params.size() > 2 ? params[2] : 1.0;
    if (std::abs(std::abs(d1) - 1.0) > 0.0 || (d == 2 && std::abs(std::abs(d2) - 1.0) > 0.0))
        throw PreconditionError("perturbed phase diagonal entries must be +1 or -1");
    SymMat D = SymMat::diag(d, d1, d2);
    PhaseFunction p;
    p.d = d;
    p.label = "perturbed";
    p.domain_radius = std::numeric_limits<double>::infinity();
    p.value = [D, eps0](const Vec& xi) {
        return 0.5 * dot(xi, D.mul(xi)) + eps0 * perturbation_bump(xi);
    };
    p.grad = [D, eps0](const Vec& xi) {
        return D.mul(xi) + eps0 * perturbation_bump_grad(xi);
    };
    p.hess = [D, eps0](const Vec& xi) {
        SymMat h = perturbation_bump_hess(xi).scaled(eps0);
        h.a11 += D.a11;
        h.a12 += D.a12;
        h.a22 += D.a22;
        return h;
    };
    return p;
}

} // namespace

double perturbation_c4_normalizer(int d) {
    return d == 1 ? kRhoRawC4NormD1 : kRhoRawC4NormD2;
}

double perturbation_bump(const Vec& xi) {
    return rho_raw(xi) / perturbation_c4_normalizer(xi.d);
}

Vec perturbation_bump_grad(const Vec& xi) {
    return rho_raw_grad(xi) * (1.0 / perturbation_c4_normalizer(xi.d));
}

SymMat perturbation_bump_hess(const Vec& xi) {
    return rho_raw_hess(xi).scaled(1.0 / perturbation_c4_normalizer(xi.d));
}

PhaseFunction builtin_phase(const std::string& name, int d, const std::vector<double>& params) {
    if (d != 1 && d != 2) throw PreconditionError("phase dimension must be 1 or 2");
    if (name == "elliptic") return make_elliptic(d);
    if (name == "hyperbolic") {
        if (d != 2) throw PreconditionError("hyperbolic phase requires d = 2");
        return make_hyperbolic();
    }
    if (name == "fractional") {
        if (params.empty()) throw PreconditionError("fractional phase needs params {alpha}");
        return make_fractional(d, params[0]);
    }
    if (name == "perturbed") return make_perturbed(d, params);
    throw PreconditionError("unknown phase '" + name + "'");
}

HessianData hessian_data(const PhaseFunction& phi, const Vec& xi) {
    if (xi.d != phi.d) throw PreconditionError("hessian_data: dimension mismatch");
    HessianData out;
    out.H = phi.hess(xi);
    out.det = out.H.det();
    auto lam = sym_eigenvalues(out.H);
    double top = std::max(std::abs(lam[0]), std::abs(lam[1]));
    double scale = phi.d == 1 ? top : top * top;
    if (std::abs(out.det) < 1e-12 * scale)
        throw NumericsError("hessian_data: degenerate Hessian");
    out.signature = 0;
    for (int i = 0; i < phi.d; ++i) out.signature += lam[static_cast<size_t>(i)] > 0.0 ? 1 : -1;
    return out;
}

} // namespace extlab
