#include "extlab/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "extlab/errors.hpp"

namespace extlab {

namespace {

constexpr double kFdStep = 0.02;       // zeta-space step for order-3/4 differences
constexpr double kVerifyRadius = 2.0;  // E is controlled on B(0,2)

std::vector<Vec> verification_grid(int d) {
    std::vector<Vec> pts;
    if (d == 1) {
        const int n = 81;
        for (int i = 0; i < n; ++i)
            pts.push_back(Vec(-kVerifyRadius + 2.0 * kVerifyRadius * i / (n - 1)));
    } else {
        const int n = 33;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec p(-kVerifyRadius + 2.0 * kVerifyRadius * i / (n - 1),
                      -kVerifyRadius + 2.0 * kVerifyRadius * j / (n - 1));
                if (norm2(p) <= kVerifyRadius + 1e-12) pts.push_back(p);
            }
    }
    return pts;
}

double hess_entry(const SymMat& h, int a, int b) {
    if (a == 0 && b == 0) return h.a11;
    if (a == 1 && b == 1) return h.a22;
    return h.a12;
}

} // namespace

NormalFormReport normal_form_reduce(const PhaseFunction& phi, const Vec& xi0, double eps0,
                                    int L_order) {
    if (xi0.d != phi.d) throw PreconditionError("normal_form_reduce: dimension mismatch");
    if (norm2(xi0) > 1.0 + 1e-12)
        throw PreconditionError("normal_form_reduce: base point must lie in the unit ball");
    if (!(eps0 > 0.0) || eps0 > 0.05)
        throw PreconditionError("normal_form_reduce: need 0 < eps0 <= 0.05");
    if (L_order < 2 || L_order > 4)
        throw PreconditionError("normal_form_reduce: L_order must be 2, 3, or 4");
    if (!phi.in_domain(xi0))
        throw PreconditionError("normal_form_reduce: base point outside phase domain");

    const int d = phi.d;
    HessianData hd = hessian_data(phi, xi0); // throws on degenerate Hessian
    SymEig eig = sym_eigendecompose(hd.H);

    // Order eigenpairs positive-first so D = diag(+1,..,-1,..); eigenvalues
    // arrive ascending.
    int idx[2] = {0, 1};
    if (d == 2 && eig.lambda[0] < 0.0 && eig.lambda[1] > 0.0) std::swap(idx[0], idx[1]);

    NormalFormReport rep;
    rep.xi0 = xi0;
    rep.eps0 = eps0;
    rep.L_order = L_order;
    rep.drift = phi.grad(xi0);
    rep.phase_at_base = phi.value(xi0);
    rep.D.d = d;
    rep.L.d = d;

    if (d == 1) {
        double lam = eig.lambda[0];
        rep.D.a11 = lam > 0.0 ? 1.0 : -1.0;
        rep.L.m[0] = 1.0 / std::sqrt(std::abs(lam));
    } else {
        double lam0 = eig.lambda[static_cast<size_t>(idx[0])];
        double lam1 = eig.lambda[static_cast<size_t>(idx[1])];
        rep.D = SymMat::diag(2, lam0 > 0.0 ? 1.0 : -1.0, lam1 > 0.0 ? 1.0 : -1.0);
        double q[2][2] = {{eig.q11, eig.q12}, {eig.q21, eig.q22}};
        double s0 = 1.0 / std::sqrt(std::abs(lam0));
        double s1 = 1.0 / std::sqrt(std::abs(lam1));
        rep.L.at(0, 0) = q[0][idx[0]] * s0;
        rep.L.at(1, 0) = q[1][idx[0]] * s0;
        rep.L.at(0, 1) = q[0][idx[1]] * s1;
        rep.L.at(1, 1) = q[1][idx[1]] * s1;
    }

    // Domain check: the verification ball (plus the FD stencil pad) must map
    // inside the phase domain.
    double reach = eps0 * rep.L.op_norm_bound() * (kVerifyRadius + 2.0 * kFdStep);
    double r0 = norm2(xi0);
    if (r0 + reach > phi.domain_radius + 1e-12 ||
        (phi.domain_inner > 0.0 && r0 - reach < phi.domain_inner - 1e-12))
        throw PreconditionError("normal_form_reduce: rescaled ball escapes phase domain");

    // Reduced phase evaluators.
    const PhaseFunction base = phi;
    const Vec bxi0 = xi0;
    const double e0 = eps0;
    const Mat L = rep.L;
    const Vec drift = rep.drift;
    const double v0 = rep.phase_at_base;

    PhaseFunction red;
    red.d = d;
    red.label = phi.label + "_reduced";
    red.domain_inner = 0.0;
    if (std::isinf(phi.domain_radius)) {
        red.domain_radius = std::numeric_limits<double>::infinity();
    } else {
        double lb = e0 * L.op_norm_bound();
        double outer = (phi.domain_radius - r0) / lb;
        double inner = phi.domain_inner > 0.0 ? (r0 - phi.domain_inner) / lb
                                              : std::numeric_limits<double>::infinity();
        red.domain_radius = std::min(outer, inner);
    }
    red.value = [base, bxi0, e0, L, drift, v0](const Vec& z) {
        Vec xi = bxi0 + e0 * L.mul(z);
        return (base.value(xi) - v0 - e0 * dot(drift, L.mul(z))) / (e0 * e0);
    };
    red.grad = [base, bxi0, e0, L, drift](const Vec& z) {
        Vec xi = bxi0 + e0 * L.mul(z);
        return L.tmul(base.grad(xi) - drift) * (1.0 / e0);
    };
    red.hess = [base, bxi0, e0, L, d](const Vec& z) {
        Vec xi = bxi0 + e0 * L.mul(z);
        SymMat H = base.hess(xi);
        // L^T H L
        SymMat out;
        out.d = d;
        if (d == 1) {
            out.a11 = L.m[0] * H.a11 * L.m[0];
        } else {
            Vec c0(L.at(0, 0), L.at(1, 0)), c1(L.at(0, 1), L.at(1, 1));
            out.a11 = dot(c0, H.mul(c0));
            out.a12 = dot(c0, H.mul(c1));
            out.a22 = dot(c1, H.mul(c1));
        }
        return out;
    };
    rep.reduced = red;

    // Measure the C^L bound of E = reduced - quadratic part on B(0,2).
    const SymMat D = rep.D;
    auto Evalue = [&](const Vec& z) { return red.value(z) - 0.5 * dot(z, D.mul(z)); };
    auto Egrad = [&](const Vec& z) { return red.grad(z) - D.mul(z); };

    double bound = 0.0;
    const double h = kFdStep;
    for (const Vec& z : verification_grid(d)) {
        bound = std::max(bound, std::abs(Evalue(z)));
        Vec g = Egrad(z);
        for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(g[i]));
        SymMat H = red.hess(z);
        bound = std::max(bound, std::abs(H.a11 - D.a11));
        if (d == 2) {
            bound = std::max(bound, std::abs(H.a12 - D.a12));
            bound = std::max(bound, std::abs(H.a22 - D.a22));
        }
        if (L_order < 3) continue;
        // Orders 3 and 4 by central differences of the analytic Hessian.
        for (int c = 0; c < d; ++c) {
            Vec ec = Vec::zero(d);
            ec[c] = 1.0;
            SymMat Hp = red.hess(z + h * ec);
            SymMat Hm = red.hess(z - h * ec);
            for (int a = 0; a < d; ++a)
                for (int b = a; b < d; ++b) {
                    double t3 = (hess_entry(Hp, a, b) - hess_entry(Hm, a, b)) / (2.0 * h);
                    bound = std::max(bound, std::abs(t3));
                    if (L_order < 4) continue;
                    double t4 = (hess_entry(Hp, a, b) - 2.0 * hess_entry(red.hess(z), a, b) +
                                 hess_entry(Hm, a, b)) /
                                (h * h);
                    bound = std::max(bound, std::abs(t4));
                }
        }
        if (L_order >= 4 && d == 2) {
            // mixed fourth derivative directions (c,e) = (0,1)
            Vec e0v(1.0, 0.0), e1v(0.0, 1.0);
            SymMat Hpp = red.hess(z + h * e0v + h * e1v);
            SymMat Hpm = red.hess(z + h * e0v - h * e1v);
            SymMat Hmp = red.hess(z - h * e0v + h * e1v);
            SymMat Hmm = red.hess(z - h * e0v - h * e1v);
            for (int a = 0; a < d; ++a)
                for (int b = a; b < d; ++b) {
                    double t4 = (hess_entry(Hpp, a, b) - hess_entry(Hpm, a, b) -
                                 hess_entry(Hmp, a, b) + hess_entry(Hmm, a, b)) /
                                (4.0 * h * h);
                    bound = std::max(bound, std::abs(t4));
                }
        }
    }
    rep.residual_bound = bound;
    if (bound > kNormalFormResidualFactor * eps0)
        throw NumericsError("normal_form_reduce: residual bound exceeds factor * eps0");
    return rep;
}

} // namespace extlab
