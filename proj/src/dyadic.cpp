#include "extlab/dyadic.hpp"

#include <cmath>

#include "extlab/bumps.hpp"
#include "extlab/errors.hpp"

namespace extlab {

namespace {

// Unnormalized C-infinity bump in log2 rho, supported exactly on (1/2, 2).
double zeta(double rho) {
    if (rho <= 0.0) return 0.0;
    double u = std::log2(rho);
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

// sum_j zeta(2^{-j} rho): at most two consecutive j contribute.
double zeta_sum(double rho) {
    int j0 = int(std::floor(std::log2(rho)));
    double s = 0.0;
    for (int j = j0 - 1; j <= j0 + 1; ++j) s += zeta(std::ldexp(rho, -j));
    return s;
}

} // namespace

double BumpPartition::beta(double rho) {
    double z = zeta(rho);
    if (z == 0.0) return 0.0;
    return z / zeta_sum(rho);
}

double BumpPartition::beta0(double rho) {
    if (rho < 0.0) throw PreconditionError("beta0: rho must be >= 0");
    if (rho <= 1.0) return 1.0;
    if (rho >= 2.0) return 0.0;
    // on (1, 2) only the k = 1 translate is active: beta0 = 1 - beta(rho/2)
    return 1.0 - beta(0.5 * rho);
}

double BumpPartition::wide_bump(double rho, double B) {
    if (!(B >= 2.0)) throw PreconditionError("wide_bump: B must be >= 2");
    if (rho <= 0.0) return 0.0;
    double u = std::log2(rho);
    double b = std::log2(B);
    // 1 on [-b, b] in log2, 0 outside [-b-1, b+1], smooth shoulders
    double a = std::abs(u);
    if (a <= b) return 1.0;
    if (a >= b + 1.0) return 0.0;
    return bumps::smoothstep(b + 1.0 - a);
}

double BumpPartition::enlarged(double rho) { return wide_bump(rho, 2.0); }

double partition_residual(const std::vector<double>& rho_values) {
    double worst = 0.0;
    for (double rho : rho_values) {
        if (!(rho > 0.0)) throw PreconditionError("partition_residual: rho must be > 0");
        int j0 = int(std::floor(std::log2(rho)));
        double s = 0.0;
        for (int j = j0 - 1; j <= j0 + 1; ++j) s += BumpPartition::beta(std::ldexp(rho, -j));
        worst = std::max(worst, std::abs(1.0 - s));
    }
    return worst;
}

GridFunction lp_project(const GridFunction& f, int k, LpMode mode, double B) {
    double nyquist = M_PI / f.h[0];
    for (int a = 1; a < f.d; ++a) nyquist = std::min(nyquist, M_PI / f.h[a]);
    double b_eff = mode == LpMode::enlarged ? 2.0 * B : 2.0;
    if (mode != LpMode::low && 2.0 * b_eff * std::ldexp(1.0, k) > nyquist)
        throw PreconditionError("lp_project: band 2^k exceeds the grid's Nyquist margin");

    double scale = std::ldexp(1.0, -k);
    auto mult = [mode, scale, B](const Vec& xi) -> std::complex<double> {
        double rho = norm2(xi);
        switch (mode) {
            case LpMode::standard: return BumpPartition::beta(scale * rho);
            case LpMode::low: return BumpPartition::beta0(rho);
            case LpMode::enlarged: return BumpPartition::wide_bump(scale * rho, B);
        }
        return 0.0;
    };
    return apply_multiplier(f, mult);
}

double grid_lq(const GridFunction& f, double q) {
    if (!(q >= 1.0)) throw PreconditionError("grid_lq: q must be >= 1");
    double s = 0.0;
    for (const auto& z : f.data) s += std::pow(std::abs(z), q);
    return std::pow(f.cell() * s, 1.0 / q);
}

double bernstein_ratio(const GridFunction& f, int k, double q) {
    if (!(q >= 2.0)) throw PreconditionError("bernstein_ratio: q must be >= 2");
    GridFunction pk = lp_project(f, k, LpMode::standard);
    double l2 = grid_l2(pk);
    if (l2 < 1e-14) throw PreconditionError("bernstein_ratio: projection is zero");
    double lq = grid_lq(pk, q);
    double d = double(f.d);
    return lq / (std::pow(2.0, k * (0.5 * d - d / q)) * l2);
}

} // namespace extlab
