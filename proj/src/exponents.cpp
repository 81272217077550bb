#include "extlab/exponents.hpp"

#include <cmath>

#include "extlab/errors.hpp"

namespace extlab {

namespace {
constexpr double kEqTol = 1e-12;
}

CriticalExponents critical_exponents(int d, double q, double r) {
    if (d < 1) throw PreconditionError("critical_exponents: d must be >= 1");
    if (!(q > 0.0) || !(r > 0.0)) throw PreconditionError("critical_exponents: q, r must be > 0");
    CriticalExponents c;
    double dd = double(d);
    c.s_q = (dd + 2.0) / q - 0.5 * dd;
    c.s_c = dd / r + 2.0 / q - 0.5 * dd;
    c.gamma1 = 1.0 / q + dd / r - 0.5 * dd;
    if (d >= 2) {
        double dw = dd - 1.0;
        c.s_c_w = dw / r + 2.0 / q - 0.5 * dw;
        c.has_s_c_w = true;
    }
    return c;
}

RegionClass classify_region(int d, double q, double r) {
    if (d < 1) throw PreconditionError("classify_region: d must be >= 1");
    if (!(q >= 2.0) || !(r >= 2.0))
        throw PreconditionError("classify_region: q and r must be in [2, inf)");
    double dd = double(d);
    RegionClass rc;
    rc.sum_2q = dd / r + 2.0 / q - 0.5 * dd;
    rc.sum_1q = dd / r + 1.0 / q - 0.5 * dd;
    if (std::abs(rc.sum_1q) <= kEqTol && std::abs(q - 2.0) > kEqTol) {
        rc.tag = "endpoint_line";
    } else if (rc.sum_2q > kEqTol && rc.sum_1q < -kEqTol) {
        rc.tag = "interior";
    } else if (rc.sum_2q <= kEqTol) {
        rc.tag = "strichartz_admissible";
    } else if (q <= 2.0 * (dd + 1.0) / dd + kEqTol) {
        rc.tag = "forbidden_low_q";
    } else {
        rc.tag = "outside";
    }
    return rc;
}

double knapp_predicted_slope(int d, double q, double r, double s) {
    return critical_exponents(d, q, r).s_c - s;
}

WeightedPair weighted_exponent_pair(int d, double q, double r, double alpha) {
    if (!(alpha > 0.0)) throw PreconditionError("weighted_exponent_pair: alpha must be > 0");
    CriticalExponents c = critical_exponents(d, q, r);
    WeightedPair w;
    if (std::abs(alpha - 1.0) <= kEqTol) {
        if (d < 2)
            throw PreconditionError("weighted_exponent_pair: the alpha = 1 wave pair needs d >= 2");
        w.mu = c.s_c_w;
        w.nu = 0.5 + 1.0 / q - 1.0 / r;
    } else {
        w.mu = c.s_c;
        w.nu = (2.0 - alpha) / q;
    }
    return w;
}

} // namespace extlab
