#include "extlab/fit.hpp"

#include <cmath>

#include "extlab/errors.hpp"

namespace extlab {

SlopeFit slope_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw PreconditionError("slope_fit: need matching arrays with >= 2 points");
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw PreconditionError("slope_fit: log-log fit needs positive data");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw PreconditionError("slope_fit: abscissae must be strictly increasing");
    }
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (size_t i = 0; i < n; ++i) {
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    double mx = sx / double(n), my = sy / double(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    SlopeFit f;
    f.n = int(n);
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (syy <= 0.0) {
        f.slope = 0.0;
        f.intercept = my;
        f.r2 = 1.0; // constant data: exact fit by a flat line
    } else {
        double ss_res = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double e = ly[i] - (f.intercept + f.slope * lx[i]);
            ss_res += e * e;
        }
        f.r2 = 1.0 - ss_res / syy;
    }
    return f;
}

} // namespace extlab
