#pragma once

// Dyadic frequency decomposition: the smooth partition beta on (1/2, 2) with
// sum_k beta(2^{-k} rho) = 1 exactly by construction, the lowed projection
// bump beta0, enlarged bumps, and the grid-side projections P_k built on the
// DFT multiplier path.

#include <vector>

#include "extlab/grid.hpp"

namespace extlab {

struct BumpPartition {
    // beta(rho): supported in (1/2, 2), normalized so the dyadic translates
    // sum to 1 for every rho > 0.
    static double beta(double rho);
    // beta0(rho) = 1 - sum_{k >= 1} beta(2^{-k} rho): 1 on [0, 1], 0 for rho >= 2.
    static double beta0(double rho);
    // Wide bump: 1 on [1/B, B], 0 outside [1/(2B), 2B], C-infinity shoulders
    // one octave wide in log2.
    static double wide_bump(double rho, double B);
    // Enlarged bump beta_circ = wide_bump(., 2): 1 on supp beta, supported in
    // [1/4, 4], so beta_circ * beta = beta.
    static double enlarged(double rho);
};

// max over rho_values of |1 - sum_k beta(2^{-k} rho)|; the k range is exact
// because beta has compact support. Requires rho > 0.
double partition_residual(const std::vector<double>& rho_values);

enum class LpMode { standard, low, enlarged };

// DFT-multiplier projection: standard uses beta(2^{-k}|xi|), low uses
// beta0(|xi|) (k ignored), enlarged uses wide_bump(2^{-k}|xi|, B).
// Standard/enlarged modes require Nyquist margin: 2 * B_eff * 2^k <= pi / h
// with B_eff = 2 for standard, 2B for enlarged.
GridFunction lp_project(const GridFunction& f, int k, LpMode mode, double B = 2.0);

// ||P_k f||_q / (2^{k(d/2 - d/q)} ||P_k f||_2), the Bernstein-normalized
// ratio; requires q >= 2 and a nonzero projection.
double bernstein_ratio(const GridFunction& f, int k, double q);

// (h^d sum |f|^q)^{1/q}
double grid_lq(const GridFunction& f, double q);

} // namespace extlab
