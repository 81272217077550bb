#pragma once

// Space-time field builders: the extension field by direct frequency-node
// summation (oracle-grade, no interpolation), unitary DFT-multiplier
// evolutions e^{it|xi|^alpha}, and the rescaled dual-phase field driving the
// large-time decay and frequency-localization probes.

#include <array>
#include <vector>

#include "extlab/amplitude.hpp"
#include "extlab/norms.hpp"
#include "extlab/phases.hpp"
#include "extlab/profiles.hpp"

namespace extlab {

struct EvolutionSpec {
    GridFunction geometry;     // spatial grid prototype; data unused
    std::vector<double> times; // strictly increasing
    long node_budget = 64'000'000; // total frequency nodes, refusal threshold
    int min_nodes_axis = 16;

    static EvolutionSpec make(int d, std::array<int, 2> n, std::array<double, 2> h, double t0,
                              double t1, int nt);
};

// u(x,t) = sum over a uniform midpoint lattice on the support of a*f of
// e^{i(x.xi + t phi(xi))} a(xi) f(xi) dxi. Node spacing resolves the largest
// phase gradient |x + t grad phi(xi)| over the evaluation grid with >= 10
// nodes per period; refuses (BudgetError) instead of aliasing when that
// spacing would exceed the node budget. Deterministic: fixed node order,
// each output point summed by exactly one worker.
SpaceTimeField extension_field(const PhaseFunction& phi, const Amplitude& a,
                               const FrequencyProfile& f, const EvolutionSpec& spec);

enum class EvolutionSymbol { fractional, half_wave };

// Per-time application of e^{it m(xi)}, m(xi) = |xi|^alpha (fractional) or
// |xi| (half_wave), on the DFT of phi0. Unitary on the lattice, so spatial
// L^2 mass is conserved exactly. For non-smooth symbols (alpha < 2 or
// half_wave) the spectrum must live in an annulus bounded away from 0; every
// input must keep two-fold Nyquist margin.
SpaceTimeField multiplier_evolution(const GridFunction& phi0, EvolutionSymbol sym, double alpha,
                                    const std::vector<double>& times);

// Samples the profile on a centered frequency grid with the given extent and
// applies the dyadic projection at scale k: returns P_k f as a grid function
// (frequency-side variable). Used for the reference norms of the dual-phase
// probes.
GridFunction lp_frequency_slice(const FrequencyProfile& f, int k, int nx, double extent);

// Rescaled dual-phase field at one time: x in [-2,2) mapped to
//   e^{-i t psi(x)} t^{-d/2} int e^{i t psi(x - y/t)} A0(x - y/t)
//       beta(2^{-k}|y|) f_check(y) dy,
// the leading-order realization (A-tilde truncated to its first coefficient)
// of the frequency-localized dual-phase operator at the slice t, evaluated in
// the rescaled spatial variable. f_check is the inverse transform of the
// profile, computed per node by adaptive quadrature. d = 1; requires
// t >= 16 * 2^k and the gradient range of the phase inside B(0, 3/2).
GridFunction dual_phase_field(const PhaseFunction& phi, const Amplitude& a,
                              const FrequencyProfile& f, int k, double t, int nx);

} // namespace extlab
