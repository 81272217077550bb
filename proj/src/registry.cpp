#include "extlab/registry.hpp"

namespace extlab {
namespace {

// Shared key descriptions; each entry picks the subset it consumes.
const ParamSpec kD{"d", "int", "spatial dimension"};
const ParamSpec kQ{"q", "real", "time exponent of the mixed norm"};
const ParamSpec kR{"r", "real", "space exponent of the mixed norm"};
const ParamSpec kS{"s", "real", "Sobolev regularity of the data"};
const ParamSpec kAlpha{"alpha", "real", "propagator order (1 = half-wave)"};
const ParamSpec kNu{"nu", "real", "spherical regularity order (default: critical)"};
const ParamSpec kLambdaLadder{"lambda_ladder", "list", "concentration scales, increasing"};
const ParamSpec kTLadder{"T_ladder", "list", "time horizons, increasing"};
const ParamSpec kKLadder{"k_ladder", "list", "dyadic band indices, increasing integers"};
const ParamSpec kMLadder{"m_ladder", "list", "angular concentration indices, increasing"};
const ParamSpec kGridN{"grid_n", "int", "spatial grid points per axis (0 = auto)"};
const ParamSpec kTimeN{"time_n", "int", "time samples per window (0 = auto)"};
const ParamSpec kTolerance{"tolerance", "real", "pass tolerance override"};
const ParamSpec kSeed{"seed", "int", "RNG seed echoed into the report"};
const ParamSpec kBigB{"B", "real", "dyadic window half-width factor"};
const ParamSpec kBigC{"C", "real", "time-threshold constant"};
const ParamSpec kProfile{"profile", "string", "data profile selector"};
const ParamSpec kRefine{"refine_check", "flag", "rerun smallest rung at h/2 and report drift"};

std::vector<ExperimentEntry> build_registry() {
    std::vector<ExperimentEntry> reg;

    {
        ExperimentEntry e;
        e.name = "knapp_necessity";
        e.summary = "concentrated-cap quotient vs scale: fitted slope must match s_c - s";
        e.region = "interior";
        e.params = {kD, kQ, kR, kS, kLambdaLadder, kGridN, kTimeN, kTolerance, kSeed, kRefine};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 5.0;
        e.defaults.r = 5.0;
        e.defaults.s = 0.0;
        e.run = &knapp_necessity_sweep;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "sphere_restriction";
        e.summary = "circle-cap quotient vs scale: slope s_q - s; profile=constant checks "
                    "truncated-norm growth at sub-threshold q";
        e.params = {kQ, kS, kLambdaLadder, kGridN, kTolerance, kSeed, kProfile};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 5.0;
        e.defaults.r = 5.0;
        e.defaults.s = 0.0;
        e.run = &sphere_restriction_probe;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "local_growth";
        e.summary = "band-limited evolution over (0,T): growth slope stays under the "
                    "(1/2)(d/r+2/q-d/2) envelope";
        e.params = {kD, kQ, kR, kTLadder, kGridN, kTimeN, kTolerance, kSeed, kProfile, kRefine};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 4.0;
        e.defaults.r = 4.0;
        e.run = &local_growth_probe;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "endpoint_divergence";
        e.summary = "constant-profile evolution on the line d/r+1/q = d/2: strong norm grows "
                    "like (log T)^{1/q} while the weak norm plateaus";
        e.region = "endpoint_line";
        e.params = {kD, kQ, kR, kTLadder, kTolerance, kSeed};
        e.defaults.tag = e.name;
        e.defaults.d = 2;
        e.defaults.q = 4.0;
        e.defaults.r = 8.0 / 3.0;
        e.run = &endpoint_divergence_probe;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "strichartz_ratio";
        e.summary = "weighted space-time quotient on the dilated annular family: spread under 2 "
                    "across scales";
        e.params = {kD, kQ, kR, kAlpha, kLambdaLadder, kGridN, kTimeN, kTolerance, kSeed};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 5.0;
        e.defaults.r = 5.0;
        e.defaults.alpha = 2.0;
        e.run = &strichartz_ratio_sweep;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "angular_strichartz";
        e.summary = "half-wave quotient on angular concentration caps: bounded at the critical "
                    "spherical regularity, divergent below it";
        e.params = {kD, kQ, kR, kNu, kMLadder, kGridN, kTimeN, kTolerance, kSeed};
        e.defaults.tag = e.name;
        e.defaults.d = 2;
        e.defaults.q = 5.0;
        e.defaults.r = 5.0;
        e.run = &angular_strichartz_probe;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "kernel_decay";
        e.summary = "rescaled dual-phase field at t = C 2^{2k}: L^r size times t^{d/2}, "
                    "normalized by the band piece, is k-uniform";
        e.params = {kD, kR, kKLadder, kGridN, kTolerance, kSeed, kBigC, kRefine};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 2.0;
        e.defaults.r = 2.0;
        e.run = &kernel_decay_probe;
        reg.push_back(e);
    }
    {
        ExperimentEntry e;
        e.name = "frequency_localization";
        e.summary = "Fourier mass of the dual-phase field outside the dyadic window "
                    "[2^k/B, B 2^k] stays under 1%";
        e.params = {kD, kKLadder, kGridN, kTolerance, kSeed, kBigB, kBigC, kProfile};
        e.defaults.tag = e.name;
        e.defaults.d = 1;
        e.defaults.q = 2.0;
        e.defaults.r = 2.0;
        e.run = &frequency_localization_probe;
        reg.push_back(e);
    }

    return reg;
}

} // namespace

bool ExperimentEntry::accepts(const std::string& key) const {
    return param(key) != nullptr;
}

const ParamSpec* ExperimentEntry::param(const std::string& key) const {
    for (const auto& p : params)
        if (p.key == key) return &p;
    return nullptr;
}

const std::vector<ExperimentEntry>& experiment_registry() {
    static const std::vector<ExperimentEntry> reg = build_registry();
    return reg;
}

const ExperimentEntry* find_experiment(const std::string& name) {
    for (const auto& e : experiment_registry())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace extlab
