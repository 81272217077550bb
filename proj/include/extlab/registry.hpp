#pragma once

// Named experiment table: the dispatch surface between the CLI and the
// experiment drivers. Each entry carries its parameter schema so a config can
// be validated without touching the numerics.

#include <string>
#include <vector>

#include "extlab/experiments.hpp"

namespace extlab {

struct ParamSpec {
    std::string key;  // config key
    std::string kind; // "int" | "real" | "list" | "string" | "flag"
    std::string doc;  // one-line meaning, shown by the list subcommand
};

struct ExperimentEntry {
    std::string name;
    std::string summary;
    std::string region; // required exponent-region tag; empty = no config-level gate
    std::vector<ParamSpec> params;
    SweepPlan defaults; // baseline plan; ladder left empty (filled by default_ladder)
    ExperimentReport (*run)(const SweepPlan&);

    bool accepts(const std::string& key) const;
    const ParamSpec* param(const std::string& key) const;
};

const std::vector<ExperimentEntry>& experiment_registry();

// nullptr when no entry carries the name.
const ExperimentEntry* find_experiment(const std::string& name);

} // namespace extlab
