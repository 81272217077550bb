#pragma once

// Run configuration: a flat key = value document (one key per line, # comments,
// decorative [section] headers) resolved against the experiment registry.
// Numbers may be written as decimals or exact fractions "p/q"; ladders are
// comma-separated. Every key is type-checked against the target experiment's
// schema before any computation, and unknown keys are rejected with the
// offending line number.

#include <string>
#include <vector>

#include "extlab/errors.hpp"
#include "extlab/experiments.hpp"

namespace extlab {

struct ConfigError : PreconditionError {
    int line; // 1-based line of the offending key, 0 when not line-addressable
    ConfigError(int line_, const std::string& msg)
        : PreconditionError(line_ > 0 ? "config line " + std::to_string(line_) + ": " + msg
                                      : "config: " + msg),
          line(line_) {}
};

struct RunConfig {
    std::string experiment;
    SweepPlan plan; // registry defaults overlaid with the document's keys
    std::string output_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

// "8/3" -> 2.666..., "0.25" -> 0.25. Throws ConfigError(0, ...) on trailing
// garbage, division by zero, or a non-finite result.
double parse_number(const std::string& text);

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Resolved one-key-per-line echo of the config (defaults filled), suitable for
// the validate subcommand and for reproducing the run.
std::string config_echo(const RunConfig& cfg);

} // namespace extlab
