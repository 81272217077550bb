#pragma once

// Report emission: CSV (per-point data), JSON (the full self-contained
// report), and plotdata (two-column files feeding external plotting tools).
// Identical reports serialize byte-identically; the only varying fields
// (timestamp, runtime, worker count) live in the JSON metadata block.

#include <string>
#include <vector>

#include "extlab/experiments.hpp"

namespace extlab {

// Header ladder_value,measurement,predicted,residual then one row per point.
std::string report_csv(const ExperimentReport& rep);

// Deterministic body plus a metadata block. An empty timestamp stamps the
// current UTC time; tests pass a fixed one.
std::string report_json(const ExperimentReport& rep, const std::string& timestamp = "");

// Inverse of report_json over the deterministic body (metadata is read into
// runtime_seconds only). Throws PreconditionError on malformed input.
ExperimentReport report_from_json(const std::string& text);

// <stem>_points.dat (measurements) and <stem>_fit.dat (fitted model), both
// "x y" rows with strictly increasing abscissae.
std::string plotdata_points(const ExperimentReport& rep);
std::string plotdata_fit(const ExperimentReport& rep);

// Writes <out_dir>/<stem>.<ext> for each requested format (csv, json,
// plotdata); creates the directory if needed. Returns the paths written.
std::vector<std::string> write_report_files(const ExperimentReport& rep,
                                            const std::string& out_dir, const std::string& stem,
                                            const std::vector<std::string>& formats);

} // namespace extlab
