#include "extlab/report_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "extlab/errors.hpp"
#include "extlab/parallel.hpp"

namespace extlab {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// RFC-4180-style: quote when the field holds a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string utc_now() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string report_csv(const ExperimentReport& rep) {
    std::string out = "ladder_value,measurement,predicted,residual\n";
    for (const auto& row : rep.rows) {
        out += csv_field(fmt12(row.ladder_value)) + ",";
        out += csv_field(fmt12(row.measurement)) + ",";
        out += csv_field(fmt12(row.predicted)) + ",";
        out += csv_field(fmt12(row.residual)) + "\n";
    }
    return out;
}

std::string report_json(const ExperimentReport& rep, const std::string& timestamp) {
    ordered_json j;
    j["experiment"] = rep.experiment;
    j["inputs"] = ordered_json::object();
    for (const auto& [k, v] : rep.inputs) j["inputs"][k] = v;
    j["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["ladder_value"] = row.ladder_value;
        r["measurement"] = row.measurement;
        r["predicted"] = row.predicted;
        r["residual"] = row.residual;
        j["rows"].push_back(r);
    }
    j["fit"] = {{"kind", rep.fit_kind},
                {"fitted", rep.fitted},
                {"r2", rep.r2},
                {"predicted", rep.predicted},
                {"tolerance", rep.tolerance}};
    j["scalars"] = ordered_json::object();
    for (const auto& [k, v] : rep.scalars) j["scalars"][k] = v;
    j["notes"] = rep.notes;
    j["pass"] = rep.pass;
    j["metadata"] = {{"timestamp", timestamp.empty() ? utc_now() : timestamp},
                     {"runtime_seconds", rep.runtime_seconds},
                     {"workers", worker_count()}};
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw PreconditionError(std::string("report parse: ") + e.what());
    }
    try {
        ExperimentReport rep;
        rep.experiment = j.at("experiment").get<std::string>();
        for (const auto& [k, v] : j.at("inputs").items()) rep.inputs[k] = v.get<std::string>();
        for (const auto& r : j.at("rows")) {
            MeasurementRow row;
            row.ladder_value = r.at("ladder_value").get<double>();
            row.measurement = r.at("measurement").get<double>();
            row.predicted = r.at("predicted").get<double>();
            row.residual = r.at("residual").get<double>();
            rep.rows.push_back(row);
        }
        const auto& fit = j.at("fit");
        rep.fit_kind = fit.at("kind").get<std::string>();
        rep.fitted = fit.at("fitted").get<double>();
        rep.r2 = fit.at("r2").get<double>();
        rep.predicted = fit.at("predicted").get<double>();
        rep.tolerance = fit.at("tolerance").get<double>();
        for (const auto& [k, v] : j.at("scalars").items()) rep.scalars[k] = v.get<double>();
        for (const auto& n : j.at("notes")) rep.notes.push_back(n.get<std::string>());
        rep.pass = j.at("pass").get<bool>();
        if (j.contains("metadata"))
            rep.runtime_seconds = j["metadata"].value("runtime_seconds", 0.0);
        return rep;
    } catch (const ordered_json::exception& e) {
        throw PreconditionError(std::string("report parse: ") + e.what());
    }
}

std::string plotdata_points(const ExperimentReport& rep) {
    std::string out;
    for (const auto& row : rep.rows)
        out += fmt12(row.ladder_value) + " " + fmt12(row.measurement) + "\n";
    return out;
}

std::string plotdata_fit(const ExperimentReport& rep) {
    std::string out;
    for (const auto& row : rep.rows)
        out += fmt12(row.ladder_value) + " " + fmt12(row.predicted) + "\n";
    return out;
}

std::vector<std::string> write_report_files(const ExperimentReport& rep,
                                            const std::string& out_dir, const std::string& stem,
                                            const std::vector<std::string>& formats) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec); // best effort; the open below decides

    auto emit = [&](const std::string& name, const std::string& body) {
        fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
        out << body;
        out.close();
        if (!out) throw PreconditionError("write failed for '" + path.string() + "'");
        return path.string();
    };

    std::vector<std::string> written;
    for (const std::string& fmt : formats) {
        if (fmt == "csv") {
            written.push_back(emit(stem + ".csv", report_csv(rep)));
        } else if (fmt == "json") {
            written.push_back(emit(stem + ".json", report_json(rep)));
        } else if (fmt == "plotdata") {
            written.push_back(emit(stem + "_points.dat", plotdata_points(rep)));
            written.push_back(emit(stem + "_fit.dat", plotdata_fit(rep)));
        } else {
            throw PreconditionError("unknown report format '" + fmt + "'");
        }
    }
    return written;
}

} // namespace extlab
