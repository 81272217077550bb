#include "extlab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "extlab/exponents.hpp"
#include "extlab/registry.hpp"

namespace extlab {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number_at(int line, const std::string& key, const std::string& text) {
    try {
        return parse_number(text);
    } catch (const ConfigError&) {
        throw ConfigError(line, key + " expects a number (decimal or p/q fraction), got '" + text +
                                    "'");
    }
}

long parse_int_at(int line, const std::string& key, const std::string& text) {
    long v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ConfigError(line, key + " expects an integer, got '" + text + "'");
    return v;
}

bool parse_flag_at(int line, const std::string& key, const std::string& text) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    throw ConfigError(line, key + " expects true/false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

// The hypothesis shared by every mixed-norm statement in the library.
void check_lebesgue_exponent(int line, const std::string& key, double v) {
    if (!(v >= 2.0))
        throw ConfigError(line, key + " must be >= 2 (the space-time estimates assume "
                                      "2 <= q, r < infinity), got " +
                                      std::to_string(v));
}

void apply_key(SweepPlan& plan, int line, const std::string& key, const std::string& kind,
               const std::string& value) {
    if (kind == "list") {
        // All ladder keys land in the single swept ladder.
        std::vector<double> v;
        for (const std::string& item : split_list(value)) {
            if (item.empty()) throw ConfigError(line, key + " has an empty element");
            v.push_back(parse_number_at(line, key, item));
        }
        if (v.empty()) throw ConfigError(line, key + " must not be empty");
        plan.ladder = v;
        return;
    }
    if (key == "d") {
        long d = parse_int_at(line, key, value);
        if (d < 1) throw ConfigError(line, "d must be a positive integer");
        plan.d = int(d);
        return;
    }
    if (key == "grid_n" || key == "time_n") {
        long n = parse_int_at(line, key, value);
        if (n < 0) throw ConfigError(line, key + " must be nonnegative");
        (key == "grid_n" ? plan.grid_n : plan.time_n) = int(n);
        return;
    }
    if (key == "seed") {
        long v = parse_int_at(line, key, value);
        if (v < 0) throw ConfigError(line, "seed must be nonnegative");
        plan.seed = unsigned(v);
        return;
    }
    if (key == "profile") {
        plan.profile = value;
        return;
    }
    if (key == "refine_check") {
        plan.refine_check = parse_flag_at(line, key, value);
        return;
    }
    double v = parse_number_at(line, key, value);
    if (key == "q" || key == "r") check_lebesgue_exponent(line, key, v);
    if (key == "q") plan.q = v;
    else if (key == "r") plan.r = v;
    else if (key == "s") plan.s = v;
    else if (key == "alpha") plan.alpha = v;
    else if (key == "nu") plan.nu = v;
    else if (key == "tolerance") plan.tolerance = v;
    else if (key == "B") plan.B = v;
    else if (key == "C") plan.C = v;
    else throw ConfigError(line, "unhandled key '" + key + "'");
}

void check_region(const ExperimentEntry& entry, const SweepPlan& plan) {
    if (entry.region.empty()) return;
    RegionClass rc = classify_region(plan.d, plan.q, plan.r);
    if (rc.tag == entry.region) return;
    std::ostringstream msg;
    msg.precision(12);
    if (entry.region == "endpoint_line")
        msg << entry.name << " requires the endpoint line d/r + 1/q = d/2 with q != 2; got "
            << "d/r + 1/q - d/2 = " << rc.sum_1q << " (classified '" << rc.tag << "')";
    else
        msg << entry.name << " requires exponents in region '" << entry.region
            << "' (d/r + 2/q > d/2 and d/r + 1/q < d/2); got d/r + 2/q - d/2 = " << rc.sum_2q
            << ", d/r + 1/q - d/2 = " << rc.sum_1q << " (classified '" << rc.tag << "')";
    throw ConfigError(0, msg.str());
}

std::string fmt_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

double parse_number(const std::string& text) {
    auto parse_part = [](const std::string& part) {
        double v = 0.0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size())
            throw ConfigError(0, "malformed number");
        return v;
    };
    size_t slash = text.find('/');
    double v;
    if (slash == std::string::npos) {
        v = parse_part(text);
    } else {
        double num = parse_part(trim(text.substr(0, slash)));
        double den = parse_part(trim(text.substr(slash + 1)));
        if (den == 0.0) throw ConfigError(0, "division by zero");
        v = num / den;
    }
    if (!std::isfinite(v)) throw ConfigError(0, "non-finite number");
    return v;
}

RunConfig parse_config(const std::string& text) {
    // First pass: collect (key, value, line), rejecting malformed lines and
    // duplicates before any interpretation.
    std::vector<std::pair<std::string, std::pair<std::string, int>>> entries;
    std::map<std::string, int> seen;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(lineno, "unterminated section header '" + line + "'");
            continue; // section headers are decorative
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, "expected key = value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "missing key before '='");
        if (value.empty()) throw ConfigError(lineno, "missing value for '" + key + "'");
        auto [it, fresh] = seen.emplace(key, lineno);
        if (!fresh)
            throw ConfigError(lineno, "duplicate key '" + key + "' (first on line " +
                                          std::to_string(it->second) + ")");
        entries.push_back({key, {value, lineno}});
    }

    // The experiment key names the schema everything else is checked against.
    const ExperimentEntry* entry = nullptr;
    for (const auto& [key, vl] : entries) {
        if (key != "experiment") continue;
        entry = find_experiment(vl.first);
        if (!entry) {
            std::string names;
            for (const auto& e : experiment_registry()) names += (names.empty() ? "" : ", ") + e.name;
            throw ConfigError(vl.second,
                              "unknown experiment '" + vl.first + "' (known: " + names + ")");
        }
    }
    if (!entry) throw ConfigError(0, "missing required key 'experiment'");

    RunConfig cfg;
    cfg.experiment = entry->name;
    cfg.plan = entry->defaults;

    for (const auto& [key, vl] : entries) {
        const auto& [value, line] = vl;
        if (key == "experiment") continue;
        if (key == "output_dir") {
            cfg.output_dir = value;
            continue;
        }
        if (key == "formats") {
            std::vector<std::string> fmts;
            for (const std::string& f : split_list(value)) {
                if (f != "csv" && f != "json" && f != "plotdata")
                    throw ConfigError(line, "unknown format '" + f +
                                                "' (known: csv, json, plotdata)");
                bool dup = false;
                for (const auto& g : fmts) dup = dup || g == f;
                if (!dup) fmts.push_back(f);
            }
            if (fmts.empty()) throw ConfigError(line, "formats must not be empty");
            cfg.formats = fmts;
            continue;
        }
        const ParamSpec* spec = entry->param(key);
        if (!spec)
            throw ConfigError(line, "unknown key '" + key + "' for experiment '" + entry->name +
                                        "' (run the list subcommand for its schema)");
        apply_key(cfg.plan, line, key, spec->kind, value);
    }

    check_region(*entry, cfg.plan);
    if (cfg.plan.ladder.empty()) cfg.plan.ladder = default_ladder(entry->name, cfg.plan);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_echo(const RunConfig& cfg) {
    const ExperimentEntry* entry = find_experiment(cfg.experiment);
    std::ostringstream os;
    os << "experiment = " << cfg.experiment << "\n";
    for (const auto& p : entry->params) {
        os << p.key << " = ";
        if (p.kind == "list") {
            for (size_t i = 0; i < cfg.plan.ladder.size(); ++i)
                os << (i ? "," : "") << fmt_value(cfg.plan.ladder[i]);
        } else if (p.key == "d") {
            os << cfg.plan.d;
        } else if (p.key == "grid_n") {
            os << cfg.plan.grid_n;
        } else if (p.key == "time_n") {
            os << cfg.plan.time_n;
        } else if (p.key == "seed") {
            os << cfg.plan.seed;
        } else if (p.key == "profile") {
            os << cfg.plan.profile;
        } else if (p.key == "refine_check") {
            os << (cfg.plan.refine_check ? "true" : "false");
        } else {
            double v = p.key == "q"           ? cfg.plan.q
                       : p.key == "r"         ? cfg.plan.r
                       : p.key == "s"         ? cfg.plan.s
                       : p.key == "alpha"     ? cfg.plan.alpha
                       : p.key == "nu"        ? cfg.plan.nu
                       : p.key == "tolerance" ? cfg.plan.tolerance
                       : p.key == "B"         ? cfg.plan.B
                                              : cfg.plan.C;
            if (std::isnan(v))
                os << "(experiment default)";
            else
                os << fmt_value(v);
        }
        os << "\n";
    }
    os << "output_dir = " << cfg.output_dir << "\n";
    os << "formats = ";
    for (size_t i = 0; i < cfg.formats.size(); ++i) os << (i ? "," : "") << cfg.formats[i];
    os << "\n";
    return os.str();
}

} // namespace extlab
