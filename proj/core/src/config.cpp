#include "floq/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace floq {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_num(const std::string& v, int line) {
    size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError(line, "expected a number, got '" + v + "'");
    return x;
}

int parse_int(const std::string& v, int line) {
    double x = parse_num(v, line);
    int i = static_cast<int>(x);
    if (x != static_cast<double>(i)) throw ConfigError(line, "expected an integer, got '" + v + "'");
    return i;
}

const std::set<std::string> known_experiments = {
    "quasienergy-scan", "overlap-scan", "resonance-locate", "dynamics",
    "llg",              "ladder",       "steady-sweep",
};

const std::set<std::string> known_keys = {
    "experiment", "delta",       "epsilon",          "amplitude",
    "omega0",     "form",        "gamma",            "cutoff",
    "temperature", "lambda",     "steps_per_period", "samples_per_period",
    "n_periods",  "half_width",  "n_max",            "grid_lo",
    "grid_hi",    "grid_points", "refine",           "scan_points",
    "window_lo",  "window_hi",   "threads",          "output_dir",
};

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool have_experiment = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (val.empty()) throw ConfigError(line, "empty value for '" + key + "'");
        if (!known_keys.count(key)) throw ConfigError(line, "unknown key '" + key + "'");
        if (!seen.insert(key).second) throw ConfigError(line, "duplicate key '" + key + "'");

        if (key == "experiment") {
            for (const std::string& e : split_list(val)) {
                if (!known_experiments.count(e))
                    throw ConfigError(line, "unknown experiment '" + e + "'");
                cfg.experiments.push_back(e);
            }
            if (cfg.experiments.empty()) throw ConfigError(line, "empty experiment list");
            have_experiment = true;
        } else if (key == "delta") {
            cfg.drive.delta = parse_num(val, line);
        } else if (key == "epsilon") {
            cfg.drive.epsilon = parse_num(val, line);
        } else if (key == "amplitude") {
            cfg.drive.amplitude = parse_num(val, line);
            if (cfg.drive.amplitude < 0.0) throw ConfigError(line, "amplitude must be >= 0");
        } else if (key == "omega0") {
            cfg.drive.omega0 = parse_num(val, line);
            if (cfg.drive.omega0 <= 0.0) throw ConfigError(line, "omega0 must be > 0");
        } else if (key == "form") {
            if (val == "sinex")
                cfg.drive.form = DriveForm::SineX;
            else if (val == "cosiney")
                cfg.drive.form = DriveForm::CosineY;
            else
                throw ConfigError(line, "form must be 'sinex' or 'cosiney'");
            cfg.form_given = true;
        } else if (key == "gamma") {
            cfg.bath.gamma = parse_num(val, line);
            if (cfg.bath.gamma <= 0.0) throw ConfigError(line, "gamma must be > 0");
        } else if (key == "cutoff") {
            cfg.bath.cutoff = parse_num(val, line);
            if (cfg.bath.cutoff <= 0.0) throw ConfigError(line, "cutoff must be > 0");
        } else if (key == "temperature") {
            cfg.temperatures.clear();
            cfg.temperature_tokens = split_list(val);
            for (const std::string& tok : cfg.temperature_tokens) {
                double t = parse_num(tok, line);
                if (t < 0.0) throw ConfigError(line, "temperature must be >= 0");
                cfg.temperatures.push_back(t);
            }
            if (cfg.temperatures.empty()) throw ConfigError(line, "empty temperature list");
        } else if (key == "lambda") {
            cfg.lambdas.clear();
            cfg.lambda_tokens = split_list(val);
            for (const std::string& tok : cfg.lambda_tokens) {
                double l = parse_num(tok, line);
                if (l < 0.0) throw ConfigError(line, "lambda must be >= 0");
                cfg.lambdas.push_back(l);
            }
            if (cfg.lambdas.empty()) throw ConfigError(line, "empty lambda list");
        } else if (key == "steps_per_period") {
            cfg.steps_per_period = parse_int(val, line);
            if (cfg.steps_per_period < 1) throw ConfigError(line, "steps_per_period must be >= 1");
        } else if (key == "samples_per_period") {
            cfg.samples_per_period = parse_int(val, line);
            if (cfg.samples_per_period < 1)
                throw ConfigError(line, "samples_per_period must be >= 1");
        } else if (key == "n_periods") {
            cfg.n_periods = parse_int(val, line);
            if (cfg.n_periods < 1) throw ConfigError(line, "n_periods must be >= 1");
        } else if (key == "half_width") {
            cfg.half_width = parse_int(val, line);
            if (cfg.half_width < 1) throw ConfigError(line, "half_width must be >= 1");
        } else if (key == "n_max") {
            cfg.n_max = parse_int(val, line);
            if (cfg.n_max < 1) throw ConfigError(line, "n_max must be >= 1");
        } else if (key == "grid_lo") {
            cfg.grid_lo = parse_num(val, line);
        } else if (key == "grid_hi") {
            cfg.grid_hi = parse_num(val, line);
        } else if (key == "grid_points") {
            cfg.grid_points = parse_int(val, line);
            if (cfg.grid_points < 2) throw ConfigError(line, "grid_points must be >= 2");
        } else if (key == "refine") {
            if (val == "0" || val == "false")
                cfg.refine = false;
            else if (val == "1" || val == "true")
                cfg.refine = true;
            else
                throw ConfigError(line, "refine must be 0/1/true/false");
        } else if (key == "scan_points") {
            cfg.scan_points = parse_int(val, line);
            if (cfg.scan_points < 3) throw ConfigError(line, "scan_points must be >= 3");
        } else if (key == "window_lo") {
            cfg.window_lo = parse_num(val, line);
        } else if (key == "window_hi") {
            cfg.window_hi = parse_num(val, line);
        } else if (key == "threads") {
            cfg.threads = parse_int(val, line);
            if (cfg.threads < 0) throw ConfigError(line, "threads must be >= 0");
        } else if (key == "output_dir") {
            cfg.output_dir = val;
        }
    }

    if (!have_experiment) throw ConfigError(0, "missing required key 'experiment'");
    if (cfg.steps_per_period % cfg.samples_per_period != 0)
        throw ConfigError(0, "steps_per_period must be a multiple of samples_per_period");
    if (cfg.window_hi <= cfg.window_lo)
        throw ConfigError(0, "window_hi must be greater than window_lo");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace floq
