#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "floq/dissipation.hpp"
#include "floq/drive.hpp"

namespace floq {

struct ConfigError : std::runtime_error {
    int line;  // 0 when not tied to a specific line
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

struct RunConfig {
    std::vector<std::string> experiments;

    DriveParams drive;
    bool form_given = false;  // experiments pick their own default form otherwise

    BathParams bath;
    std::vector<double> temperatures{0.0};
    std::vector<std::string> temperature_tokens{"0"};  // literal tokens, used in filenames

    std::vector<double> lambdas{0.001, 0.01, 0.1};
    std::vector<std::string> lambda_tokens{"0.001", "0.01", "0.1"};

    int steps_per_period = 4096;
    int samples_per_period = 64;
    int n_periods = 0;  // 0: experiment default
    int half_width = 32;
    int n_max = 64;

    double grid_lo = 0.0, grid_hi = 0.0;  // 0: experiment default
    int grid_points = 0;
    bool refine = true;
    int scan_points = 400;
    double window_lo = 0.19, window_hi = 0.20;

    int threads = 0;  // 0: hardware concurrency
    std::string output_dir = ".";
};

// flat key = value text; '#' starts a comment; keys outside the registry,
// missing required keys and malformed numbers raise ConfigError with the line
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace floq
