#pragma once

#include <string>
#include <vector>

#include "floq/config.hpp"

namespace floq {

// run every experiment listed in cfg and write one CSV per output into
// cfg.output_dir; returns the paths written, throws on unrecoverable failure
// (sweep experiments record per-row failures in their error column instead)
std::vector<std::string> run_experiments(const RunConfig& cfg);

// "%.14e" rendering used for every numeric CSV cell
std::string csv_num(double x);

}  // namespace floq
