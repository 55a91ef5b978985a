#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "floq/config.hpp"
#include "floq/experiments.hpp"

// exit codes: 0 success, 1 config error, 2 numerical failure
int main(int argc, char** argv) {
    CLI::App app{"periodically driven spin-1/2 toolbox"};
    app.get_formatter()->column_width(28);

    std::string config_path;
    int threads = -1;
    std::string out_dir;
    app.add_option("config", config_path, "flat key = value config file")->required();
    app.add_option("--threads", threads, "worker threads for sweeps (default: all cores)");
    app.add_option("--out", out_dir, "output directory (overrides output_dir in the config)");

    CLI11_PARSE(app, argc, argv);

    floq::RunConfig cfg;
    try {
        cfg = floq::load_config_file(config_path);
    } catch (const floq::ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 1;
    }
    if (threads >= 0) cfg.threads = threads;
    if (!out_dir.empty()) cfg.output_dir = out_dir;

    try {
        for (const std::string& path : floq::run_experiments(cfg))
            std::cout << "wrote " << path << "\n";
    } catch (const floq::ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
