#include "floq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "floq/dissipation.hpp"
#include "floq/dynamics.hpp"
#include "floq/floquet.hpp"
#include "floq/ladder.hpp"
#include "floq/propagator.hpp"

namespace floq {

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.14e", x);
    return buf;
}

namespace {

using Row = std::vector<std::string>;

struct Table {
    std::string filename;
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> preamble;
    std::vector<std::string> header;
    std::vector<Row> rows;
};

std::string write_table(const Table& t, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) / t.filename).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# floqlab " << t.experiment << "\n";
    for (const auto& [k, v] : t.preamble) out << "# " << k << " = " << v << "\n";
    for (size_t i = 0; i < t.header.size(); ++i)
        out << t.header[i] << (i + 1 < t.header.size() ? "," : "\n");
    for (const Row& r : t.rows)
        for (size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? "," : "\n");
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
    return path;
}

std::string form_name(DriveForm f) { return f == DriveForm::SineX ? "sinex" : "cosiney"; }

std::string sanitize_token(const std::string& tok) {
    std::string s = tok;
    for (char& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+'))
            c = '_';
    return s;
}

std::string clean_error(std::string msg) {
    for (char& c : msg)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return msg;
}

void drive_preamble(Table& t, const DriveParams& p, bool with_omega0) {
    t.preamble.emplace_back("delta", csv_num(p.delta));
    t.preamble.emplace_back("epsilon", csv_num(p.epsilon));
    t.preamble.emplace_back("amplitude", csv_num(p.amplitude));
    if (with_omega0) t.preamble.emplace_back("omega0", csv_num(p.omega0));
    t.preamble.emplace_back("form", form_name(p.form));
}

// run fn(i) for i in [0, n) on a pool of worker threads
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = (hc > 0) ? static_cast<int>(hc) : 4;
    }
    threads = std::min(threads, std::max(n, 1));
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

DriveParams effective_drive(const RunConfig& cfg, const std::string& experiment) {
    DriveParams p = cfg.drive;
    if (!cfg.form_given) {
        // time-domain and steady-state experiments default to the cosine
        // placement, spectra are placement-independent, the ladder needs sine
        if (experiment == "dynamics" || experiment == "llg" || experiment == "steady-sweep" ||
            experiment == "overlap-scan")
            p.form = DriveForm::CosineY;
        else
            p.form = DriveForm::SineX;
    }
    if (experiment == "ladder") {
        if (cfg.form_given && p.form != DriveForm::SineX)
            throw ConfigError(0, "the ladder experiment requires form = sinex");
        p.form = DriveForm::SineX;
    }
    return p;
}

std::string run_quasienergy_scan(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "quasienergy-scan");
    double lo = cfg.grid_lo > 0.0 ? cfg.grid_lo : 0.1;
    double hi = cfg.grid_hi > 0.0 ? cfg.grid_hi : 1.0;
    int n = cfg.grid_points > 0 ? cfg.grid_points : 181;
    if (hi <= lo) throw ConfigError(0, "grid_hi must be greater than grid_lo");

    Table t;
    t.filename = "quasienergies.csv";
    t.experiment = "quasienergy-scan";
    drive_preamble(t, p, false);
    t.preamble.emplace_back("grid_lo", csv_num(lo));
    t.preamble.emplace_back("grid_hi", csv_num(hi));
    t.preamble.emplace_back("grid_points", std::to_string(n));
    t.header = {"omega0", "mu_pos", "mu_minus", "mu_shirley", "mu_ad_folded", "folded_gap",
                "error"};
    t.rows.resize(n);

    parallel_for(n, cfg.threads, [&](int i) {
        double w = lo + (hi - lo) * i / (n - 1);
        Row& r = t.rows[i];
        try {
            DriveParams q = p;
            q.omega0 = w;
            FloquetSolution sol = floquet_diagonalize(q);
            ShirleyResult sh = shirley_quasienergies(q);
            double mu_ad = fold(adiabatic_mu(q), w);
            r = {csv_num(w),     csv_num(sol.mu_pos),      csv_num(sol.mu_minus),
                 csv_num(sh.mu_pos), csv_num(mu_ad),       csv_num(folded_gap(sol)),
                 ""};
        } catch (const std::exception& ex) {
            r = {csv_num(w), "", "", "", "", "", clean_error(ex.what())};
        }
    });
    return write_table(t, cfg.output_dir);
}

std::string run_overlap_scan(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "overlap-scan");
    double lo = cfg.grid_lo > 0.0 ? cfg.grid_lo : 0.1;
    double hi = cfg.grid_hi > 0.0 ? cfg.grid_hi : 1.0;
    int n = cfg.grid_points > 0 ? cfg.grid_points : 181;
    if (hi <= lo) throw ConfigError(0, "grid_hi must be greater than grid_lo");

    Table t;
    t.filename = "overlap.csv";
    t.experiment = "overlap-scan";
    drive_preamble(t, p, false);
    t.preamble.emplace_back("grid_lo", csv_num(lo));
    t.preamble.emplace_back("grid_hi", csv_num(hi));
    t.preamble.emplace_back("grid_points", std::to_string(n));
    t.header = {"omega0", "ground_overlap", "error"};
    t.rows.resize(n);

    parallel_for(n, cfg.threads, [&](int i) {
        double w = lo + (hi - lo) * i / (n - 1);
        Row& r = t.rows[i];
        try {
            DriveParams q = p;
            q.omega0 = w;
            FloquetSolution sol = floquet_diagonalize(q);
            r = {csv_num(w), csv_num(ground_overlap(sol, q)), ""};
        } catch (const std::exception& ex) {
            r = {csv_num(w), "", clean_error(ex.what())};
        }
    });
    return write_table(t, cfg.output_dir);
}

std::string run_resonance_locate(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "resonance-locate");
    std::vector<Resonance> res =
        locate_resonances(p, cfg.window_lo, cfg.window_hi, cfg.scan_points);

    Table t;
    t.filename = "resonances.csv";
    t.experiment = "resonance-locate";
    drive_preamble(t, p, false);
    t.preamble.emplace_back("window_lo", csv_num(cfg.window_lo));
    t.preamble.emplace_back("window_hi", csv_num(cfg.window_hi));
    t.preamble.emplace_back("scan_points", std::to_string(cfg.scan_points));
    t.header = {"omega0_star", "folded_gap", "bracket_lo", "bracket_hi"};
    for (const Resonance& r : res)
        t.rows.push_back({csv_num(r.omega0_star), csv_num(r.gap), csv_num(r.bracket_lo),
                          csv_num(r.bracket_hi)});
    return write_table(t, cfg.output_dir);
}

std::string run_dynamics(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "dynamics");
    int n_periods = cfg.n_periods > 0 ? cfg.n_periods : 3000;
    Vec2 psi0 = instantaneous_spectrum(p, 0.0).ground;
    Trajectory tr =
        evolve_unitary(p, psi0, n_periods, cfg.steps_per_period, cfg.samples_per_period);
    BeatResult beat = beat_frequency(tr.strobe_e_ex, tr.tau);

    Table t;
    t.filename = "dynamics.csv";
    t.experiment = "dynamics";
    drive_preamble(t, p, true);
    t.preamble.emplace_back("n_periods", std::to_string(n_periods));
    t.preamble.emplace_back("steps_per_period", std::to_string(cfg.steps_per_period));
    t.preamble.emplace_back("samples_per_period", std::to_string(cfg.samples_per_period));
    t.preamble.emplace_back("max_e_ex", csv_num(tr.max_e_ex));
    t.preamble.emplace_back("beat_found", beat.found ? "1" : "0");
    if (beat.found) t.preamble.emplace_back("beat_omega", csv_num(beat.omega));
    t.header = {"t", "sigma_x", "sigma_y", "sigma_z", "e_ex"};
    t.rows.reserve(tr.times.size());
    for (size_t i = 0; i < tr.times.size(); ++i)
        t.rows.push_back({csv_num(tr.times[i]), csv_num(tr.spin[i][0]), csv_num(tr.spin[i][1]),
                          csv_num(tr.spin[i][2]), csv_num(tr.e_ex[i])});
    return write_table(t, cfg.output_dir);
}

std::vector<std::string> run_llg(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "llg");
    int n_periods = cfg.n_periods > 0 ? cfg.n_periods : 500;
    std::array<double, 3> m0 = aligned_moment(p);

    std::vector<std::string> paths;
    for (size_t li = 0; li < cfg.lambdas.size(); ++li) {
        double lambda = cfg.lambdas[li];
        ClassicalTrajectory tr = classical_llg(p, m0, lambda, n_periods, cfg.steps_per_period,
                                               cfg.samples_per_period);
        int settle = settling_period(tr.e_ex, tr.samples_per_period);
        int maxima = count_beat_maxima(tr.e_ex, tr.samples_per_period, settle);

        Table t;
        t.filename = "llg_lambda_" + sanitize_token(cfg.lambda_tokens[li]) + ".csv";
        t.experiment = "llg";
        drive_preamble(t, p, true);
        t.preamble.emplace_back("lambda", csv_num(lambda));
        t.preamble.emplace_back("n_periods", std::to_string(n_periods));
        t.preamble.emplace_back("steps_per_period", std::to_string(cfg.steps_per_period));
        t.preamble.emplace_back("samples_per_period", std::to_string(cfg.samples_per_period));
        t.preamble.emplace_back("settling_period", std::to_string(settle));
        t.preamble.emplace_back("beat_maxima", std::to_string(maxima));
        t.header = {"t", "m_x", "m_y", "m_z", "e_ex"};
        t.rows.reserve(tr.times.size());
        for (size_t i = 0; i < tr.times.size(); ++i)
            t.rows.push_back({csv_num(tr.times[i]), csv_num(tr.moment[i][0]),
                              csv_num(tr.moment[i][1]), csv_num(tr.moment[i][2]),
                              csv_num(tr.e_ex[i])});
        paths.push_back(write_table(t, cfg.output_dir));
    }
    return paths;
}

std::string run_ladder(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "ladder");
    int n_periods = cfg.n_periods > 0 ? cfg.n_periods : 50;
    LadderEvolution ev = evolve_ladder(p, n_periods, cfg.half_width, cfg.samples_per_period);

    // direct stroboscopic evolution for the fidelity column
    std::vector<Mat2> us = sample_period(p, cfg.steps_per_period, cfg.samples_per_period);
    Vec2 psi = instantaneous_spectrum(p, 0.0).ground;

    Table t;
    t.filename = "ladder.csv";
    t.experiment = "ladder";
    drive_preamble(t, p, true);
    t.preamble.emplace_back("n_periods", std::to_string(n_periods));
    t.preamble.emplace_back("samples_per_period", std::to_string(cfg.samples_per_period));
    t.preamble.emplace_back("half_width_requested", std::to_string(ev.requested_half_width));
    t.preamble.emplace_back("half_width_used", std::to_string(ev.half_width));
    t.preamble.emplace_back("max_edge_weight", csv_num(ev.max_edge_weight));
    t.header = {"t", "p_plus", "p_minus", "fidelity", "norm_deviation"};

    int spp = cfg.samples_per_period;
    for (size_t s = 0; s < ev.times.size(); ++s) {
        double dev;
        Vec2 rec = reconstruct_state(ev, p, static_cast<int>(s), &dev);
        int k = static_cast<int>(s % spp);
        Vec2 direct = us[k] * psi;
        if (k == spp - 1 && s + 1 < ev.times.size()) psi = us.back() * psi;
        double fid = std::norm(dot(normalized(direct), rec));
        t.rows.push_back({csv_num(ev.times[s]), csv_num(ev.p_plus[s]), csv_num(ev.p_minus[s]),
                          csv_num(fid), csv_num(dev)});
    }
    return write_table(t, cfg.output_dir);
}

std::vector<std::string> run_steady_sweep(const RunConfig& cfg) {
    DriveParams p = effective_drive(cfg, "steady-sweep");
    double lo = cfg.grid_lo > 0.0 ? cfg.grid_lo : 0.15;
    double hi = cfg.grid_hi > 0.0 ? cfg.grid_hi : 0.6;
    int n = cfg.grid_points > 0 ? cfg.grid_points : 600;
    if (hi <= lo) throw ConfigError(0, "grid_hi must be greater than grid_lo");

    std::vector<double> grid = sweep_grid(p, lo, hi, n, cfg.refine);

    std::vector<std::string> paths;
    for (size_t ti = 0; ti < cfg.temperatures.size(); ++ti) {
        BathParams bath = cfg.bath;
        bath.temperature = cfg.temperatures[ti];
        std::vector<SweepRow> rows = sweep_steady_state(p, bath, grid, cfg.threads, cfg.n_max);

        size_t failed = 0;
        for (const SweepRow& r : rows)
            if (!r.error.empty()) ++failed;
        if (!rows.empty() && failed == rows.size())
            throw std::runtime_error("steady-sweep: every row failed; first error: " +
                                     rows.front().error);

        Table t;
        t.filename = "steady_T_" + sanitize_token(cfg.temperature_tokens[ti]) + ".csv";
        t.experiment = "steady-sweep";
        drive_preamble(t, p, false);
        t.preamble.emplace_back("gamma", csv_num(bath.gamma));
        t.preamble.emplace_back("cutoff", csv_num(bath.cutoff));
        t.preamble.emplace_back("temperature", csv_num(bath.temperature));
        t.preamble.emplace_back("n_max", std::to_string(cfg.n_max));
        t.preamble.emplace_back("grid_lo", csv_num(lo));
        t.preamble.emplace_back("grid_hi", csv_num(hi));
        t.preamble.emplace_back("grid_points", std::to_string(n));
        t.preamble.emplace_back("refine", cfg.refine ? "1" : "0");
        t.header = {"omega0", "folded_gap", "rho_pp", "e_ex", "error"};
        for (const SweepRow& r : rows) {
            if (r.error.empty())
                t.rows.push_back({csv_num(r.omega0), csv_num(r.gap), csv_num(r.rho_pp),
                                  csv_num(r.e_ex), ""});
            else
                t.rows.push_back({csv_num(r.omega0), "", "", "", clean_error(r.error)});
        }
        paths.push_back(write_table(t, cfg.output_dir));
    }
    return paths;
}

}  // namespace

std::vector<std::string> run_experiments(const RunConfig& cfg) {
    std::vector<std::string> paths;
    for (const std::string& exp : cfg.experiments) {
        if (exp == "quasienergy-scan") {
            paths.push_back(run_quasienergy_scan(cfg));
        } else if (exp == "overlap-scan") {
            paths.push_back(run_overlap_scan(cfg));
        } else if (exp == "resonance-locate") {
            paths.push_back(run_resonance_locate(cfg));
        } else if (exp == "dynamics") {
            paths.push_back(run_dynamics(cfg));
        } else if (exp == "llg") {
            for (std::string& s : run_llg(cfg)) paths.push_back(std::move(s));
        } else if (exp == "ladder") {
            paths.push_back(run_ladder(cfg));
        } else if (exp == "steady-sweep") {
            for (std::string& s : run_steady_sweep(cfg)) paths.push_back(std::move(s));
        } else {
            throw ConfigError(0, "unknown experiment '" + exp + "'");
        }
    }
    return paths;
}

}  // namespace floq
