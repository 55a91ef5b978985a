#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "floq/drive.hpp"
#include "floq/types.hpp"

namespace floq {

// two-band tilted-lattice picture of the driven spin in rotated band variables
// (u_n, v_n) on sites n = -half_width..half_width; valid for DriveForm::SineX

struct LadderEvolution {
    double tau = 0.0;
    int n_periods = 0;
    int samples_per_period = 0;
    int requested_half_width = 0;
    int half_width = 0;         // width actually used after auto-doubling
    double max_edge_weight = 0.0;  // largest boundary-site occupation seen
    bool valid = false;            // edge weight stayed below 1e-6
    std::vector<double> times;
    std::vector<double> p_plus;   // sum |u_n|^2
    std::vector<double> p_minus;  // sum |v_n|^2
    // amplitudes per sample, layout [2*(n+half_width) + band], band 0 = u, 1 = v
    std::vector<std::vector<cplx>> amplitudes;
};

// evolve from v_0 = 1 (lower band, central site) by exact eigendecomposition
// of the time-independent ladder matrix; half_width doubles until the edge
// weight stays below 1e-6 (up to 1024)
LadderEvolution evolve_ladder(const DriveParams& p, int n_periods, int half_width = 32,
                              int samples_per_period = 64);

// physical spin state rebuilt from the ladder amplitudes at sample index k;
// deviation reports | ||s|| - 1 | before normalization
Vec2 reconstruct_state(const LadderEvolution& ev, const DriveParams& p, int sample_index,
                       double* deviation = nullptr);

// instantaneous band energies (lower, upper) at quasi-momentum q
std::pair<double, double> band_dispersion(const DriveParams& p, double q);

// integrate dE/dt = w0 * imbalance(t) * d(eps_q)/dq at q = w0 t by trapezoid
// from E(0) = -level_scale; returns E at each of steps+1 grid times
std::vector<double> semiclassical_energy(const DriveParams& p, double t_final, int steps,
                                         const std::function<double(double)>& imbalance);

struct ResonancePrediction {
    int m = 0;
    double omega0_star = 0.0;  // 2 E / m
    // second-order closed forms, defined for m = 2 only (NaN otherwise)
    double delta_e = 0.0;   // quasi-level detuning shift
    double coupling = 0.0;  // effective two-level coupling J
    double omega_l = 0.0;   // A^2 / w0 scale at epsilon = delta
    double imbalance_max = 0.0;  // peak of p_plus - p_minus over the cycle
};

ResonancePrediction predict_resonance(const DriveParams& p, int m);

struct RabiFit {
    double omega = 0.0;  // fitted oscillation frequency of p_plus(n tau)
    double offset = 0.0;
    double amplitude = 0.0;  // model offset + amplitude * sin^2(omega t / 2 + phase)
    double phase = 0.0;
    double residual = 0.0;  // rms misfit
};

RabiFit rabi_fit(const std::vector<double>& p_plus_strobe, double tau);

}  // namespace floq
