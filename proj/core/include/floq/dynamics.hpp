#pragma once

#include <array>
#include <vector>

#include "floq/drive.hpp"
#include "floq/types.hpp"

namespace floq {

struct Trajectory {
    double tau = 0.0;
    int n_periods = 0;
    int samples_per_period = 0;
    std::vector<double> times;  // n_periods * samples_per_period + 1 entries
    std::vector<std::array<double, 3>> spin;
    std::vector<double> e_ex;         // <H(t)> - E_ground(t)
    std::vector<double> strobe_e_ex;  // e_ex at t = n tau, n = 0..n_periods
    double max_e_ex = 0.0;
    double max_norm_defect = 0.0;  // max | ||psi|| - 1 | over all samples
};

// exact stroboscopic composition: the period is propagated once at full step
// resolution and reused for every later period
Trajectory evolve_unitary(const DriveParams& p, const Vec2& psi0, int n_periods,
                          int steps_per_period = 4096, int samples_per_period = 64);

struct BeatResult {
    bool found = false;
    double omega = 0.0;      // angular beat frequency
    double amplitude = 0.0;  // oscillation amplitude at the dominant bin
    double peak_to_floor = 0.0;
};

// dominant oscillation of a stroboscopic series sampled every tau; a peak
// counts only above 10x the median spectral power and amplitude >= 0.025
BeatResult beat_frequency(const std::vector<double>& series, double tau);

struct ClassicalTrajectory {
    double tau = 0.0;
    int n_periods = 0;
    int samples_per_period = 0;
    std::vector<double> times;
    std::vector<std::array<double, 3>> moment;
    std::vector<double> e_ex;  // |B(t)| - M . B(t)
    double max_norm_defect = 0.0;
};

// damped precession dM/dt = Omega x M, Omega = 2 (B + lambda M x B), integrated
// by norm-preserving two-stage midpoint rotations
ClassicalTrajectory classical_llg(const DriveParams& p, const std::array<double, 3>& m0,
                                  double lambda, int n_periods, int steps_per_period = 4096,
                                  int samples_per_period = 64);

// aligned classical starting moment M(0) = B(0)/|B(0)|
std::array<double, 3> aligned_moment(const DriveParams& p);

// first period index after which e_ex changes by less than tol between
// consecutive periods at every intra-period sample; 0 if settled from the start
int settling_period(const std::vector<double>& e_ex, int samples_per_period, double tol = 1e-6);

// beat envelope maxima of the per-period peak series before settling; local
// maxima above frac * global max, merged when closer than min_separation periods
int count_beat_maxima(const std::vector<double>& e_ex, int samples_per_period, int settle,
                      double frac = 0.2, int min_separation = 10);

}  // namespace floq
