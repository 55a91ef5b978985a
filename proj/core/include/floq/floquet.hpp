#pragma once

#include <vector>

#include "floq/drive.hpp"
#include "floq/types.hpp"

namespace floq {

// fold x into the Brillouin zone (-w0/2, w0/2]
double fold(double x, double omega0);

struct FloquetSolution {
    double omega0 = 0.0;
    double mu_pos = 0.0;      // folded quasi-energy of the "+" mode, >= 0
    double mu_minus = 0.0;    // folded quasi-energy of the "-" mode
    bool degenerate = false;  // monodromy eigenvalues coincide within 1e-14
    Vec2 mode_plus;           // |Phi^+(0)>, the mode whose folded quasi-energy is mu_pos
    Vec2 mode_minus;
    int steps_used = 0;
    int n_samples = 0;
    // periodic snapshots |Phi^pm(t_k)>, t_k = k tau / n_samples, k = 0..n_samples
    std::vector<Vec2> samples_plus;
    std::vector<Vec2> samples_minus;
};

// monodromy diagonalization; steps_per_period = 0 selects automatic doubling
// from 4096 until mu_pos is stable to 1e-10
FloquetSolution floquet_diagonalize(const DriveParams& p, int steps_per_period = 0,
                                    int n_samples = 512);

// period-averaged excited-state energy (unfolded adiabatic quasi-energy)
double adiabatic_mu(const DriveParams& p);

// |<Phi^+(0)|ground(0)>|^2
double ground_overlap(const FloquetSolution& sol, const DriveParams& p);

// distance of 2 mu_pos from the nearest multiple of omega0
double folded_gap(const FloquetSolution& sol);
double folded_gap_at(const DriveParams& p, double omega0);

struct Resonance {
    double omega0_star;
    double gap;         // folded gap at omega0_star
    double bracket_lo;  // coarse-grid cell that contained the minimum
    double bracket_hi;
};

// scan folded_gap over [lo, hi], golden-refine each local minimum to 1e-8 in
// omega0, keep minima with gap < omega0/50 (threshold <= 0 keeps every minimum)
std::vector<Resonance> locate_resonances(const DriveParams& p, double lo, double hi,
                                         int scan_points = 400, double threshold_frac = 0.02);

struct ShirleyResult {
    double mu_pos = 0.0;
    double mu_minus = 0.0;
    int n_max_used = 0;
    bool converged = false;  // doublet moved < 1e-8 on the last truncation increase
};

// quasi-energies from the time-independent extended-zone eigenproblem,
// truncation grown until the central doublet is stable to 1e-10
ShirleyResult shirley_quasienergies(const DriveParams& p, int n_max = 0);

}  // namespace floq
