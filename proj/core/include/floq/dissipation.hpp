#pragma once

#include <string>
#include <vector>

#include "floq/drive.hpp"
#include "floq/floquet.hpp"
#include "floq/types.hpp"

namespace floq {

struct BathParams {
    double gamma = 0.01;     // coupling scale
    double cutoff = 500.0;   // Lorentz-Drude cutoff Omega
    double temperature = 0.0;
    void validate() const;
};

// odd spectral density J(w) = (2 gamma / pi) w Omega^2 / (w^2 + Omega^2)
double spectral_density(double w, const BathParams& bath);

// thermal occupation 1 / (exp(w/T) - 1); at T = 0: 0 for w > 0, -1 for w < 0
double bose_occupation(double w, const BathParams& bath);

// products with all w = 0 and T = 0 limits taken explicitly, never by division:
// J(0) N(0) -> (2 gamma / pi) T, and J (2N + 1) -> (4 gamma / pi) T at w = 0
double jn_product(double w, const BathParams& bath);
double j2n1_product(double w, const BathParams& bath);

// Fourier coefficients (1/tau) int e^{i n w0 t} <hi(t)|sigma_z|lo(t)> dt of the
// cross-mode matrix element, n = -n_max..n_max; requires sol.n_samples >= 4 n_max
std::vector<cplx> sigma_z_fourier(const FloquetSolution& sol, int n_max);

struct SteadyState {
    double rho_pp = 0.0;  // population of the "+" mode, in [0, 1/2] by labeling
    double rho_mm = 1.0;
    double h_plus = 0.0;  // stroboscopic mode energies <Phi(0)|H(0)|Phi(0)>
    double h_minus = 0.0;
    double e_ex = 0.0;  // rho_pp h_plus + rho_mm h_minus - E_ground(0)
    int n_max_used = 0;
    bool converged = false;
    bool degenerate = false;  // all decay weights vanished; populations undefined
};

// rate-equation steady state of the Floquet doublet coupled to the bath; the
// "+" label is the minority mode, so rho_pp <= 1/2 always holds
SteadyState steady_state(const FloquetSolution& sol, const DriveParams& p,
                         const BathParams& bath, int n_max = 64);

struct SweepRow {
    double omega0 = 0.0;
    double gap = 0.0;
    double rho_pp = 0.0;
    double e_ex = 0.0;
    std::string error;  // empty on success
};

// independent steady-state rows over an omega0 grid, computed on `threads`
// workers; per-row failures are captured in the error field
std::vector<SweepRow> sweep_steady_state(const DriveParams& p, const BathParams& bath,
                                         const std::vector<double>& grid, int threads = 0,
                                         int n_max = 64);

// default sweep grid: `points` evenly spaced values on [lo, hi], plus, when
// refine is set, clusters of 5 extra points around each sharp gap minimum
std::vector<double> sweep_grid(const DriveParams& p, double lo, double hi, int points,
                               bool refine);

}  // namespace floq
