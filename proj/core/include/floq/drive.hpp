#pragma once

#include <array>

#include "floq/types.hpp"

namespace floq {

// two equivalent placements of the periodic drive; quasi-energies, gaps and
// steady-state populations agree between them, only t = 0 snapshots differ
enum class DriveForm {
    SineX,    // H(t) = (epsilon + A sin w0 t) sigma_z + delta sigma_x
    CosineY,  // H(t) = (epsilon + A cos w0 t) sigma_z + delta sigma_y
};

struct DriveParams {
    double delta = 1.0;      // static transverse coupling
    double epsilon = 1.0;    // static longitudinal bias
    double amplitude = 2.0;  // drive amplitude A
    double omega0 = 0.19;    // drive angular frequency
    DriveForm form = DriveForm::SineX;

    double period() const;
    double level_scale() const;  // E = sqrt(epsilon^2 + delta^2)
    void validate() const;       // throws std::invalid_argument
};

// longitudinal field epsilon + A s(w0 t)
double longitudinal(const DriveParams& p, double t);

Mat2 hamiltonian(const DriveParams& p, double t);

// magnetic field B(t) with H(t) = -B . sigma
std::array<double, 3> bloch_field(const DriveParams& p, double t);

struct InstantSpectrum {
    double e_ground;
    double e_excited;
    Vec2 ground;
    Vec2 excited;
    bool degenerate;  // field magnitude below 1e-14: eigenbasis arbitrary
};

InstantSpectrum instantaneous_spectrum(const DriveParams& p, double t);

}  // namespace floq
