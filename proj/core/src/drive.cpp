#include "floq/drive.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace floq {

double DriveParams::period() const { return 2.0 * std::numbers::pi / omega0; }

double DriveParams::level_scale() const { return std::hypot(epsilon, delta); }

void DriveParams::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
    if (!(amplitude >= 0.0)) throw std::invalid_argument("amplitude must be >= 0");
    if (!std::isfinite(delta) || !std::isfinite(epsilon))
        throw std::invalid_argument("delta and epsilon must be finite");
}

double longitudinal(const DriveParams& p, double t) {
    double ph = p.omega0 * t;
    double s = (p.form == DriveForm::SineX) ? std::sin(ph) : std::cos(ph);
    return p.epsilon + p.amplitude * s;
}

Mat2 hamiltonian(const DriveParams& p, double t) {
    double h = longitudinal(p, t);
    if (p.form == DriveForm::SineX)
        return {cplx(h), cplx(p.delta), cplx(p.delta), cplx(-h)};
    return {cplx(h), cplx(0.0, -p.delta), cplx(0.0, p.delta), cplx(-h)};
}

std::array<double, 3> bloch_field(const DriveParams& p, double t) {
    double h = longitudinal(p, t);
    if (p.form == DriveForm::SineX) return {-p.delta, 0.0, -h};
    return {0.0, -p.delta, -h};
}

InstantSpectrum instantaneous_spectrum(const DriveParams& p, double t) {
    Mat2 hm = hamiltonian(p, t);
    double h = hm.m00.real();
    cplx c = hm.m01;  // upper off-diagonal
    double e = std::sqrt(h * h + std::norm(c));

    InstantSpectrum s;
    s.e_excited = e;
    s.e_ground = -e;
    s.degenerate = e < 1e-14;
    if (s.degenerate) {
        s.excited = {cplx(1.0), cplx(0.0)};
        s.ground = {cplx(0.0), cplx(1.0)};
        return s;
    }

    // pick the numerically stable branch for the excited eigenvector
    Vec2 ex;
    if (h >= 0.0)
        ex = {cplx(e + h), std::conj(c)};
    else
        ex = {c, cplx(e - h)};
    ex = phase_fixed(normalized(ex));
    Vec2 gr = phase_fixed(Vec2{-std::conj(ex.b), std::conj(ex.a)});
    s.excited = ex;
    s.ground = gr;
    return s;
}

}  // namespace floq
