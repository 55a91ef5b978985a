#include "floq/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace floq {

Mat2 step_propagator(const DriveParams& p, double t0, double dt) {
    Mat2 h = hamiltonian(p, t0 + 0.5 * dt);
    double hz = h.m00.real();
    double r = std::sqrt(hz * hz + std::norm(h.m01));
    if (r == 0.0) return Mat2::identity();
    double c = std::cos(r * dt);
    cplx ms(0.0, -std::sin(r * dt) / r);  // -i sin(r dt)/r
    return {c + ms * h.m00, ms * h.m01, ms * h.m10, c + ms * h.m11};
}

Mat2 propagate(const DriveParams& p, double t0, double span, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    double dt = span / steps;
    Mat2 u = Mat2::identity();
    for (int k = 0; k < steps; ++k) u = step_propagator(p, t0 + k * dt, dt) * u;
    return u;
}

Mat2 monodromy(const DriveParams& p, int steps_per_period) {
    return propagate(p, 0.0, p.period(), steps_per_period);
}

std::vector<Mat2> sample_period(const DriveParams& p, int steps_per_period, int n_samples) {
    if (n_samples < 1 || steps_per_period % n_samples != 0)
        throw std::invalid_argument("steps_per_period must be a positive multiple of n_samples");
    int chunk = steps_per_period / n_samples;
    double dt = p.period() / steps_per_period;
    std::vector<Mat2> out;
    out.reserve(n_samples + 1);
    Mat2 u = Mat2::identity();
    out.push_back(u);
    for (int k = 0; k < steps_per_period; ++k) {
        u = step_propagator(p, k * dt, dt) * u;
        if ((k + 1) % chunk == 0) out.push_back(u);
    }
    return out;
}

}  // namespace floq
