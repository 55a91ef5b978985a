#include "floq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "floq/propagator.hpp"

namespace floq {

Trajectory evolve_unitary(const DriveParams& p, const Vec2& psi0, int n_periods,
                          int steps_per_period, int samples_per_period) {
    p.validate();
    if (n_periods < 1) throw std::invalid_argument("n_periods must be >= 1");

    std::vector<Mat2> us = sample_period(p, steps_per_period, samples_per_period);
    const Mat2& u_tau = us.back();
    double tau = p.period();

    // instantaneous data repeats every period: precompute one period of it
    std::vector<Mat2> hs(samples_per_period);
    std::vector<double> eg(samples_per_period);
    for (int k = 0; k < samples_per_period; ++k) {
        double t = tau * k / samples_per_period;
        hs[k] = hamiltonian(p, t);
        eg[k] = instantaneous_spectrum(p, t).e_ground;
    }

    Trajectory tr;
    tr.tau = tau;
    tr.n_periods = n_periods;
    tr.samples_per_period = samples_per_period;
    int n_total = n_periods * samples_per_period + 1;
    tr.times.reserve(n_total);
    tr.spin.reserve(n_total);
    tr.e_ex.reserve(n_total);
    tr.strobe_e_ex.reserve(n_periods + 1);

    Vec2 psi_period = psi0;  // state at t = n tau
    for (int n = 0; n < n_periods; ++n) {
        for (int k = 0; k < samples_per_period; ++k) {
            Vec2 psi = us[k] * psi_period;
            double e = real_expectation(psi, hs[k]) / psi.norm_sq() - eg[k];
            tr.times.push_back((n + static_cast<double>(k) / samples_per_period) * tau);
            tr.spin.push_back(spin_expectation(psi));
            tr.e_ex.push_back(e);
            tr.max_e_ex = std::max(tr.max_e_ex, e);
            tr.max_norm_defect = std::max(tr.max_norm_defect, std::abs(psi.norm() - 1.0));
            if (k == 0) tr.strobe_e_ex.push_back(e);
        }
        psi_period = u_tau * psi_period;
    }
    double e_end = real_expectation(psi_period, hs[0]) / psi_period.norm_sq() - eg[0];
    tr.times.push_back(n_periods * tau);
    tr.spin.push_back(spin_expectation(psi_period));
    tr.e_ex.push_back(e_end);
    tr.strobe_e_ex.push_back(e_end);
    tr.max_e_ex = std::max(tr.max_e_ex, e_end);
    tr.max_norm_defect = std::max(tr.max_norm_defect, std::abs(psi_period.norm() - 1.0));
    return tr;
}

BeatResult beat_frequency(const std::vector<double>& series, double tau) {
    BeatResult res;
    int n = static_cast<int>(series.size());
    if (n < 8) return res;

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= n;

    int n_bins = n / 2;
    std::vector<double> power(n_bins + 1, 0.0), mag(n_bins + 1, 0.0);
    double w0 = 2.0 * std::numbers::pi / n;
    for (int k = 1; k <= n_bins; ++k) {
        cplx f(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            f += (series[j] - mean) * std::exp(cplx(0.0, -w0 * k * j));
        mag[k] = std::abs(f);
        power[k] = std::norm(f);
    }

    int k_star = 1;
    for (int k = 2; k <= n_bins; ++k)
        if (power[k] > power[k_star]) k_star = k;

    std::vector<double> sorted(power.begin() + 1, power.end());
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    double floor = sorted[sorted.size() / 2];

    // parabolic interpolation on the log magnitude around the peak bin
    double delta = 0.0;
    if (k_star > 1 && k_star < n_bins && mag[k_star - 1] > 0.0 && mag[k_star + 1] > 0.0) {
        double ym = std::log(mag[k_star - 1]);
        double y0 = std::log(mag[k_star]);
        double yp = std::log(mag[k_star + 1]);
        double denom = ym - 2.0 * y0 + yp;
        if (std::abs(denom) > 1e-300) delta = 0.5 * (ym - yp) / denom;
        delta = std::clamp(delta, -0.5, 0.5);
    }

    res.omega = 2.0 * std::numbers::pi * (k_star + delta) / (n * tau);
    res.amplitude = 2.0 * mag[k_star] / n;
    res.peak_to_floor = (floor > 0.0) ? power[k_star] / floor
                                      : (power[k_star] > 0.0 ? 1e300 : 0.0);
    res.found = res.peak_to_floor > 10.0 && res.amplitude >= 0.025;
    return res;
}

namespace {

inline std::array<double, 3> cross(const std::array<double, 3>& x,
                                   const std::array<double, 3>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

inline double dot3(const std::array<double, 3>& x, const std::array<double, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

// rotate m about axis omega by angle |omega| dt, exactly norm-preserving
std::array<double, 3> rotate(const std::array<double, 3>& m, const std::array<double, 3>& om,
                             double dt) {
    double w = std::sqrt(dot3(om, om));
    if (w * dt == 0.0) return m;
    std::array<double, 3> u = {om[0] / w, om[1] / w, om[2] / w};
    double th = w * dt, c = std::cos(th), s = std::sin(th);
    std::array<double, 3> uxm = cross(u, m);
    double um = dot3(u, m);
    return {m[0] * c + uxm[0] * s + u[0] * um * (1.0 - c),
            m[1] * c + uxm[1] * s + u[1] * um * (1.0 - c),
            m[2] * c + uxm[2] * s + u[2] * um * (1.0 - c)};
}

inline std::array<double, 3> precession_axis(const std::array<double, 3>& m,
                                             const std::array<double, 3>& b, double lambda) {
    std::array<double, 3> mxb = cross(m, b);
    return {2.0 * (b[0] + lambda * mxb[0]), 2.0 * (b[1] + lambda * mxb[1]),
            2.0 * (b[2] + lambda * mxb[2])};
}

}  // namespace

std::array<double, 3> aligned_moment(const DriveParams& p) {
    std::array<double, 3> b = bloch_field(p, 0.0);
    double n = std::sqrt(dot3(b, b));
    if (n == 0.0) return {0.0, 0.0, 1.0};
    return {b[0] / n, b[1] / n, b[2] / n};
}

ClassicalTrajectory classical_llg(const DriveParams& p, const std::array<double, 3>& m0,
                                  double lambda, int n_periods, int steps_per_period,
                                  int samples_per_period) {
    p.validate();
    if (n_periods < 1) throw std::invalid_argument("n_periods must be >= 1");
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    if (samples_per_period < 1 || steps_per_period % samples_per_period != 0)
        throw std::invalid_argument("steps_per_period must be a positive multiple of samples_per_period");

    double tau = p.period();
    double dt = tau / steps_per_period;
    int chunk = steps_per_period / samples_per_period;

    ClassicalTrajectory tr;
    tr.tau = tau;
    tr.n_periods = n_periods;
    tr.samples_per_period = samples_per_period;
    int n_total = n_periods * samples_per_period + 1;
    tr.times.reserve(n_total);
    tr.moment.reserve(n_total);
    tr.e_ex.reserve(n_total);

    std::array<double, 3> m = m0;
    auto record = [&](double t) {
        std::array<double, 3> b = bloch_field(p, t);
        tr.times.push_back(t);
        tr.moment.push_back(m);
        tr.e_ex.push_back(std::sqrt(dot3(b, b)) - dot3(m, b));
        tr.max_norm_defect = std::max(tr.max_norm_defect, std::abs(std::sqrt(dot3(m, m)) - 1.0));
    };

    record(0.0);
    long total_steps = static_cast<long>(n_periods) * steps_per_period;
    for (long k = 0; k < total_steps; ++k) {
        // midpoint field twice: once at the current moment, once at the
        // half-rotated moment, then the full rotation from the start point
        double t_mid = (k + 0.5) * dt;
        std::array<double, 3> b = bloch_field(p, t_mid);
        std::array<double, 3> om1 = precession_axis(m, b, lambda);
        std::array<double, 3> m_half = rotate(m, om1, 0.5 * dt);
        std::array<double, 3> om2 = precession_axis(m_half, b, lambda);
        m = rotate(m, om2, dt);
        if ((k + 1) % chunk == 0) record((k + 1) * dt);
    }
    return tr;
}

int settling_period(const std::vector<double>& e_ex, int samples_per_period, double tol) {
    int n_periods = static_cast<int>((e_ex.size() - 1) / samples_per_period);
    int last = -1;
    for (int n = 0; n + 1 < n_periods; ++n) {
        double diff = 0.0;
        for (int k = 0; k < samples_per_period; ++k) {
            int i = n * samples_per_period + k;
            diff = std::max(diff, std::abs(e_ex[i + samples_per_period] - e_ex[i]));
        }
        if (diff >= tol) last = n;
    }
    return last + 1;
}

int count_beat_maxima(const std::vector<double>& e_ex, int samples_per_period, int settle,
                      double frac, int min_separation) {
    int n_periods = static_cast<int>((e_ex.size() - 1) / samples_per_period);
    int limit = (settle > 0) ? std::min(settle, n_periods) : n_periods;
    if (limit < 3) return 0;

    std::vector<double> peak(limit, 0.0);
    for (int n = 0; n < limit; ++n)
        for (int k = 0; k < samples_per_period; ++k)
            peak[n] = std::max(peak[n], e_ex[n * samples_per_period + k]);
    double global = *std::max_element(peak.begin(), peak.end());

    int count = 0, last_at = -min_separation - 1;
    for (int n = 1; n + 1 < limit; ++n) {
        if (peak[n] >= peak[n - 1] && peak[n] >= peak[n + 1] && peak[n] > frac * global) {
            if (n - last_at > min_separation) ++count;
            last_at = n;
        }
    }
    return count;
}

}  // namespace floq
