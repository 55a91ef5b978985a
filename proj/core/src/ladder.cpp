#include "floq/ladder.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace floq {

namespace {

// index of band component (0 = u, 1 = v) at site n
inline int idx(int n, int band, int w) { return 2 * (n + w) + band; }

Eigen::MatrixXcd ladder_matrix(const DriveParams& p, int w) {
    double e_scale = p.level_scale();
    double a = p.amplitude / (2.0 * e_scale);
    cplx iae(0.0, a * p.epsilon);
    cplx iad(0.0, a * p.delta);

    int dim = 2 * (2 * w + 1);
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = -w; n <= w; ++n) {
        k(idx(n, 0, w), idx(n, 0, w)) = e_scale - n * p.omega0;
        k(idx(n, 1, w), idx(n, 1, w)) = -e_scale - n * p.omega0;
        if (n + 1 <= w) {
            k(idx(n, 0, w), idx(n + 1, 0, w)) = -iae;
            k(idx(n, 0, w), idx(n + 1, 1, w)) = iad;
            k(idx(n, 1, w), idx(n + 1, 1, w)) = iae;
            k(idx(n, 1, w), idx(n + 1, 0, w)) = iad;
        }
        if (n - 1 >= -w) {
            k(idx(n, 0, w), idx(n - 1, 0, w)) = iae;
            k(idx(n, 0, w), idx(n - 1, 1, w)) = -iad;
            k(idx(n, 1, w), idx(n - 1, 1, w)) = -iae;
            k(idx(n, 1, w), idx(n - 1, 0, w)) = -iad;
        }
    }
    return k;
}

LadderEvolution run_once(const DriveParams& p, int n_periods, int w, int samples_per_period) {
    Eigen::MatrixXcd k = ladder_matrix(p, w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(k);
    const Eigen::VectorXd& lam = solver.eigenvalues();
    const Eigen::MatrixXcd& vec = solver.eigenvectors();

    int dim = 2 * (2 * w + 1);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(dim);
    psi0(idx(0, 1, w)) = 1.0;  // lower band, central site
    Eigen::VectorXcd coef = vec.adjoint() * psi0;

    LadderEvolution ev;
    ev.tau = p.period();
    ev.n_periods = n_periods;
    ev.samples_per_period = samples_per_period;
    ev.half_width = w;

    int n_total = n_periods * samples_per_period;
    ev.times.reserve(n_total + 1);
    ev.p_plus.reserve(n_total + 1);
    ev.p_minus.reserve(n_total + 1);
    ev.amplitudes.reserve(n_total + 1);

    for (int s = 0; s <= n_total; ++s) {
        double t = ev.tau * s / samples_per_period;
        Eigen::VectorXcd phase(dim);
        for (int j = 0; j < dim; ++j) phase(j) = std::exp(cplx(0.0, -lam(j) * t)) * coef(j);
        Eigen::VectorXcd psi = vec * phase;

        double pu = 0.0, pv = 0.0;
        for (int n = -w; n <= w; ++n) {
            pu += std::norm(psi(idx(n, 0, w)));
            pv += std::norm(psi(idx(n, 1, w)));
        }
        double edge = std::norm(psi(idx(-w, 0, w))) + std::norm(psi(idx(-w, 1, w))) +
                      std::norm(psi(idx(w, 0, w))) + std::norm(psi(idx(w, 1, w)));
        ev.max_edge_weight = std::max(ev.max_edge_weight, edge);

        ev.times.push_back(t);
        ev.p_plus.push_back(pu);
        ev.p_minus.push_back(pv);
        ev.amplitudes.emplace_back(psi.data(), psi.data() + dim);
    }
    ev.valid = ev.max_edge_weight < 1e-6;
    return ev;
}

}  // namespace

LadderEvolution evolve_ladder(const DriveParams& p, int n_periods, int half_width,
                              int samples_per_period) {
    p.validate();
    if (p.form != DriveForm::SineX)
        throw std::invalid_argument("ladder picture is defined for DriveForm::SineX");
    if (n_periods < 1) throw std::invalid_argument("n_periods must be >= 1");
    if (half_width < 1) throw std::invalid_argument("half_width must be >= 1");
    if (p.level_scale() == 0.0) throw std::invalid_argument("level_scale must be > 0");

    int w = half_width;
    LadderEvolution ev = run_once(p, n_periods, w, samples_per_period);
    while (!ev.valid && w < 1024) {
        w *= 2;
        ev = run_once(p, n_periods, w, samples_per_period);
    }
    ev.requested_half_width = half_width;
    return ev;
}

Vec2 reconstruct_state(const LadderEvolution& ev, const DriveParams& p, int sample_index,
                       double* deviation) {
    const std::vector<cplx>& amp = ev.amplitudes.at(sample_index);
    double t = ev.times.at(sample_index);
    int w = ev.half_width;

    // undo the band rotation, then resum the site ladder at this time
    double th = std::atan2(p.delta, p.epsilon);
    double c = std::cos(0.5 * th), s = std::sin(0.5 * th);
    Vec2 sum{cplx(0.0), cplx(0.0)};
    for (int n = -w; n <= w; ++n) {
        cplx u = amp[idx(n, 0, w)], v = amp[idx(n, 1, w)];
        Vec2 site{c * u - s * v, s * u + c * v};
        cplx ph = std::exp(cplx(0.0, -n * p.omega0 * t));
        sum = sum + ph * site;
    }
    if (deviation) *deviation = std::abs(sum.norm() - 1.0);
    return normalized(sum);
}

std::pair<double, double> band_dispersion(const DriveParams& p, double q) {
    double e = std::hypot(p.delta, p.epsilon + p.amplitude * std::sin(q));
    return {-e, e};
}

std::vector<double> semiclassical_energy(const DriveParams& p, double t_final, int steps,
                                         const std::function<double(double)>& imbalance) {
    p.validate();
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    double dt = t_final / steps;
    auto rate = [&](double t) {
        double q = p.omega0 * t;
        double h = p.epsilon + p.amplitude * std::sin(q);
        double eq = std::hypot(p.delta, h);
        double slope = (eq > 0.0) ? p.amplitude * std::cos(q) * h / eq : 0.0;
        return p.omega0 * imbalance(t) * slope;
    };
    std::vector<double> e(steps + 1);
    e[0] = -p.level_scale();
    double prev = rate(0.0);
    for (int k = 1; k <= steps; ++k) {
        double cur = rate(k * dt);
        e[k] = e[k - 1] + 0.5 * dt * (prev + cur);
        prev = cur;
    }
    return e;
}

ResonancePrediction predict_resonance(const DriveParams& p, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    double e2 = p.epsilon * p.epsilon + p.delta * p.delta;
    ResonancePrediction r;
    r.m = m;
    r.omega0_star = 2.0 * std::sqrt(e2) / m;
    r.imbalance_max = 8.0 * p.epsilon * p.epsilon * p.delta * p.delta / (e2 * e2) - 1.0;
    if (m == 2) {
        double a2 = p.amplitude * p.amplitude;
        r.delta_e = (p.epsilon * p.epsilon - p.delta * p.delta) * a2 / (e2 * r.omega0_star);
        r.coupling = 2.0 * p.epsilon * p.delta * a2 / (e2 * r.omega0_star);
        r.omega_l = a2 / r.omega0_star;
    } else {
        r.delta_e = r.coupling = r.omega_l = std::nan("");
    }
    return r;
}

namespace {

// least-squares residual of c0 + c1 cos(w n tau) + c2 sin(w n tau)
double lin_fit(const std::vector<double>& y, double tau, double w, double* c_out) {
    int n = static_cast<int>(y.size());
    double s[3][3] = {{0}}, b[3] = {0};
    for (int j = 0; j < n; ++j) {
        double basis[3] = {1.0, std::cos(w * j * tau), std::sin(w * j * tau)};
        for (int r = 0; r < 3; ++r) {
            b[r] += basis[r] * y[j];
            for (int c2 = 0; c2 < 3; ++c2) s[r][c2] += basis[r] * basis[c2];
        }
    }
    // 3x3 Gaussian elimination with partial pivoting
    int piv[3] = {0, 1, 2};
    double a[3][4];
    for (int r = 0; r < 3; ++r) {
        for (int c2 = 0; c2 < 3; ++c2) a[r][c2] = s[r][c2];
        a[r][3] = b[r];
    }
    for (int col = 0; col < 3; ++col) {
        int best = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        for (int c2 = 0; c2 < 4; ++c2) std::swap(a[col][c2], a[best][c2]);
        std::swap(piv[col], piv[best]);
        if (a[col][col] == 0.0) return 1e300;
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (int c2 = col; c2 < 4; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    double c[3];
    for (int r = 0; r < 3; ++r) c[r] = a[r][3] / a[r][r];

    double ss = 0.0;
    for (int j = 0; j < n; ++j) {
        double fit = c[0] + c[1] * std::cos(w * j * tau) + c[2] * std::sin(w * j * tau);
        ss += (y[j] - fit) * (y[j] - fit);
    }
    if (c_out)
        for (int r = 0; r < 3; ++r) c_out[r] = c[r];
    return std::sqrt(ss / n);
}

}  // namespace

RabiFit rabi_fit(const std::vector<double>& p_plus_strobe, double tau) {
    int n = static_cast<int>(p_plus_strobe.size());
    if (n < 8) throw std::invalid_argument("need at least 8 stroboscopic samples");

    // seed from the dominant spectral bin of the mean-removed series
    double mean = 0.0;
    for (double v : p_plus_strobe) mean += v;
    mean /= n;
    double best_pw = -1.0;
    int k_star = 1;
    double w_bin = 2.0 * std::numbers::pi / (n * tau);
    for (int k = 1; k <= n / 2; ++k) {
        cplx f(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            f += (p_plus_strobe[j] - mean) * std::exp(cplx(0.0, -2.0 * std::numbers::pi * k * j / n));
        if (std::norm(f) > best_pw) {
            best_pw = std::norm(f);
            k_star = k;
        }
    }

    auto resid = [&](double w) { return lin_fit(p_plus_strobe, tau, w, nullptr); };

    // coarse scan two bins around the seed, then golden refinement
    double lo = std::max(0.25 * w_bin, (k_star - 2.0) * w_bin);
    double hi = (k_star + 2.0) * w_bin;
    int n_scan = 128;
    double w_best = k_star * w_bin, r_best = resid(w_best);
    for (int i = 0; i <= n_scan; ++i) {
        double w = lo + (hi - lo) * i / n_scan;
        double r = resid(w);
        if (r < r_best) {
            r_best = r;
            w_best = w;
        }
    }
    double span = (hi - lo) / n_scan;
    constexpr double invphi = 0.6180339887498949;
    double a = w_best - span, b2 = w_best + span;
    double x1 = b2 - invphi * (b2 - a), x2 = a + invphi * (b2 - a);
    double f1 = resid(x1), f2 = resid(x2);
    while (b2 - a > 1e-10 * w_best) {
        if (f1 < f2) {
            b2 = x2;
            x2 = x1;
            f2 = f1;
            x1 = b2 - invphi * (b2 - a);
            f1 = resid(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b2 - a);
            f2 = resid(x2);
        }
    }
    double w_fit = 0.5 * (a + b2);

    double c[3];
    RabiFit fit;
    fit.residual = lin_fit(p_plus_strobe, tau, w_fit, c);
    fit.omega = w_fit;
    // c0 + c1 cos + c2 sin == offset + amp sin^2(w t / 2 + phase)
    fit.amplitude = 2.0 * std::hypot(c[1], c[2]);
    fit.phase = 0.5 * std::atan2(c[2], -c[1]);
    fit.offset = c[0] - 0.5 * fit.amplitude;
    return fit;
}

}  // namespace floq
