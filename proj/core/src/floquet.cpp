#include "floq/floquet.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "floq/propagator.hpp"

namespace floq {

double fold(double x, double omega0) {
    return x - omega0 * std::ceil(x / omega0 - 0.5);
}

namespace {

struct EigenPair {
    cplx lambda_a, lambda_b;
    Vec2 va;  // eigenvector of lambda_a; vb is its orthogonal complement
    Vec2 vb;
    bool degenerate;
};

// closed-form spectral decomposition of a 2x2 unitary
EigenPair diagonalize_unitary(const Mat2& u) {
    cplx tr = trace(u);
    cplx dt = det(u);
    cplx disc = std::sqrt(tr * tr - 4.0 * dt);
    cplx la = 0.5 * (tr + disc);
    cplx lb = 0.5 * (tr - disc);

    EigenPair ep;
    ep.lambda_a = la;
    ep.lambda_b = lb;
    ep.degenerate = std::abs(la - lb) < 1e-14;

    // null vector of (u - la) from its larger row
    cplx r00 = u.m00 - la, r01 = u.m01;
    cplx r10 = u.m10, r11 = u.m11 - la;
    Vec2 v;
    if (std::norm(r00) + std::norm(r01) >= std::norm(r10) + std::norm(r11))
        v = {r01, -r00};
    else
        v = {r11, -r10};
    if (v.norm() < 1e-30) v = {cplx(1.0), cplx(0.0)};  // u proportional to identity
    v = phase_fixed(normalized(v));
    ep.va = v;
    ep.vb = phase_fixed(Vec2{-std::conj(v.b), std::conj(v.a)});
    return ep;
}

FloquetSolution solve_from_samples(const DriveParams& p, const std::vector<Mat2>& us,
                                   int steps_used) {
    int n_samples = static_cast<int>(us.size()) - 1;
    double tau = p.period();
    EigenPair ep = diagonalize_unitary(us.back());

    double mu_a = fold(-std::arg(ep.lambda_a) / tau, p.omega0);
    double mu_b = fold(-std::arg(ep.lambda_b) / tau, p.omega0);

    FloquetSolution sol;
    sol.omega0 = p.omega0;
    sol.degenerate = ep.degenerate;
    sol.steps_used = steps_used;
    sol.n_samples = n_samples;
    if (mu_a >= mu_b) {
        sol.mu_pos = mu_a;
        sol.mu_minus = mu_b;
        sol.mode_plus = ep.va;
        sol.mode_minus = ep.vb;
    } else {
        sol.mu_pos = mu_b;
        sol.mu_minus = mu_a;
        sol.mode_plus = ep.vb;
        sol.mode_minus = ep.va;
    }

    sol.samples_plus.resize(n_samples + 1);
    sol.samples_minus.resize(n_samples + 1);
    for (int k = 0; k <= n_samples; ++k) {
        double t = tau * k / n_samples;
        cplx ph_p = std::exp(cplx(0.0, sol.mu_pos * t));
        cplx ph_m = std::exp(cplx(0.0, sol.mu_minus * t));
        sol.samples_plus[k] = ph_p * (us[k] * sol.mode_plus);
        sol.samples_minus[k] = ph_m * (us[k] * sol.mode_minus);
    }
    return sol;
}

}  // namespace

FloquetSolution floquet_diagonalize(const DriveParams& p, int steps_per_period, int n_samples) {
    p.validate();
    if (steps_per_period > 0) {
        if (steps_per_period % n_samples != 0)
            throw std::invalid_argument("steps_per_period must be a multiple of n_samples");
        return solve_from_samples(p, sample_period(p, steps_per_period, n_samples),
                                  steps_per_period);
    }

    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    int steps = ((4096 + n_samples - 1) / n_samples) * n_samples;
    FloquetSolution sol = solve_from_samples(p, sample_period(p, steps, n_samples), steps);
    for (int iter = 0; iter < 8; ++iter) {
        int next = steps * 2;
        FloquetSolution ref = solve_from_samples(p, sample_period(p, next, n_samples), next);
        double dmu = std::abs(ref.mu_pos - sol.mu_pos);
        sol = ref;
        steps = next;
        if (dmu < 1e-10) break;
    }
    return sol;
}

double adiabatic_mu(const DriveParams& p) {
    p.validate();
    double tau = p.period();
    auto f = [&](double t) {
        double h = longitudinal(p, t);
        return std::hypot(p.delta, h);
    };
    double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, 0.0, tau, 15, 1e-10);
    return integral / tau;
}

double ground_overlap(const FloquetSolution& sol, const DriveParams& p) {
    InstantSpectrum s = instantaneous_spectrum(p, 0.0);
    return std::norm(dot(sol.mode_plus, s.ground));
}

double folded_gap(const FloquetSolution& sol) {
    return std::abs(fold(2.0 * sol.mu_pos, sol.omega0));
}

double folded_gap_at(const DriveParams& p, double omega0) {
    DriveParams q = p;
    q.omega0 = omega0;
    return folded_gap(floquet_diagonalize(q));
}

namespace {

// golden-section minimum of f on [a, b] to absolute tolerance tol
template <class F>
double golden_min(F f, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<Resonance> locate_resonances(const DriveParams& p, double lo, double hi,
                                         int scan_points, double threshold_frac) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("need 0 < lo < hi");
    if (scan_points < 3) throw std::invalid_argument("scan_points must be >= 3");

    auto gap_at = [&](double w) { return folded_gap_at(p, w); };

    std::vector<double> ws(scan_points), gs(scan_points);
    for (int i = 0; i < scan_points; ++i) {
        ws[i] = lo + (hi - lo) * i / (scan_points - 1);
        gs[i] = gap_at(ws[i]);
    }

    std::vector<Resonance> out;
    for (int i = 1; i + 1 < scan_points; ++i) {
        if (!(gs[i] <= gs[i - 1] && gs[i] <= gs[i + 1])) continue;
        double a = ws[i - 1], b = ws[i + 1];
        double w_star = golden_min(gap_at, a, b, 1e-8);
        double g_star = gap_at(w_star);
        if (threshold_frac > 0.0 && g_star >= threshold_frac * w_star) continue;
        out.push_back({w_star, g_star, a, b});
    }
    return out;
}

}  // namespace floq
