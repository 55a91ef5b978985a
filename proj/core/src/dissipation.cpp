#include "floq/dissipation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "floq/propagator.hpp"

namespace floq {

void BathParams::validate() const {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (!(cutoff > 0.0)) throw std::invalid_argument("cutoff must be > 0");
    if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
}

double spectral_density(double w, const BathParams& bath) {
    double o2 = bath.cutoff * bath.cutoff;
    return (2.0 * bath.gamma / std::numbers::pi) * w * o2 / (w * w + o2);
}

double bose_occupation(double w, const BathParams& bath) {
    if (w == 0.0) throw std::invalid_argument("bose_occupation undefined at w = 0");
    if (bath.temperature == 0.0) return (w > 0.0) ? 0.0 : -1.0;
    double x = w / bath.temperature;
    if (x > 700.0) return 0.0;
    if (x < -700.0) return -1.0;
    return 1.0 / std::expm1(x);
}

double jn_product(double w, const BathParams& bath) {
    if (w == 0.0)
        return (2.0 * bath.gamma / std::numbers::pi) * bath.temperature;
    return spectral_density(w, bath) * bose_occupation(w, bath);
}

double j2n1_product(double w, const BathParams& bath) {
    if (w == 0.0)
        return (4.0 * bath.gamma / std::numbers::pi) * bath.temperature;
    return spectral_density(w, bath) * (2.0 * bose_occupation(w, bath) + 1.0);
}

namespace {

// <x|sigma_z|y>
cplx sigma_z_element(const Vec2& x, const Vec2& y) {
    return std::conj(x.a) * y.a - std::conj(x.b) * y.b;
}

std::vector<cplx> cross_fourier(const std::vector<Vec2>& hi, const std::vector<Vec2>& lo,
                                int n_max) {
    int nt = static_cast<int>(hi.size()) - 1;  // last sample repeats the first
    std::vector<cplx> f(nt);
    for (int j = 0; j < nt; ++j) f[j] = sigma_z_element(hi[j], lo[j]);

    std::vector<cplx> out(2 * n_max + 1);
    for (int n = -n_max; n <= n_max; ++n) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < nt; ++j)
            acc += f[j] * std::exp(cplx(0.0, 2.0 * std::numbers::pi * n * j / nt));
        out[n + n_max] = acc / static_cast<double>(nt);
    }
    return out;
}

struct RateSums {
    double num = 0.0;  // sum J N |sigma_{-n}|^2 at x_n = n w0 + dmu
    double den = 0.0;  // sum J (2N + 1) |sigma_{-n}|^2
};

RateSums rate_sums(const std::vector<cplx>& sig, double omega0, double dmu,
                   const BathParams& bath) {
    int n_max = (static_cast<int>(sig.size()) - 1) / 2;
    RateSums s;
    for (int n = -n_max; n <= n_max; ++n) {
        double w2 = std::norm(sig[-n + n_max]);
        if (w2 == 0.0) continue;
        double x = n * omega0 + dmu;
        s.num += jn_product(x, bath) * w2;
        s.den += j2n1_product(x, bath) * w2;
    }
    return s;
}

}  // namespace

std::vector<cplx> sigma_z_fourier(const FloquetSolution& sol, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (sol.n_samples < 4 * n_max)
        throw std::invalid_argument("mode sampling too coarse: need n_samples >= 4 n_max");
    return cross_fourier(sol.samples_plus, sol.samples_minus, n_max);
}

SteadyState steady_state(const FloquetSolution& sol, const DriveParams& p,
                         const BathParams& bath, int n_max) {
    bath.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    Mat2 h0 = hamiltonian(p, 0.0);
    double h_p = real_expectation(sol.mode_plus, h0);
    double h_m = real_expectation(sol.mode_minus, h0);

    // order the doublet by stroboscopic energy before building decay rates
    const std::vector<Vec2>* hi = &sol.samples_plus;
    const std::vector<Vec2>* lo = &sol.samples_minus;
    double mu_hi = sol.mu_pos, mu_lo = sol.mu_minus;
    double h_hi = h_p, h_lo = h_m;
    if (h_m > h_p) {
        std::swap(hi, lo);
        std::swap(mu_hi, mu_lo);
        std::swap(h_hi, h_lo);
    }

    int cap = sol.n_samples / 4;
    if (n_max > cap) n_max = cap;

    auto rho_at = [&](int nm) {
        std::vector<cplx> sig = cross_fourier(*hi, *lo, nm);
        RateSums s = rate_sums(sig, p.omega0, mu_hi - mu_lo, bath);
        return std::pair<double, double>(s.num, s.den);
    };

    SteadyState ss;
    auto [num, den] = rho_at(n_max);
    bool converged = false;
    while (true) {
        int probe = std::min(n_max + 8, cap);
        if (probe == n_max) break;
        auto [num2, den2] = rho_at(probe);
        double r1 = (den != 0.0) ? num / den : 0.0;
        double r2 = (den2 != 0.0) ? num2 / den2 : 0.0;
        if (std::abs(r2 - r1) < 1e-8) {
            converged = true;
            break;
        }
        n_max = std::min(2 * n_max, cap);
        std::tie(num, den) = rho_at(n_max);
        if (n_max == cap) break;
    }
    ss.n_max_used = n_max;
    ss.converged = converged;

    if (den == 0.0) {
        ss.degenerate = true;
        ss.rho_pp = 0.0;
        ss.rho_mm = 1.0;
        ss.h_plus = h_hi;
        ss.h_minus = h_lo;
        ss.e_ex = h_lo - instantaneous_spectrum(p, 0.0).e_ground;
        return ss;
    }

    double rho_hi = num / den;  // population of the higher-energy mode
    double e_g = instantaneous_spectrum(p, 0.0).e_ground;
    ss.e_ex = rho_hi * h_hi + (1.0 - rho_hi) * h_lo - e_g;

    // minority labeling: "+" is whichever mode holds the smaller population
    if (rho_hi <= 0.5) {
        ss.rho_pp = rho_hi;
        ss.h_plus = h_hi;
        ss.h_minus = h_lo;
    } else {
        ss.rho_pp = 1.0 - rho_hi;
        ss.h_plus = h_lo;
        ss.h_minus = h_hi;
    }
    ss.rho_mm = 1.0 - ss.rho_pp;
    return ss;
}

std::vector<SweepRow> sweep_steady_state(const DriveParams& p, const BathParams& bath,
                                         const std::vector<double>& grid, int threads,
                                         int n_max) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = (hc > 0) ? static_cast<int>(hc) : 4;
    }
    int n_rows = static_cast<int>(grid.size());
    threads = std::min(threads, std::max(n_rows, 1));

    std::vector<SweepRow> rows(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            SweepRow& row = rows[i];
            row.omega0 = grid[i];
            try {
                DriveParams q = p;
                q.omega0 = grid[i];
                FloquetSolution sol = floquet_diagonalize(q);
                SteadyState ss = steady_state(sol, q, bath, n_max);
                row.gap = folded_gap(sol);
                row.rho_pp = ss.rho_pp;
                row.e_ex = ss.e_ex;
            } catch (const std::exception& ex) {
                row.gap = row.rho_pp = row.e_ex = std::nan("");
                row.error = ex.what();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

std::vector<double> sweep_grid(const DriveParams& p, double lo, double hi, int points,
                               bool refine) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("need 0 < lo < hi");
    if (points < 2) throw std::invalid_argument("points must be >= 2");

    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
    if (!refine) return grid;

    // cluster extra points around sharp quasi-degeneracies so the narrow
    // steady-state peaks are not missed by the uniform grid
    std::vector<Resonance> res = locate_resonances(p, lo, hi, points, 0.02);
    const double offs[5] = {-3e-5, -1e-5, 0.0, 1e-5, 3e-5};
    for (const Resonance& r : res)
        for (double d : offs) {
            double w = r.omega0_star + d;
            if (w > lo && w < hi) grid.push_back(w);
        }
    return grid;
}

}  // namespace floq
