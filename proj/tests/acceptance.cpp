// acceptance checks for the driven spin-1/2 toolbox
//
// usage: acceptance [N]   runs criterion N (1..10), or all of them without an
// argument; prints one PASS/FAIL line per criterion plus clause details, and
// exits nonzero if any executed criterion failed

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "floq/dissipation.hpp"
#include "floq/dynamics.hpp"
#include "floq/floquet.hpp"
#include "floq/ladder.hpp"
#include "floq/propagator.hpp"

using namespace floq;

namespace {

int clauses_failed = 0;

void clause(bool ok, const char* fmt, ...) {
    if (!ok) ++clauses_failed;
    std::printf("    [%s] ", ok ? "ok" : "FAIL");
    va_list args;
    va_start(args, fmt);
    std::vprintf(fmt, args);
    va_end(args);
    std::printf("\n");
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    unsigned hc = std::thread::hardware_concurrency();
    int threads = std::min<int>(hc > 0 ? static_cast<int>(hc) : 4, std::max(n, 1));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
        pool.emplace_back([&]() {
            while (true) {
                int j = next.fetch_add(1);
                if (j >= n) break;
                fn(j);
            }
        });
    for (auto& th : pool) th.join();
}

DriveParams reference_drive(DriveForm form) {
    DriveParams p;  // delta = epsilon = 1, amplitude = 2
    p.form = form;
    return p;
}

double median(std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
}

// ---------------------------------------------------------------- criterion 1
// folded quasi-energies from the propagator match the extended-zone
// eigenproblem to 1e-8 across a 50-point frequency grid, and the distance to
// the folded period-averaged level shrinks as the drive slows down
bool criterion_1() {
    const int n = 50;
    std::vector<double> diff(n);
    std::vector<int> bad(n, 0);
    DriveParams base = reference_drive(DriveForm::SineX);
    parallel_for(n, [&](int i) {
        DriveParams p = base;
        p.omega0 = 0.1 + 0.9 * i / (n - 1);
        FloquetSolution sol = floquet_diagonalize(p);
        ShirleyResult sh = shirley_quasienergies(p);
        diff[i] = std::abs(sol.mu_pos - sh.mu_pos);
        bad[i] = sh.converged ? 0 : 1;
    });
    double worst = *std::max_element(diff.begin(), diff.end());
    int unconverged = 0;
    for (int b : bad) unconverged += b;
    clause(worst <= 1e-8, "two-method agreement: max |mu difference| = %.3e (tol 1e-8)", worst);
    clause(unconverged == 0, "extended-zone truncation converged at all %d grid points", n);

    double d[3];
    double ws[3] = {0.2, 0.15, 0.1};
    for (int i = 0; i < 3; ++i) {
        DriveParams p = base;
        p.omega0 = ws[i];
        FloquetSolution sol = floquet_diagonalize(p);
        d[i] = std::abs(sol.mu_pos - fold(adiabatic_mu(p), p.omega0));
    }
    clause(d[0] > d[1] && d[1] > d[2],
           "adiabatic tracking tightens: |mu - fold(mu_ad)| = %.3e, %.3e, %.3e at w0 = 0.2, "
           "0.15, 0.1",
           d[0], d[1], d[2]);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 2
// the "+" mode follows the instantaneous ground state away from the crossing
// (overlap within 1e-3 of 1 at w0 = 0.19 and of 0 at w0 = 0.20) and hands over
// through 1/2 exactly once inside the located crossing bracket
bool criterion_2() {
    DriveParams p = reference_drive(DriveForm::CosineY);
    auto overlap_at = [&](double w) {
        DriveParams q = p;
        q.omega0 = w;
        FloquetSolution sol = floquet_diagonalize(q);
        return ground_overlap(sol, q);
    };
    double ov19 = overlap_at(0.19);
    double ov20 = overlap_at(0.20);
    clause(std::abs(1.0 - ov19) <= 1e-3, "overlap(0.19) = %.7f, within 1e-3 of 1", ov19);
    clause(ov20 <= 1e-3, "overlap(0.20) = %.3e, within 1e-3 of 0", ov20);

    std::vector<Resonance> res = locate_resonances(p, 0.19, 0.20, 101);
    bool one = res.size() == 1;
    clause(one, "exactly one crossing bracket located (%zu)", res.size());
    if (!one) return clauses_failed == 0;

    int crossings = 0;
    const int m = 200;
    double prev = overlap_at(res[0].bracket_lo) - 0.5;
    for (int i = 1; i <= m; ++i) {
        double w = res[0].bracket_lo + (res[0].bracket_hi - res[0].bracket_lo) * i / m;
        double cur = overlap_at(w) - 0.5;
        if (prev == 0.0) prev = cur;
        if (prev * cur < 0.0) ++crossings;
        if (cur != 0.0) prev = cur;
    }
    clause(crossings == 1, "overlap crosses 1/2 exactly once inside the bracket (%d crossings)",
           crossings);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 3
// a single quasi-degeneracy sits in [0.19, 0.20] at w0* = 0.194859 +- 1e-4 and
// is quasi-degenerate to 1e-4 in the folded gap
bool criterion_3() {
    DriveParams p = reference_drive(DriveForm::SineX);
    std::vector<Resonance> res = locate_resonances(p, 0.19, 0.20, 101);
    clause(res.size() == 1, "exactly one quasi-degeneracy found (%zu)", res.size());
    if (res.empty()) return clauses_failed == 0;

    double w_star = res[0].omega0_star;
    clause(std::abs(w_star - 0.194859) <= 1e-4, "located at w0* = %.9f (ref 0.194859 +- 1e-4)",
           w_star);

    double gap = res[0].gap;
    clause(gap < 1e-4,
           "folded gap at the minimum = %.6e (ceiling 1e-4); this avoided crossing keeps a "
           "finite splitting an order of magnitude above the ceiling",
           gap);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 4
// slow-drive time evolution: off the crossing the excitation energy stays below
// 0.02 for 3000 periods; on the crossing it grows by over 50x and its
// stroboscopic envelope beats at the folded gap frequency within 2 percent
bool criterion_4() {
    DriveParams p19 = reference_drive(DriveForm::CosineY);
    p19.omega0 = 0.19;
    Vec2 g19 = instantaneous_spectrum(p19, 0.0).ground;
    Trajectory off = evolve_unitary(p19, g19, 3000);

    DriveParams pr = p19;
    pr.omega0 = 0.194859;
    Vec2 gr = instantaneous_spectrum(pr, 0.0).ground;
    Trajectory on = evolve_unitary(pr, gr, 3000);

    clause(off.max_e_ex <= 0.02,
           "off-crossing containment: max e_ex(w0=0.19) = %.5f (ceiling 0.02); the ceiling is "
           "exceeded by ~13%%",
           off.max_e_ex);
    clause(on.max_e_ex >= 50.0 * off.max_e_ex,
           "on-crossing breakdown: max e_ex(w0=0.194859) = %.4f, %.0fx the off-crossing value "
           "(floor 50x)",
           on.max_e_ex, on.max_e_ex / off.max_e_ex);

    BeatResult beat = beat_frequency(on.strobe_e_ex, on.tau);
    FloquetSolution sol = floquet_diagonalize(pr);
    double gap = folded_gap(sol);
    bool freq_ok = beat.found && std::abs(beat.omega - gap) <= 0.02 * gap;
    clause(freq_ok, "beat frequency %.6e vs folded gap %.6e (off by %.2f%%, tol 2%%)", beat.omega,
           gap, beat.found ? 100.0 * std::abs(beat.omega - gap) / gap : -1.0);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 5
// the band-ladder evolution reproduces the direct propagation: fidelity at
// least 1 - 1e-6 over 50 periods at both drive frequencies, with the window
// growing automatically from the requested 32 sites
bool criterion_5() {
    for (double w : {0.19, 0.194859}) {
        DriveParams p = reference_drive(DriveForm::SineX);
        p.omega0 = w;
        LadderEvolution ev = evolve_ladder(p, 50, 32, 64);

        std::vector<Mat2> us = sample_period(p, 4096, 64);
        Vec2 psi = instantaneous_spectrum(p, 0.0).ground;
        double worst = 1.0;
        for (size_t s = 0; s < ev.times.size(); ++s) {
            Vec2 rec = reconstruct_state(ev, p, static_cast<int>(s), nullptr);
            int k = static_cast<int>(s % 64);
            Vec2 direct = us[k] * psi;
            if (k == 63 && s + 1 < ev.times.size()) psi = us.back() * psi;
            worst = std::min(worst, std::norm(dot(normalized(direct), rec)));
        }
        clause(ev.valid && ev.half_width > 32,
               "w0 = %.6f: window auto-doubled 32 -> %d, max edge weight %.2e", w, ev.half_width,
               ev.max_edge_weight);
        clause(worst >= 1.0 - 1e-6, "w0 = %.6f: min fidelity vs direct propagation = 1 - %.2e",
               w, 1.0 - worst);
    }
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 6
// with the lower band fully occupied the semiclassical energy law integrates
// onto the adiabatic band track within 1e-4 over five periods
bool criterion_6() {
    DriveParams p = reference_drive(DriveForm::SineX);
    p.omega0 = 0.19;
    int steps = 5 * 1024;
    double t_final = 5.0 * p.period();
    std::vector<double> e = semiclassical_energy(p, t_final, steps, [](double) { return -1.0; });
    double worst = 0.0;
    for (int k = 0; k <= steps; ++k) {
        double t = t_final * k / steps;
        double track = -std::hypot(p.delta, p.epsilon + p.amplitude * std::sin(p.omega0 * t));
        worst = std::max(worst, std::abs(e[k] - track));
    }
    clause(worst <= 1e-4, "max |E(t) - band track| = %.3e over 5 periods (tol 1e-4)", worst);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 7
// weak two-photon crossing: the located frequency sits within 1e-3 of the
// second-order prediction, population transfer exceeds 0.9, and the fitted
// oscillation frequency matches the A^2/w0 reference scale within 10 percent
bool criterion_7() {
    DriveParams p = reference_drive(DriveForm::SineX);
    p.amplitude = 0.05;

    ResonancePrediction pred = predict_resonance(p, 2);
    std::vector<Resonance> res = locate_resonances(p, 1.40, 1.43, 200);
    clause(res.size() == 1, "exactly one crossing in [1.40, 1.43] (%zu)", res.size());
    if (res.empty()) return clauses_failed == 0;
    double w_star = res[0].omega0_star;
    clause(std::abs(w_star - pred.omega0_star) <= 1e-3,
           "located w0* = %.10f vs predicted 2E/m = %.10f (tol 1e-3)", w_star, pred.omega0_star);

    p.omega0 = w_star;
    LadderEvolution ev = evolve_ladder(p, 3500, 32, 1);
    double max_transfer = -1.0;
    for (size_t i = 0; i < ev.p_plus.size(); ++i)
        max_transfer = std::max(max_transfer, ev.p_plus[i] - ev.p_minus[i]);
    clause(max_transfer >= 0.9, "peak population transfer p_plus - p_minus = %.5f (floor 0.9)",
           max_transfer);

    RabiFit fit = rabi_fit(ev.p_plus, ev.tau);
    double ref = pred.omega_l;  // A^2 / w0 reference scale
    clause(std::abs(fit.omega - ref) <= 0.1 * ref,
           "fitted oscillation %.6e vs A^2/w0 = %.6e (off by %.1f%%, tol 10%%); the measured "
           "splitting sits at half the reference scale",
           fit.omega, ref, 100.0 * std::abs(fit.omega - ref) / ref);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 8
// damped classical moment: |M| conserved to 1e-8 over ten thousand periods,
// the settled cycle is period-locked to 1e-6 for every damping value, settling
// shrinks monotonically with the damping strength, and on the crossing weak
// damping shows at least two envelope maxima before settling
bool criterion_8() {
    DriveParams p = reference_drive(DriveForm::CosineY);
    p.omega0 = 0.19;
    std::array<double, 3> m0 = aligned_moment(p);

    ClassicalTrajectory long_run = classical_llg(p, m0, 0.01, 10000);
    clause(long_run.max_norm_defect <= 1e-8,
           "|M| conserved over 10000 periods: max defect %.2e (tol 1e-8)",
           long_run.max_norm_defect);

    double lams[3] = {0.001, 0.01, 0.1};
    int settle[3];
    double lock[3];
    for (int i = 0; i < 3; ++i) {
        ClassicalTrajectory tr = classical_llg(p, m0, lams[i], 300);
        int spp = tr.samples_per_period;
        settle[i] = settling_period(tr.e_ex, spp);
        size_t last = tr.e_ex.size() - 1;
        double worst = 0.0;
        for (size_t k = last - spp; k < last; ++k)
            worst = std::max(worst, std::abs(tr.e_ex[k] - tr.e_ex[k - spp]));
        lock[i] = worst;
    }
    clause(lock[0] <= 1e-6 && lock[1] <= 1e-6 && lock[2] <= 1e-6,
           "late-time cycle is period-locked: max |e(t+tau) - e(t)| = %.1e, %.1e, %.1e "
           "(tol 1e-6)",
           lock[0], lock[1], lock[2]);
    clause(settle[0] > settle[1] && settle[1] > settle[2],
           "settling periods %d > %d > %d for lambda = 0.001, 0.01, 0.1", settle[0], settle[1],
           settle[2]);

    DriveParams pr = p;
    pr.omega0 = 0.194859;
    ClassicalTrajectory tr = classical_llg(pr, aligned_moment(pr), 0.001, 1500);
    int settle_r = settling_period(tr.e_ex, tr.samples_per_period);
    int maxima = count_beat_maxima(tr.e_ex, tr.samples_per_period, settle_r);
    clause(maxima >= 2,
           "on-crossing envelope maxima before settling = %d (need >= 2, settling period %d); "
           "at lambda = 0.001 the moment locks to a stationary cycle without beats",
           maxima, settle_r);
    return clauses_failed == 0;
}

// ---------------------------------------------------------------- criterion 9
// dissipative steady-state sweep at T = 0, 0.01, 1 over w0 in [0.15, 0.6]:
// populations are bit-identical under doubling of the coupling; T = 0 and
// T = 0.01 coincide to 1e-6; excitation peaks sit on folded-gap minima;
// off-peak excitation stays below 1e-3 and grows with temperature off-peak
bool criterion_9() {
    DriveParams p = reference_drive(DriveForm::CosineY);
    std::vector<double> grid = sweep_grid(p, 0.15, 0.6, 600, true);

    double temps[3] = {0.0, 0.01, 1.0};
    std::vector<SweepRow> rows[3];
    for (int t = 0; t < 3; ++t) {
        BathParams bath;
        bath.temperature = temps[t];
        rows[t] = sweep_steady_state(p, bath, grid, 0);
    }

    size_t n = grid.size();
    bool errors = false;
    for (int t = 0; t < 3; ++t)
        for (const SweepRow& r : rows[t])
            if (!r.error.empty()) errors = true;
    clause(!errors, "all %zu rows across three temperatures solved", 3 * n);

    // coupling strength cancels from the population ratio exactly
    std::vector<double> sub(grid.begin(), grid.begin() + std::min<size_t>(n, 40));
    BathParams bath_a, bath_b;
    bath_a.temperature = bath_b.temperature = 0.01;
    bath_a.gamma = 0.01;
    bath_b.gamma = 0.02;
    std::vector<SweepRow> ra = sweep_steady_state(p, bath_a, sub, 0);
    std::vector<SweepRow> rb = sweep_steady_state(p, bath_b, sub, 0);
    bool bitwise = true;
    for (size_t i = 0; i < sub.size(); ++i)
        if (ra[i].rho_pp != rb[i].rho_pp) bitwise = false;
    clause(bitwise, "rho_pp bit-identical under gamma doubling on a %zu-point subgrid",
           sub.size());

    // sorted view for the shape clauses
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return grid[a] < grid[b]; });
    std::vector<double> gap(n), e0(n), e001(n), e1(n);
    for (size_t i = 0; i < n; ++i) {
        gap[i] = rows[0][order[i]].gap;
        e0[i] = rows[0][order[i]].e_ex;
        e001[i] = rows[1][order[i]].e_ex;
        e1[i] = rows[2][order[i]].e_ex;
    }

    double cold_diff = 0.0;
    for (size_t i = 0; i < n; ++i) cold_diff = std::max(cold_diff, std::abs(e0[i] - e001[i]));
    clause(cold_diff <= 1e-6,
           "T = 0 vs T = 0.01 indistinguishable: max |diff| = %.3e (tol 1e-6); the kernel keeps "
           "a finite thermal response at T = 0.01",
           cold_diff);

    double med = median(e0);
    std::vector<size_t> peaks, minima;
    for (size_t i = 1; i + 1 < n; ++i) {
        if (e0[i] >= e0[i - 1] && e0[i] >= e0[i + 1] && e0[i] > 2.0 * med) peaks.push_back(i);
        if (gap[i] <= gap[i - 1] && gap[i] <= gap[i + 1]) minima.push_back(i);
    }
    size_t matched = 0;
    for (size_t pk : peaks) {
        bool hit = false;
        for (size_t mn : minima)
            if (std::llabs(static_cast<long long>(pk) - static_cast<long long>(mn)) <= 1)
                hit = true;
        if (hit) ++matched;
    }
    clause(!peaks.empty() && matched == peaks.size(),
           "every excitation peak sits on a folded-gap minimum (%zu of %zu)", matched,
           peaks.size());

    std::vector<char> mask(n, 0);
    for (size_t pk : peaks)
        for (long long i = static_cast<long long>(pk) - 5; i <= static_cast<long long>(pk) + 5;
             ++i)
            if (i >= 0 && i < static_cast<long long>(n)) mask[i] = 1;
    double off_max = 0.0;
    double off_w = 0.0;
    bool monotone = true;
    for (size_t i = 0; i < n; ++i) {
        if (mask[i]) continue;
        if (e0[i] > off_max) {
            off_max = e0[i];
            off_w = grid[order[i]];
        }
        if (!(e1[i] >= e001[i] - 1e-9 && e001[i] >= e0[i] - 1e-9)) monotone = false;
    }
    clause(off_max <= 1e-3,
           "off-peak T = 0 excitation: max %.4f at w0 = %.5f (ceiling 1e-3); the cold steady "
           "state keeps order-one excitation away from the crossings at larger w0",
           off_max, off_w);
    clause(monotone, "off-peak excitation grows pointwise with temperature");
    return clauses_failed == 0;
}

// --------------------------------------------------------------- criterion 10
// module invariants on randomized parameter draws: propagator unitarity, norm
// conservation, the harmonic-weight Parseval identity, fold idempotence, band
// population completeness, and the minority population bound
bool criterion_10() {
    std::mt19937_64 rng(20260816ull);
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto random_drive = [&](int k, double w_lo, double w_hi) {
        DriveParams p;
        p.delta = uni(0.3, 1.5);
        p.epsilon = uni(0.3, 1.5);
        p.amplitude = uni(0.2, 2.0);
        p.omega0 = uni(w_lo, w_hi);
        p.form = (k % 2 == 0) ? DriveForm::SineX : DriveForm::CosineY;
        return p;
    };

    double worst_u = 0.0;
    for (int k = 0; k < 20; ++k) {
        Mat2 u = monodromy(random_drive(k, 0.1, 2.0), 4096);
        worst_u = std::max(worst_u, unitarity_defect(u));
    }
    clause(worst_u <= 1e-12,
           "one-period propagator unitarity, 20 draws: max defect %.2e (tol 1e-12)", worst_u);

    double worst_n = 0.0;
    for (int k = 0; k < 5; ++k) {
        DriveParams p = random_drive(k, 0.15, 1.0);
        double th = uni(0.0, 3.141592653589793);
        double ph = uni(0.0, 6.283185307179586);
        Vec2 psi{cplx(std::cos(th / 2), 0.0), std::polar(std::sin(th / 2), ph)};
        Trajectory tr = evolve_unitary(p, psi, 300);
        worst_n = std::max(worst_n, tr.max_norm_defect);
    }
    clause(worst_n <= 1e-10,
           "norm conservation over 300 periods, 5 draws: max defect %.2e (tol 1e-10)", worst_n);

    double worst_p = 0.0;
    for (int k = 0; k < 5; ++k) {
        DriveParams p = random_drive(k, 0.2, 0.8);
        FloquetSolution sol = floquet_diagonalize(p, 4096, 512);
        std::vector<cplx> sig = sigma_z_fourier(sol, 128);
        double sum = 0.0;
        for (const cplx& c : sig) sum += std::norm(c);
        double avg = 0.0;
        for (int j = 0; j < sol.n_samples; ++j) {
            cplx f = std::conj(sol.samples_plus[j].a) * sol.samples_minus[j].a -
                     std::conj(sol.samples_plus[j].b) * sol.samples_minus[j].b;
            avg += std::norm(f);
        }
        avg /= sol.n_samples;
        worst_p = std::max(worst_p, std::abs(sum - avg));
    }
    clause(worst_p <= 1e-9,
           "harmonic weights match the time-averaged cross element, 5 draws: max |diff| %.2e",
           worst_p);

    bool fold_ok = true;
    for (int k = 0; k < 2000; ++k) {
        double w = uni(0.05, 3.0);
        double x = uni(-60.0, 60.0);
        double f = fold(x, w);
        if (!(f > -w / 2 && f <= w / 2 + 1e-12)) fold_ok = false;
        if (fold(f, w) != f) fold_ok = false;
    }
    clause(fold_ok, "fold lands in (-w/2, w/2] and is exactly idempotent on 2000 draws");

    double worst_c = 0.0;
    for (int k = 0; k < 5; ++k) {
        DriveParams p = random_drive(0, 0.3, 1.2);  // band ladder needs the sine form
        LadderEvolution ev = evolve_ladder(p, 10, 32, 16);
        for (size_t j = 0; j < ev.p_plus.size(); ++j)
            worst_c = std::max(worst_c, std::abs(ev.p_plus[j] + ev.p_minus[j] - 1.0));
    }
    clause(worst_c <= 1e-10, "band populations sum to one, 5 draws: max |p+ + p- - 1| = %.2e",
           worst_c);

    bool rho_ok = true;
    double rho_max = 0.0;
    int counted = 0;
    for (int k = 0; k < 15; ++k) {
        DriveParams p = random_drive(k, 0.3, 1.2);
        BathParams bath;
        bath.temperature = (k % 3 == 0) ? 0.0 : uni(0.0, 2.0);
        FloquetSolution sol = floquet_diagonalize(p);
        SteadyState ss = steady_state(sol, p, bath);
        if (ss.degenerate) continue;
        ++counted;
        rho_max = std::max(rho_max, ss.rho_pp);
        if (!(ss.rho_pp >= 0.0 && ss.rho_pp <= 0.5 + 1e-12)) rho_ok = false;
    }
    clause(rho_ok && counted > 10,
           "steady populations stay in the minority half on %d draws (max %.6f)", counted,
           rho_max);
    return clauses_failed == 0;
}

struct Criterion {
    int id;
    const char* summary;
    bool (*fn)();
};

const Criterion criteria[] = {
    {1, "quasi-energy spectrum: two independent methods agree and track the adiabatic level",
     criterion_1},
    {2, "mode-ground overlap saturates off the crossing and hands over once across it",
     criterion_2},
    {3, "a single quasi-degeneracy near w0 = 0.194859, quasi-degenerate to 1e-4",
     criterion_3},
    {4, "slow-drive evolution: containment off the crossing, breakdown and gap-rate beats on it",
     criterion_4},
    {5, "band-ladder evolution reproduces direct propagation through window auto-scaling",
     criterion_5},
    {6, "semiclassical energy law integrates onto the adiabatic band track", criterion_6},
    {7, "weak-drive two-photon crossing: location, full transfer, and oscillation scale",
     criterion_7},
    {8, "damped moment: norm, period locking, settling order, on-crossing beats",
     criterion_8},
    {9, "steady-state sweep: coupling invariance, peaks on gap minima, cold and off-peak limits",
     criterion_9},
    {10, "module invariants on randomized parameter draws", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 10) {
            std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
            return 2;
        }
    }

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        clauses_failed = 0;
        std::printf("criterion %d: %s\n", c.id, c.summary);
        auto t0 = std::chrono::steady_clock::now();
        bool ok = c.fn();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[criterion %d] %s (%.1fs)\n", c.id, ok ? "PASS" : "FAIL", secs);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
