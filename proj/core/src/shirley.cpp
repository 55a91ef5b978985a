#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "floq/floquet.hpp"

namespace floq {

namespace {

// central folded doublet of the extended-zone block matrix at truncation n_max
std::pair<double, double> central_doublet(const DriveParams& p, int n_max) {
    int nb = 2 * n_max + 1;
    int dim = 2 * nb;
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);

    Mat2 h0{cplx(p.epsilon), cplx(p.delta), cplx(p.delta), cplx(-p.epsilon)};
    if (p.form == DriveForm::CosineY)
        h0 = Mat2{cplx(p.epsilon), cplx(0.0, -p.delta), cplx(0.0, p.delta), cplx(-p.epsilon)};

    // first drive harmonic acting on sigma_z
    cplx h1_z = (p.form == DriveForm::SineX) ? cplx(0.0, 0.5 * p.amplitude)
                                             : cplx(0.5 * p.amplitude, 0.0);

    for (int ib = 0; ib < nb; ++ib) {
        int n = ib - n_max;
        int r = 2 * ib;
        k(r, r) = h0.m00 - cplx(n * p.omega0);
        k(r, r + 1) = h0.m01;
        k(r + 1, r) = h0.m10;
        k(r + 1, r + 1) = h0.m11 - cplx(n * p.omega0);
        if (ib + 1 < nb) {
            int s = 2 * (ib + 1);
            k(r, s) = h1_z;
            k(r + 1, s + 1) = -h1_z;
            k(s, r) = std::conj(h1_z);
            k(s + 1, r + 1) = -std::conj(h1_z);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(k, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();

    // two eigenvalues closest to zero form the physical doublet
    std::vector<double> vals(ev.data(), ev.data() + ev.size());
    std::partial_sort(vals.begin(), vals.begin() + 2, vals.end(),
                      [](double x, double y) { return std::abs(x) < std::abs(y); });
    double a = fold(vals[0], p.omega0);
    double b = fold(vals[1], p.omega0);
    if (a < b) std::swap(a, b);
    return {a, b};
}

}  // namespace

ShirleyResult shirley_quasienergies(const DriveParams& p, int n_max) {
    p.validate();
    if (n_max <= 0) {
        double reach = 3.0 * (p.amplitude + p.level_scale()) / p.omega0;
        n_max = std::max(8, static_cast<int>(std::ceil(reach)));
    }

    auto [a, b] = central_doublet(p, n_max);
    ShirleyResult res{a, b, n_max, false};
    for (int iter = 0; iter < 32; ++iter) {
        int next = n_max + 4;
        auto [a2, b2] = central_doublet(p, next);
        double move = std::max(std::abs(a2 - a), std::abs(b2 - b));
        res = {a2, b2, next, move < 1e-8};
        a = a2;
        b = b2;
        n_max = next;
        if (move < 1e-10) break;
    }
    return res;
}

}  // namespace floq
