#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace floq {

using cplx = std::complex<double>;

// spin-1/2 state (a, b) in the sigma_z basis
struct Vec2 {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};

    double norm_sq() const { return std::norm(a) + std::norm(b); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec2 operator+(const Vec2& x, const Vec2& y) { return {x.a + y.a, x.b + y.b}; }
inline Vec2 operator-(const Vec2& x, const Vec2& y) { return {x.a - y.a, x.b - y.b}; }
inline Vec2 operator*(cplx s, const Vec2& x) { return {s * x.a, s * x.b}; }

// inner product, conjugating the first argument
inline cplx dot(const Vec2& x, const Vec2& y) {
    return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

inline Vec2 normalized(const Vec2& x) {
    double n = x.norm();
    return {x.a / n, x.b / n};
}

// global phase fixed so the first component above threshold is real positive
inline Vec2 phase_fixed(const Vec2& x) {
    double n = x.norm();
    cplx lead = (std::abs(x.a) > 1e-12 * n) ? x.a : x.b;
    cplx ph = std::conj(lead) / std::abs(lead);
    return {ph * x.a, ph * x.b};
}

inline std::array<double, 3> spin_expectation(const Vec2& x) {
    cplx z = std::conj(x.a) * x.b;
    return {2.0 * z.real(), 2.0 * z.imag(), std::norm(x.a) - std::norm(x.b)};
}

struct Mat2 {
    cplx m00{1.0, 0.0}, m01{0.0, 0.0};
    cplx m10{0.0, 0.0}, m11{1.0, 0.0};

    static Mat2 identity() { return {}; }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

inline Vec2 operator*(const Mat2& m, const Vec2& x) {
    return {m.m00 * x.a + m.m01 * x.b, m.m10 * x.a + m.m11 * x.b};
}

inline cplx det(const Mat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }
inline cplx trace(const Mat2& m) { return m.m00 + m.m11; }

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.m00), std::conj(m.m10), std::conj(m.m01), std::conj(m.m11)};
}

// max elementwise |U^dag U - I|
inline double unitarity_defect(const Mat2& u) {
    Mat2 p = adjoint(u) * u;
    double d = std::abs(p.m00 - cplx(1.0));
    d = std::max(d, std::abs(p.m01));
    d = std::max(d, std::abs(p.m10));
    d = std::max(d, std::abs(p.m11 - cplx(1.0)));
    return d;
}

inline double real_expectation(const Vec2& x, const Mat2& h) {
    return (std::conj(x.a) * (h.m00 * x.a + h.m01 * x.b) +
            std::conj(x.b) * (h.m10 * x.a + h.m11 * x.b))
        .real();
}

}  // namespace floq
