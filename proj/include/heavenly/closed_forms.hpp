#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "heavenly/jet.hpp"

namespace heavenly {

/// A value together with the magnitude of its largest contributions,
/// for scale-aware "nonzero" decisions on open conditions.
struct Scaled {
    Complex v{};
    double scale = 0.0;

    Scaled& operator+=(Complex term) {
        v += term;
        scale += std::abs(term);
        return *this;
    }
};

/// |value| decisively above roundoff of its own contributions.
inline bool decisively_nonzero(const Scaled& s, double tol = 1e-8) {
    return std::abs(s.v) > tol * (1.0 + s.scale);
}

namespace closed {

// ---------------------------------------------------------------------------
// Jacobian determinant coefficient polynomials (the g'-free factors).
// Each is kept in expanded monomial form, matching its source table term
// by term, and is cross-checked against the generic 4x4 determinant.
// ---------------------------------------------------------------------------

/// Equal-symmetry 4-term determinant polynomial (the parenthesis), over the
/// free coefficients; the full determinant divides by (a3 b3 c3 d3)^2.
inline Scaled det_poly_equal(Complex a2, Complex a3, Complex b2, Complex b3, Complex c2,
                             Complex c3, Complex d2, Complex d3) {
    auto cube = [](Complex z) { return z * z * z; };
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += -sq(a2) * a3 * b2 * sq(b3) * cube(c3) * cube(d2);
    r += sq(a2) * a3 * b2 * sq(b3) * cube(c2) * cube(d3);
    r += -sq(a2) * a3 * c2 * sq(c3) * cube(d3) * cube(b2);
    r += sq(a2) * a3 * c2 * sq(c3) * cube(b3) * cube(d2);
    r += -sq(a2) * a3 * d2 * sq(d3) * cube(b3) * cube(c2);
    r += sq(a2) * a3 * d2 * sq(d3) * cube(c3) * cube(b2);
    r += sq(b2) * b3 * a2 * sq(a3) * cube(c3) * cube(d2);
    r += -sq(b2) * b3 * a2 * sq(a3) * cube(c2) * cube(d3);
    r += sq(b2) * b3 * c2 * sq(c3) * cube(d3) * cube(a2);
    r += -sq(b2) * b3 * c2 * sq(c3) * cube(a3) * cube(d2);
    r += sq(b2) * b3 * d2 * sq(d3) * cube(a3) * cube(c2);
    r += -sq(b2) * b3 * d2 * sq(d3) * cube(c3) * cube(a2);
    r += sq(c2) * c3 * a2 * sq(a3) * cube(d3) * cube(b2);
    r += -sq(c2) * c3 * a2 * sq(a3) * cube(b3) * cube(d2);
    r += -sq(c2) * c3 * b2 * sq(b3) * cube(d3) * cube(a2);
    r += sq(c2) * c3 * b2 * sq(b3) * cube(a3) * cube(d2);
    r += -sq(c2) * c3 * d2 * sq(d3) * cube(a3) * cube(b2);
    r += sq(c2) * c3 * d2 * sq(d3) * cube(b3) * cube(a2);
    r += sq(d2) * d3 * a2 * sq(a3) * cube(b3) * cube(c2);
    r += -sq(d2) * d3 * a2 * sq(a3) * cube(c3) * cube(b2);
    r += -sq(d2) * d3 * b2 * sq(b3) * cube(a3) * cube(c2);
    r += sq(d2) * d3 * b2 * sq(b3) * cube(c3) * cube(a2);
    r += sq(d2) * d3 * c2 * sq(c3) * cube(a3) * cube(b2);
    r += -sq(d2) * d3 * c2 * sq(c3) * cube(b3) * cube(a2);
    return r;
}

/// Higher-symmetry subclass I determinant polynomial; the full determinant
/// divides by a1 a2 b1 b2 c1 c2 d1 d2.
inline Scaled det_poly_high1(Complex a1, Complex a2, Complex b1, Complex b2, Complex c1,
                             Complex c2, Complex d1, Complex d2) {
    auto cube = [](Complex z) { return z * z * z; };
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += -sq(a1) * a2 * sq(b2) * b1 * cube(c2) * cube(d1);
    r += sq(a1) * a2 * sq(b2) * b1 * cube(c1) * cube(d2);
    r += -sq(a1) * a2 * sq(c2) * c1 * cube(d2) * cube(b1);
    r += sq(a1) * a2 * sq(c2) * c1 * cube(b2) * cube(d1);
    r += -sq(a1) * a2 * sq(d2) * d1 * cube(b2) * cube(c1);
    r += sq(a1) * a2 * sq(d2) * d1 * cube(c2) * cube(b1);
    r += sq(b1) * b2 * sq(a2) * a1 * cube(c2) * cube(d1);
    r += -sq(b1) * b2 * sq(a2) * a1 * cube(c1) * cube(d2);
    r += sq(b1) * b2 * sq(c2) * c1 * cube(d2) * cube(a1);
    r += -sq(b1) * b2 * sq(c2) * c1 * cube(a2) * cube(d1);
    r += sq(b1) * b2 * sq(d2) * d1 * cube(a2) * cube(c1);
    r += -sq(b1) * b2 * sq(d2) * d1 * cube(c2) * cube(a1);
    r += sq(c1) * c2 * sq(a2) * a1 * cube(d2) * cube(b1);
    r += -sq(c1) * c2 * sq(a2) * a1 * cube(b2) * cube(d1);
    r += -sq(c1) * c2 * sq(b2) * b1 * cube(d2) * cube(a1);
    r += sq(c1) * c2 * sq(b2) * b1 * cube(a2) * cube(d1);
    r += -sq(c1) * c2 * sq(d2) * d1 * cube(a2) * cube(b1);
    r += sq(c1) * c2 * sq(d2) * d1 * cube(b2) * cube(a1);
    r += sq(d1) * d2 * sq(a2) * a1 * cube(b2) * cube(c1);
    r += -sq(d1) * d2 * sq(a2) * a1 * cube(c2) * cube(b1);
    r += -sq(d1) * d2 * sq(b2) * b1 * cube(a2) * cube(c1);
    r += sq(d1) * d2 * sq(b2) * b1 * cube(c2) * cube(a1);
    r += sq(d1) * d2 * sq(c2) * c1 * cube(a2) * cube(b1);
    r += -sq(d1) * d2 * sq(c2) * c1 * cube(b2) * cube(a1);
    return r;
}

/// Higher-symmetry subclass II determinant polynomial; same division by
/// (a3 b3 c3 d3)^2 as the equal-symmetry case.
inline Scaled det_poly_high2(Complex a2, Complex a3, Complex b2, Complex b3, Complex c2,
                             Complex c3, Complex d2, Complex d3) {
    auto cube = [](Complex z) { return z * z * z; };
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += -sq(a2) * a3 * b2 * sq(b3) * cube(c3) * cube(d2);
    r += sq(a2) * a3 * b2 * sq(b3) * cube(c2) * cube(d3);
    r += -sq(a2) * a3 * c2 * sq(c3) * cube(d3) * cube(b2);
    r += sq(a2) * a3 * c2 * sq(c3) * cube(b3) * cube(d2);
    r += -sq(a2) * a3 * d2 * sq(d3) * cube(b3) * cube(c2);
    r += sq(a2) * a3 * d2 * sq(d3) * cube(c3) * cube(b2);
    r += sq(b2) * b3 * a2 * sq(a3) * cube(c3) * cube(d2);
    r += -sq(b2) * b3 * a2 * sq(a3) * cube(c2) * cube(d3);
    r += sq(b2) * b3 * c2 * sq(c3) * cube(d3) * cube(a2);
    r += -sq(b2) * b3 * c2 * sq(c3) * cube(a3) * cube(d2);
    r += sq(b2) * b3 * d2 * sq(d3) * cube(a3) * cube(c2);
    r += -sq(b2) * b3 * d2 * sq(d3) * cube(c3) * cube(a2);
    r += sq(c2) * c3 * a2 * sq(a3) * cube(d3) * cube(b2);
    r += -sq(c2) * c3 * a2 * sq(a3) * cube(b3) * cube(d2);
    r += -sq(c2) * c3 * b2 * sq(b3) * cube(d3) * cube(a2);
    r += sq(c2) * c3 * b2 * sq(b3) * cube(a3) * cube(d2);
    r += -sq(c2) * c3 * d2 * sq(d3) * cube(a3) * cube(b2);
    r += sq(c2) * c3 * d2 * sq(d3) * cube(b3) * cube(a2);
    r += sq(d2) * d3 * a2 * sq(a3) * cube(b3) * cube(c2);
    r += -sq(d2) * d3 * a2 * sq(a3) * cube(c3) * cube(b2);
    r += -sq(d2) * d3 * b2 * sq(b3) * cube(a3) * cube(c2);
    r += sq(d2) * d3 * b2 * sq(b3) * cube(c3) * cube(a2);
    r += sq(d2) * d3 * c2 * sq(c3) * cube(a3) * cube(b2);
    r += -sq(d2) * d3 * c2 * sq(c3) * cube(b3) * cube(a2);
    return r;
}

/// Mixed-class determinant polynomial; determinant = -poly/(a2 b2 c2 d2)^2
/// times the g' product.
inline Scaled det_poly_mixed(Complex a1, Complex a2, Complex b1, Complex b2, Complex c1,
                             Complex c2, Complex d1, Complex d2) {
    auto cube = [](Complex z) { return z * z * z; };
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += -a1 * sq(a2) * cube(b2) * c2 * sq(c1) * cube(d1);
    r += a1 * sq(a2) * cube(b2) * d2 * cube(c1) * sq(d1);
    r += -a1 * sq(a2) * cube(c2) * d2 * sq(d1) * cube(b1);
    r += a1 * sq(a2) * cube(c2) * b2 * sq(b1) * cube(d1);
    r += -a1 * sq(a2) * cube(d2) * b2 * sq(b1) * cube(c1);
    r += a1 * sq(a2) * cube(d2) * c2 * sq(c1) * cube(b1);
    r += b1 * sq(b2) * cube(a2) * c2 * sq(c1) * cube(d1);
    r += -b1 * sq(b2) * cube(a2) * d2 * cube(c1) * sq(d1);
    r += b1 * sq(b2) * cube(c2) * d2 * sq(d1) * cube(a1);
    r += -b1 * sq(b2) * cube(c2) * a2 * sq(a1) * cube(d1);
    r += b1 * sq(b2) * cube(d2) * a2 * sq(a1) * cube(c1);
    r += -b1 * sq(b2) * cube(d2) * c2 * sq(c1) * cube(a1);
    r += c1 * sq(c2) * cube(a2) * d2 * sq(d1) * cube(b1);
    r += -c1 * sq(c2) * cube(a2) * b2 * sq(b1) * cube(d1);
    r += -c1 * sq(c2) * cube(b2) * d2 * sq(d1) * cube(a1);
    r += c1 * sq(c2) * cube(b2) * a2 * sq(a1) * cube(d1);
    r += -c1 * sq(c2) * cube(d2) * a2 * sq(a1) * cube(b1);
    r += c1 * sq(c2) * cube(d2) * b2 * sq(b1) * cube(a1);
    r += d1 * sq(d2) * cube(a2) * b2 * sq(b1) * cube(c1);
    r += -d1 * sq(d2) * cube(a2) * c2 * sq(c1) * cube(b1);
    r += -d1 * sq(d2) * cube(b2) * a2 * sq(a1) * cube(c1);
    r += d1 * sq(d2) * cube(b2) * c2 * sq(c1) * cube(a1);
    r += d1 * sq(d2) * cube(c2) * a2 * sq(a1) * cube(b1);
    r += -d1 * sq(d2) * cube(c2) * b2 * sq(b1) * cube(a1);
    return r;
}

/// HCMA class I parameter factor: d1^6 - d2^6 - 3 d1^4 d2^2 + 3 d1^2 d2^4.
inline Scaled hcma1_det_factor(Complex d1, Complex d2) {
    auto p2 = [](Complex z) { return z * z; };
    auto p4 = [&](Complex z) { return p2(z) * p2(z); };
    auto p6 = [&](Complex z) { return p4(z) * p2(z); };
    Scaled r;
    r += p6(d1);
    r += -p6(d2);
    r += -3.0 * p4(d1) * p2(d2);
    r += 3.0 * p2(d1) * p4(d2);
    return r;
}

/// Asymmetric-class parameter factor:
/// a1 (b2 d3 - b3 d2)(-c4 A a3 c1 - B a3 c1^2 + a1 c1 c3 B + a1 c3 c4 A).
inline Scaled asymm_det_factor(Complex A, Complex B, Complex a1, Complex a3, Complex b2,
                               Complex b3, Complex c1, Complex c3, Complex c4, Complex d2,
                               Complex d3) {
    Scaled inner;
    inner += -c4 * A * a3 * c1;
    inner += -B * a3 * c1 * c1;
    inner += a1 * c1 * c3 * B;
    inner += a1 * c3 * c4 * A;
    Scaled pair;
    pair += b2 * d3;
    pair += -b3 * d2;
    Scaled r;
    r.v = a1 * pair.v * inner.v;
    r.scale = std::abs(a1) * (pair.scale * std::abs(inner.v) + std::abs(pair.v) * inner.scale +
                              pair.scale * inner.scale);
    return r;
}

// ---------------------------------------------------------------------------
// Full closed-form determinants (with the g' factors and prefactors).
// ---------------------------------------------------------------------------

inline Scaled det_closed_cma(Complex a2, Complex d3, Complex s1, Complex s2, Complex g3p,
                       Complex g4p) {
    const Complex a2b = std::conj(a2), d3b = std::conj(d3);
    Scaled bracket;
    bracket += 4.0 * d3 * d3b * a2b * a2b * a2;
    bracket += -d3 * a2b;
    bracket += -4.0 * a2b * a2 * a2 * d3 * d3b;
    bracket += d3b * a2;
    const Complex pre = -1.0 / (2.0 * a2b * a2b * a2 * a2);
    Scaled r;
    r.v = pre * s1 * s2 * bracket.v * g3p * g4p;
    r.scale = std::abs(pre * s1 * s2 * g3p * g4p) * bracket.scale;
    return r;
}

inline Scaled det_closed_hcma1(Complex A, Complex a2, Complex d1, Complex d2, Complex g1p,
                          Complex g2p, Complex g2pb, Complex g3p) {
    const Scaled factor = hcma1_det_factor(d1, d2);
    const Complex pre = Complex(0.0, 2.0) * a2 * A / (d1 * d1 * d2 * d2);
    Scaled r;
    r.v = pre * factor.v * g1p * g2p * g2pb * g3p;
    r.scale = std::abs(pre * g1p * g2p * g2pb * g3p) * factor.scale;
    return r;
}

inline Scaled det_closed_hcma2(Complex a4, Complex b4, Complex d4, Complex g1p, Complex g2p,
                          Complex g3p, Complex g3pb) {
    Scaled pair;
    pair += std::conj(a4) * b4;
    pair += -a4 * std::conj(b4);
    Scaled r;
    r.v = -pair.v * d4 * d4 * g1p * g2p * g3p * g3pb;
    r.scale = pair.scale * std::abs(d4 * d4 * g1p * g2p * g3p * g3pb);
    return r;
}

inline Scaled det_closed_hcma3(Complex A2, Complex B3, Complex C2, Complex H2, Complex g1p,
                          Complex g2p, Complex g3p, Complex g4p) {
    Scaled r;
    r += 16.0 * A2 * B3 * C2 * H2 * g1p * g2p * g3p * g4p;
    return r;
}

// ---------------------------------------------------------------------------
// Printed Legendre-existence conditions (closed forms in g'' values).
// ---------------------------------------------------------------------------

/// HCMA class I condition.
inline Scaled legendre_closed_hcma1(Complex A, Complex a2, Complex d1, Complex d2, Complex g1s, Complex g2s,
                       Complex g2sb, Complex g3s) {
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += sq(a2) * sq(d1 - d2) * g1s * (g2sb + g2s);
    r += -sq(A) * sq(d1 + d2) * g3s * (g2sb + g2s);
    r += sq(d1 * d1 - d2 * d2) * g2s * g2sb;
    r += -4.0 * sq(a2) * sq(A) * g1s * g3s;
    return r;
}

/// HCMA class II condition: d4^4 g3'' conj-g3''.
inline Scaled legendre_closed_hcma2(Complex d4, Complex g3s, Complex g3sb) {
    Scaled r;
    r += d4 * d4 * d4 * d4 * g3s * g3sb;
    return r;
}

/// HCMA class III condition (the long two-block expression).
inline Scaled legendre_closed_hcma3(Complex A2, Complex B3, Complex B4, Complex C2, Complex H2,
                          Complex g1s, Complex g2s, Complex g3s, Complex g4s) {
    const Complex s = std::sqrt(B3 * B3 + B4 * B4);
    const Complex D2 = B3 - B4 + s;
    const Complex D1 = D2 * D2;
    auto sq = [](Complex z) { return z * z; };
    auto cb = [](Complex z) { return z * z * z; };
    auto q4 = [&](Complex z) { return sq(z) * sq(z); };

    Scaled c12; // multiplies g1'' g2''
    c12 += -4.0 * sq(B4) * sq(B3) * sq(A2) / D1;
    c12 += 2.0 * sq(A2) * cb(B4) * s / D1;
    c12 += 2.0 * sq(A2) * cb(B3) * s / D1;
    c12 += -2.0 * sq(A2) * B4 * cb(B3) / D1;
    c12 += -2.0 * sq(A2) * cb(B4) * B3 / D1;
    c12 += 2.0 * B4 * sq(B3) * sq(A2) / D2;
    c12 += 2.0 * B3 * sq(B4) * sq(A2) / D2;
    c12 += -2.0 * sq(A2) * s * sq(B4) / D2;
    c12 += -2.0 * s * sq(B3) * sq(A2) / D2;
    c12 += 2.0 * s * sq(B3) * B4 * sq(A2) / D1;
    c12 += 2.0 * sq(B4) * s * B3 * sq(A2) / D1;
    c12 += 2.0 * sq(A2) * cb(B4) / D2;
    c12 += -2.0 * sq(A2) * q4(B4) / D1;
    c12 += -2.0 * sq(A2) * q4(B3) / D1;
    c12 += 2.0 * sq(A2) * cb(B3) / D2;
    c12 += -sq(B4) * sq(A2);
    c12 += -sq(B3) * sq(A2);

    Scaled c24; // multiplies g2'' g4''
    c24 += 2.0 * sq(H2) * cb(B4) * s / D1;
    c24 += 2.0 * sq(H2) * cb(B3) * s / D1;
    c24 += -4.0 * sq(B4) * sq(B3) * sq(H2) / D1;
    c24 += -2.0 * sq(H2) * q4(B4) / D1;
    c24 += -2.0 * sq(H2) * q4(B3) / D1;
    c24 += -2.0 * B4 * sq(B3) * sq(H2) / D2;
    c24 += -2.0 * B3 * sq(B4) * sq(H2) / D2;
    c24 += -sq(H2) * sq(B3);
    c24 += -sq(H2) * sq(B4);
    c24 += 2.0 * sq(H2) * s * sq(B4) / D2;
    c24 += -2.0 * sq(H2) * B4 * cb(B3) / D1;
    c24 += -2.0 * sq(H2) * cb(B4) * B3 / D1;
    c24 += 2.0 * s * sq(B3) * sq(H2) / D2;
    c24 += 2.0 * sq(H2) * s * sq(B4) * B3 / D1;
    c24 += -2.0 * sq(H2) * cb(B3) / D2;
    c24 += -2.0 * sq(H2) * cb(B4) / D2;
    c24 += 2.0 * s * sq(B3) * sq(H2) * B4 / D1;

    Scaled r;
    const double pairScale12 = c12.scale * std::abs(g1s * g2s);
    const double pairScale24 = c24.scale * std::abs(g2s * g4s);
    r.v = c12.v * g1s * g2s + c24.v * g2s * g4s;
    r.scale = pairScale12 + pairScale24;
    r += -4.0 * g1s * sq(C2) * g3s * sq(A2);
    r += (-sq(B3) * sq(C2) - sq(B4) * sq(C2)) * g2s * g3s;
    r += -16.0 * g1s * sq(H2) * g4s * sq(A2);
    r += -4.0 * g3s * sq(C2) * g4s * sq(H2);
    return r;
}

/// Equal-symmetry / higher-subclass-II condition (legendre_closed_equal): six
/// antisymmetric squares against g'' pair products.
inline Scaled legendre_closed_equal(Complex a2, Complex a3, Complex b2, Complex b3, Complex c2, Complex c3,
                      Complex d2, Complex d3, Complex g1s, Complex g2s, Complex g3s,
                      Complex g4s) {
    auto sq = [](Complex z) { return z * z; };
    Scaled r;
    r += sq(b2 * d3 - b3 * d2) * g2s * g4s;
    r += sq(b2 * c3 - b3 * c2) * g2s * g3s;
    r += sq(a2 * d3 - a3 * d2) * g1s * g4s;
    r += sq(c2 * a3 - c3 * a2) * g1s * g3s;
    r += sq(a2 * b3 - a3 * b2) * g1s * g2s;
    r += sq(c2 * d3 - c3 * d2) * g3s * g4s;
    return r;
}

/// Higher-symmetry subclass I condition (legendre_closed_high1).
inline Scaled legendre_closed_high1(Complex a1, Complex a2, Complex b1, Complex b2, Complex c1, Complex c2,
                        Complex d1, Complex d2, Complex g1s, Complex g2s, Complex g3s,
                        Complex g4s) {
    auto sq = [](Complex z) { return z * z; };
    auto cb = [](Complex z) { return z * z * z; };
    auto q4 = [&](Complex z) { return sq(z) * sq(z); };
    const Complex den = sq(a1) * sq(b1) * sq(c1) * sq(d1);
    Scaled r;
    r += (q4(b2) * sq(a1) * sq(c1) * sq(d1) * sq(a2) - 2.0 * cb(a2) * b1 * sq(c1) * sq(d1) * cb(b2) * a1 +
          q4(a2) * sq(b1) * sq(c1) * sq(d1) * sq(b2)) *
         g1s * g2s / den;
    r += (-2.0 * cb(a2) * sq(b1) * c1 * sq(d1) * cb(c2) * a1 + q4(c2) * sq(a1) * sq(b1) * sq(d1) * sq(a2) +
          q4(a2) * sq(b1) * sq(c1) * sq(d1) * sq(c2)) *
         g1s * g3s / den;
    r += (-2.0 * cb(a2) * sq(b1) * sq(c1) * d1 * cb(d2) * a1 + q4(a2) * sq(b1) * sq(c1) * sq(d1) * sq(d2) +
          q4(d2) * sq(a1) * sq(b1) * sq(c1) * sq(a2)) *
         g1s * g4s / den;
    r += (q4(c2) * sq(a1) * sq(b1) * sq(d1) * sq(b2) + q4(b2) * sq(a1) * sq(c1) * sq(d1) * sq(c2) -
          2.0 * cb(b2) * sq(a1) * c1 * sq(d1) * cb(c2) * b1) *
         g2s * g3s / den;
    r += (-2.0 * cb(b2) * sq(a1) * sq(c1) * d1 * cb(d2) * b1 + q4(b2) * sq(a1) * sq(c1) * sq(d1) * sq(d2) +
          q4(d2) * sq(a1) * sq(b1) * sq(c1) * sq(b2)) *
         g2s * g4s / den;
    r += (q4(d2) * sq(a1) * sq(b1) * sq(c1) * sq(c2) + q4(c2) * sq(a1) * sq(b1) * sq(d1) * sq(d2) -
          2.0 * cb(c2) * sq(a1) * sq(b1) * d1 * cb(d2) * c1) *
         g3s * g4s / den;
    return r;
}

/// Series conditions: (sum g'' u^2)(sum g'' v^2) - (sum g'' u v)^2 for the
/// per-term weight pairs (u_j, v_j).
inline Scaled series_two_by_two(std::span<const Complex> g2, std::span<const Complex> u,
                                std::span<const Complex> v) {
    Scaled su2, sv2, suv;
    for (std::size_t j = 0; j < g2.size(); ++j) {
        su2 += g2[j] * u[j] * u[j];
        sv2 += g2[j] * v[j] * v[j];
        suv += g2[j] * u[j] * v[j];
    }
    Scaled r;
    r.v = su2.v * sv2.v - suv.v * suv.v;
    r.scale = su2.scale * std::abs(sv2.v) + std::abs(su2.v) * sv2.scale + 2.0 * suv.scale * std::abs(suv.v);
    return r;
}

// ---------------------------------------------------------------------------
// Mixed-class closed-form Legendre condition (six pair blocks).
// ---------------------------------------------------------------------------

namespace detail {

// Each N is a polynomial in two row-parameter pairs times the squared pair
// of the two remaining rows; the monomials are kept in expanded form.
inline Scaled mixed_condition_block(Complex p1, Complex p2, Complex q1, Complex q2, Complex rest) {
    auto sq = [](Complex z) { return z * z; };
    auto cb = [](Complex z) { return z * z * z; };
    auto q4 = [&](Complex z) { return sq(z) * sq(z); };
    // N1 with (a -> p, b -> q), common factor rest = c2^2 d2^2 etc.
    Scaled r;
    r += q4(q2) * rest * q4(p1);
    r += q4(p2) * rest * q4(q1);
    r += sq(p1) * sq(p2) * rest * q4(q1);
    r += 2.0 * p1 * cb(p2) * rest * q4(q1);
    r += q4(p2) * rest * sq(q1) * sq(q2);
    r += sq(p1) * sq(p2) * rest * q4(q2);
    r += -2.0 * q2 * rest * p1 * cb(p2) * cb(q1);
    r += -2.0 * cb(q2) * rest * p1 * cb(p2) * q1;
    r += 2.0 * q1 * cb(q2) * rest * sq(p1) * sq(p2);
    r += -2.0 * q2 * rest * cb(p1) * p2 * cb(q1);
    r += -2.0 * sq(q2) * rest * cb(p1) * p2 * sq(q1);
    r += -2.0 * cb(q2) * rest * cb(p1) * p2 * q1;
    r += 2.0 * sq(p1) * sq(p2) * rest * sq(q1) * sq(q2);
    r += 2.0 * p1 * cb(p2) * rest * sq(q1) * sq(q2);
    r += sq(q1) * sq(q2) * rest * q4(p1);
    r += 2.0 * q1 * cb(q2) * rest * q4(p1);
    r += -2.0 * q4(q2) * rest * cb(p1) * p2;
    r += -2.0 * q2 * rest * q4(p2) * cb(q1);
    r += -2.0 * q2 * rest * sq(p1) * sq(p2) * cb(q1);
    return r;
}

} // namespace detail

/// Mixed-class condition, (N1 g1''g2'' + ... ) / (a2 b2 c2 d2)^2.
inline Scaled legendre_closed_mixed(Complex a1, Complex a2, Complex b1, Complex b2, Complex c1,
                          Complex c2, Complex d1, Complex d2, Complex g1s, Complex g2s,
                          Complex g3s, Complex g4s) {
    auto sq = [](Complex z) { return z * z; };
    const Complex den = sq(a2) * sq(b2) * sq(c2) * sq(d2);
    const Scaled N1 = detail::mixed_condition_block(a1, a2, b1, b2, sq(c2) * sq(d2));
    const Scaled N2 = detail::mixed_condition_block(a1, a2, c1, c2, sq(b2) * sq(d2));
    const Scaled N3 = detail::mixed_condition_block(a1, a2, d1, d2, sq(b2) * sq(c2));
    const Scaled N4 = detail::mixed_condition_block(b1, b2, c1, c2, sq(a2) * sq(d2));
    const Scaled N5 = detail::mixed_condition_block(b1, b2, d1, d2, sq(a2) * sq(c2));
    const Scaled N6 = detail::mixed_condition_block(c1, c2, d1, d2, sq(a2) * sq(b2));
    Scaled r;
    const Complex pairs[6] = {g1s * g2s, g1s * g3s, g1s * g4s, g2s * g3s, g2s * g4s, g3s * g4s};
    const Scaled* Ns[6] = {&N1, &N2, &N3, &N4, &N5, &N6};
    for (int k = 0; k < 6; ++k) {
        r.v += Ns[k]->v * pairs[k] / den;
        r.scale += Ns[k]->scale * std::abs(pairs[k] / den);
    }
    return r;
}

} // namespace closed
} // namespace heavenly
