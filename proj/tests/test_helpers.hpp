#pragma once

#include <doctest.h>

#include "heavenly/jet.hpp"
#include "heavenly/rng.hpp"

namespace heavenly::testing {

inline void check_close(Complex actual, Complex expected, double tol = 1e-12) {
    CAPTURE(actual.real());
    CAPTURE(actual.imag());
    CAPTURE(expected.real());
    CAPTURE(expected.imag());
    CHECK(std::abs(actual - expected) <= tol);
}

/// |a-b| against relative tolerance, falling back to absolute below 1.
inline void check_rel(Complex actual, Complex expected, double tol) {
    const double denom = std::max(1.0, std::abs(expected));
    CAPTURE(actual.real());
    CAPTURE(actual.imag());
    CAPTURE(expected.real());
    CAPTURE(expected.imag());
    CHECK(std::abs(actual - expected) <= tol * denom);
}

inline double max_entry_diff(const Jet4& a, const Jet4& b) {
    double worst = std::abs(a.val - b.val);
    for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, std::abs(a.grad[mu] - b.grad[mu]));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            worst = std::max(worst, std::abs(a.hess[mu][nu] - b.hess[mu][nu]));
    return worst;
}

/// Largest relative deviation between two jets (absolute below magnitude 1).
inline double max_rel_jet_diff(const Jet4& a, const Jet4& b) {
    auto rel = [](Complex x, Complex y) {
        return std::abs(x - y) / std::max(1.0, std::abs(y));
    };
    double worst = rel(a.val, b.val);
    for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, rel(a.grad[mu], b.grad[mu]));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            worst = std::max(worst, rel(a.hess[mu][nu], b.hess[mu][nu]));
    return worst;
}

inline Jet4 random_jet(Rng& rng) {
    Jet4 j;
    j.val = rng.unit_disk();
    for (int mu = 0; mu < 4; ++mu) j.grad[mu] = rng.unit_disk();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const Complex h = rng.unit_disk();
            j.hess[mu][nu] = h;
            j.hess[nu][mu] = h;
        }
    return j;
}

} // namespace heavenly::testing
