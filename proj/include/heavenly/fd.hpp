#pragma once

#include <functional>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"

namespace heavenly {

using PointFn = std::function<Complex(const Point4&)>;

/// Central-difference gradient/Hessian oracle for holomorphic evaluators.
///
/// Each derivative is estimated along the real axis and along the imaginary
/// axis of the stepped coordinate and the two estimates are averaged; for a
/// holomorphic f they agree up to truncation. The Hessian is symmetrized by
/// construction.
inline Jet4 fd_hessian(const PointFn& f, const Point4& x, double h = 1e-4) {
    if (!(h > 0.0)) throw DomainError("fd_hessian requires h > 0");

    auto at = [&](int mu, Complex step) {
        Point4 y = x;
        y[mu] += step;
        return y;
    };
    auto at2 = [&](int mu, Complex smu, int nu, Complex snu) {
        Point4 y = x;
        y[mu] += smu;
        y[nu] += snu;
        return y;
    };

    const Complex ih(0.0, h);
    Jet4 j;
    j.val = f(x);

    for (int mu = 0; mu < 4; ++mu) {
        const Complex dre = (f(at(mu, h)) - f(at(mu, -h))) / (2.0 * h);
        const Complex dim = (f(at(mu, ih)) - f(at(mu, -ih))) / (2.0 * ih);
        j.grad[mu] = 0.5 * (dre + dim);

        const Complex sre = (f(at(mu, h)) - 2.0 * j.val + f(at(mu, -h))) / (h * h);
        const Complex sim = (f(at(mu, ih)) - 2.0 * j.val + f(at(mu, -ih))) / (ih * ih);
        j.hess[mu][mu] = 0.5 * (sre + sim);
    }

    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            const Complex cre = (f(at2(mu, h, nu, h)) - f(at2(mu, h, nu, -h)) -
                                 f(at2(mu, -h, nu, h)) + f(at2(mu, -h, nu, -h))) /
                                (4.0 * h * h);
            const Complex cim = (f(at2(mu, ih, nu, ih)) - f(at2(mu, ih, nu, -ih)) -
                                 f(at2(mu, -ih, nu, ih)) + f(at2(mu, -ih, nu, -ih))) /
                                (4.0 * ih * ih);
            const Complex c = 0.5 * (cre + cim);
            j.hess[mu][nu] = c;
            j.hess[nu][mu] = c;
        }
    }
    return j;
}

} // namespace heavenly
