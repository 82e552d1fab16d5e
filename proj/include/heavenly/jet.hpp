#pragma once

#include <array>
#include <complex>
#include <functional>

namespace heavenly {

using Complex = std::complex<double>;
using Point4 = std::array<Complex, 4>;

/// Value, first and second derivative of a scalar function at one argument.
struct Deriv2 {
    Complex g{};
    Complex dg{};
    Complex d2g{};
};

/// Second-order jet of a complex function of four complex variables:
/// value, gradient and symmetric Hessian at a point. Symmetry is kept
/// exact by writing both (mu,nu) and (nu,mu) in every operation.
struct Jet4 {
    Complex val{};
    std::array<Complex, 4> grad{};
    std::array<std::array<Complex, 4>, 4> hess{};

    static Jet4 constant(Complex c) {
        Jet4 j;
        j.val = c;
        return j;
    }

    Complex h(int mu, int nu) const { return hess[mu][nu]; }

    /// hess += w * c ⊗ c, mirrored so symmetry stays bit-exact
    void add_outer(Complex w, const std::array<Complex, 4>& c) {
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu; nu < 4; ++nu) {
                const Complex h = hess[mu][nu] + w * c[mu] * c[nu];
                hess[mu][nu] = h;
                hess[nu][mu] = h;
            }
    }
};

/// The argument of one ansatz term: sum_mu coeffs[mu]*x[mu] + offset.
struct LinearForm {
    std::array<Complex, 4> coeffs{};
    Complex offset{};

    Complex eval(const Point4& x) const {
        Complex s = offset;
        for (int mu = 0; mu < 4; ++mu) s += coeffs[mu] * x[mu];
        return s;
    }
};

inline Jet4 jet_linform(const LinearForm& form, const Point4& x) {
    Jet4 j;
    j.val = form.eval(x);
    j.grad = form.coeffs;
    return j;
}

/// Chain rule through a scalar function given (g, g', g'') at inner.val.
inline Jet4 jet_compose(const Deriv2& d, const Jet4& inner) {
    Jet4 out;
    out.val = d.g;
    for (int mu = 0; mu < 4; ++mu) out.grad[mu] = d.dg * inner.grad[mu];
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const Complex h =
                d.d2g * inner.grad[mu] * inner.grad[nu] + d.dg * inner.hess[mu][nu];
            out.hess[mu][nu] = h;
            out.hess[nu][mu] = h;
        }
    return out;
}

inline Jet4 jet_add(const Jet4& a, const Jet4& b) {
    Jet4 out;
    out.val = a.val + b.val;
    for (int mu = 0; mu < 4; ++mu) out.grad[mu] = a.grad[mu] + b.grad[mu];
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out.hess[mu][nu] = a.hess[mu][nu] + b.hess[mu][nu];
    return out;
}

inline Jet4 jet_scale(const Jet4& a, Complex w) {
    Jet4 out;
    out.val = w * a.val;
    for (int mu = 0; mu < 4; ++mu) out.grad[mu] = w * a.grad[mu];
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out.hess[mu][nu] = w * a.hess[mu][nu];
    return out;
}

/// Leibniz rule: (ab)'' = a''b + a'⊗b' + b'⊗a' + ab''.
inline Jet4 jet_mul(const Jet4& a, const Jet4& b) {
    Jet4 out;
    out.val = a.val * b.val;
    for (int mu = 0; mu < 4; ++mu) out.grad[mu] = a.grad[mu] * b.val + a.val * b.grad[mu];
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const Complex h = a.hess[mu][nu] * b.val + a.grad[mu] * b.grad[nu] +
                              a.grad[nu] * b.grad[mu] + a.val * b.hess[mu][nu];
            out.hess[mu][nu] = h;
            out.hess[nu][mu] = h;
        }
    return out;
}

} // namespace heavenly
