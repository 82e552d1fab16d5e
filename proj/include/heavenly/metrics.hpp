#pragma once

#include <array>
#include <string>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"
#include "heavenly/pde.hpp"

namespace heavenly {

enum class MetricId { Kahler, HcmaLeg, Heavenly, HeavenlyLeg };

inline MetricId parse_metric_id(const std::string& name) {
    if (name == "kahler") return MetricId::Kahler;
    if (name == "hcma-leg") return MetricId::HcmaLeg;
    if (name == "heavenly") return MetricId::Heavenly;
    if (name == "heavenly-leg") return MetricId::HeavenlyLeg;
    throw ConfigError("unknown metric family: " + name);
}

inline std::string metric_name(MetricId id) {
    switch (id) {
    case MetricId::Kahler: return "kahler";
    case MetricId::HcmaLeg: return "hcma-leg";
    case MetricId::Heavenly: return "heavenly";
    case MetricId::HeavenlyLeg: return "heavenly-leg";
    }
    return {};
}

/// Symmetric metric component matrix: ds^2 = sum g[mu][nu] dx^mu dx^nu.
struct Metric4 {
    std::array<std::array<Complex, 4>, 4> g{};
    std::array<std::string, 4> coords;

    void add_sym(int mu, int nu, Complex coefficient_of_product) {
        // a * dx^mu dx^nu contributes a/2 to both slots (a at mu == nu)
        g[mu][nu] += coefficient_of_product / 2.0;
        g[nu][mu] += coefficient_of_product / 2.0;
    }
};

using OneForm = std::array<Complex, 4>;

inline void add_outer_sym(Metric4& m, const OneForm& a, const OneForm& b, Complex w) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            m.g[mu][nu] += w * 0.5 * (a[mu] * b[nu] + a[nu] * b[mu]);
}

inline Complex metric_det(const Metric4& m) {
    auto d3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m.g[r0][c0] * (m.g[r1][c1] * m.g[r2][c2] - m.g[r1][c2] * m.g[r2][c1]) -
               m.g[r0][c1] * (m.g[r1][c0] * m.g[r2][c2] - m.g[r1][c2] * m.g[r2][c0]) +
               m.g[r0][c2] * (m.g[r1][c0] * m.g[r2][c1] - m.g[r1][c1] * m.g[r2][c0]);
    };
    return m.g[0][0] * d3(1, 2, 3, 1, 2, 3) - m.g[0][1] * d3(1, 2, 3, 0, 2, 3) +
           m.g[0][2] * d3(1, 2, 3, 0, 1, 3) - m.g[0][3] * d3(1, 2, 3, 0, 1, 2);
}

inline Metric4 metric_at(MetricId id, const Jet4& j) {
    Metric4 m;
    switch (id) {
    case MetricId::Kahler: {
        // ds^2 = v_{z^i zb^k} dz^i dzb^k over i,k in {1,2}; coords (z1,z1b,z2,z2b)
        m.coords = {"z1", "z1b", "z2", "z2b"};
        m.add_sym(0, 1, j.h(0, 1));
        m.add_sym(0, 3, j.h(0, 3));
        m.add_sym(2, 1, j.h(2, 1));
        m.add_sym(2, 3, j.h(2, 3));
        return m;
    }
    case MetricId::Heavenly: {
        // ds^2 = dw dx + dz dy - v_xx dz^2 - v_yy dw^2 + 2 v_xy dw dz
        m.coords = {"x", "y", "w", "z"};
        m.add_sym(2, 0, 1.0);
        m.add_sym(3, 1, 1.0);
        m.add_sym(3, 3, -j.h(0, 0));
        m.add_sym(2, 2, -j.h(1, 1));
        m.add_sym(2, 3, 2.0 * j.h(0, 1));
        return m;
    }
    case MetricId::HcmaLeg: {
        // coords (p,pb,z2,z2b)
        m.coords = {"p", "pb", "z2", "z2b"};
        const Complex wpp = j.h(0, 0), wbb = j.h(1, 1), wpb = j.h(0, 1);
        const Complex D = wpp * wbb - wpb * wpb;
        if (std::abs(D) == 0.0) throw SingularDenominator("w_pp*w_pbpb - w_ppb^2");
        if (std::abs(wpb) == 0.0) throw SingularDenominator("w_ppb");
        const OneForm omega1 = {wpb, 0.0, j.h(1, 2), 0.0}; // w_ppb dp + w_pb z2 dz2
        const OneForm omega2 = {0.0, wpb, 0.0, j.h(0, 3)}; // w_ppb dpb + w_p z2b dz2b
        add_outer_sym(m, omega1, omega1, wpp / D);
        add_outer_sym(m, omega2, omega2, wbb / D);
        add_outer_sym(m, omega1, omega2, (wpp * wbb + wpb * wpb) / (wpb * D));
        m.add_sym(2, 3, -D / wpb);
        return m;
    }
    case MetricId::HeavenlyLeg: {
        // coords (x,r,t,z)
        m.coords = {"x", "r", "t", "z"};
        const Complex T = j.h(2, 2), R = j.h(1, 1), TR = j.h(1, 2);
        const Complex D = T * R - TR * TR;
        if (std::abs(T) == 0.0) throw SingularDenominator("th_tt");
        if (std::abs(D) == 0.0) throw SingularDenominator("th_tt*th_rr - th_tr^2");
        const OneForm omega = {j.h(0, 2), TR, T, j.h(2, 3)};
        const Complex u = T * j.h(0, 1) - TR * j.h(0, 2);
        OneForm psi;
        for (int mu = 0; mu < 4; ++mu) psi[mu] = T * omega[mu];
        psi[3] += u;
        add_outer_sym(m, psi, psi, 1.0 / (T * D));
        m.add_sym(3, 3, -(T * j.h(0, 0) - j.h(0, 2) * j.h(0, 2)) / T);
        const OneForm dx = {1.0, 0.0, 0.0, 0.0};
        const OneForm dz = {0.0, 0.0, 0.0, 1.0};
        add_outer_sym(m, omega, dx, -1.0);
        const OneForm chi = {j.h(0, 1), R, TR, j.h(1, 3)};
        add_outer_sym(m, chi, dz, -1.0);
        return m;
    }
    }
    throw ConfigError("unknown metric family");
}

/// Independent per-entry transcription of the transformed heavenly metric,
/// kept separate from metric_at as a cross-check against mis-expansion.
inline Metric4 metric_heavenly_leg_expanded(const Jet4& j) {
    Metric4 m;
    m.coords = {"x", "r", "t", "z"};
    const Complex T = j.h(2, 2), R = j.h(1, 1), X = j.h(0, 0);
    const Complex TR = j.h(1, 2), TX = j.h(0, 2), TZ = j.h(2, 3);
    const Complex RX = j.h(0, 1), RZ = j.h(1, 3);
    const Complex D = T * R - TR * TR;
    if (std::abs(T) == 0.0) throw SingularDenominator("th_tt");
    if (std::abs(D) == 0.0) throw SingularDenominator("th_tt*th_rr - th_tr^2");
    const Complex u = T * RX - TR * TX;
    const Complex pz = T * TZ + u;
    m.g[0][0] = T * TX * TX / D - TX;
    m.g[0][1] = T * TX * TR / D - TR / 2.0;
    m.g[0][2] = T * T * TX / D - T / 2.0;
    m.g[0][3] = TX * pz / D - TZ / 2.0 - RX / 2.0;
    m.g[1][1] = T * TR * TR / D;
    m.g[1][2] = T * T * TR / D;
    m.g[1][3] = TR * pz / D - R / 2.0;
    m.g[2][2] = T * T * T / D;
    m.g[2][3] = T * pz / D - TR / 2.0;
    m.g[3][3] = pz * pz / (T * D) - (T * X - TX * TX) / T - RZ;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < mu; ++nu) m.g[mu][nu] = m.g[nu][mu];
    return m;
}

} // namespace heavenly
