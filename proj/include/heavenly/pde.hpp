#pragma once

#include <array>
#include <string>
#include <vector>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"

namespace heavenly {

enum class EquationId {
    CmaElliptic,
    CmaGeneral,
    HcmaLegendre,
    Heavenly2,
    Heavenly2Legendre,
    Mixed,
    MixedLegendre,
    Asymm,
    Evolution2,
};

enum class SystemId { EqSymm, HighSymm, MixedLin };

/// Canonical index of one Hessian entry, mu <= nu.
struct HessIdx {
    int mu = 0;
    int nu = 0;

    HessIdx() = default;
    HessIdx(int m, int n) : mu(m < n ? m : n), nu(m < n ? n : m) {}

    friend bool operator==(const HessIdx&, const HessIdx&) = default;
    friend auto operator<=>(const HessIdx&, const HessIdx&) = default;
};

struct QuadTerm {
    HessIdx a, b; // residual accumulates coef * H[a] * H[b]
    Complex coef;
};

struct LinTerm {
    HessIdx a;
    Complex coef;
};

/// A second-order PDE as data: residual = sum quad + sum lin + constant.
/// theta-style free terms are stored negated so residual == 0 on solutions.
struct PdeSpec {
    std::string name;
    std::array<std::string, 4> coords;
    std::vector<QuadTerm> quad;
    std::vector<LinTerm> lin;
    Complex constant{};
};

/// A set of PDEs that are purely linear in the Hessian.
struct SystemSpec {
    std::string name;
    std::array<std::string, 4> coords;
    std::vector<PdeSpec> equations;
};

/// Free coefficients of the parameterized equations.
struct EquationOptions {
    double theta = 1.0;      // cma-general, mixed
    Complex A{1.0}, B{1.0}, C{1.0}; // asymm
};

inline Complex residual(const PdeSpec& spec, const Jet4& j) {
    Complex r = spec.constant;
    for (const auto& q : spec.quad) r += q.coef * j.h(q.a.mu, q.a.nu) * j.h(q.b.mu, q.b.nu);
    for (const auto& l : spec.lin) r += l.coef * j.h(l.a.mu, l.a.nu);
    return r;
}

inline std::vector<Complex> residual_system(const SystemSpec& sys, const Jet4& j) {
    std::vector<Complex> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) out.push_back(residual(eq, j));
    return out;
}

inline PdeSpec builtin_pde(EquationId id, const EquationOptions& opt = {}) {
    PdeSpec s;
    switch (id) {
    case EquationId::CmaElliptic:
        // v_{11b} v_{22b} - v_{12b} v_{1b2} = 1
        s.name = "cma";
        s.coords = {"z1", "z1b", "z2", "z2b"};
        s.quad = {{{0, 1}, {2, 3}, 1.0}, {{0, 3}, {1, 2}, -1.0}};
        s.constant = -1.0;
        return s;
    case EquationId::CmaGeneral:
        s.name = "cma-general";
        s.coords = {"z1", "z1b", "z2", "z2b"};
        s.quad = {{{0, 1}, {2, 3}, 1.0}, {{0, 3}, {1, 2}, -1.0}};
        s.constant = -opt.theta;
        return s;
    case EquationId::HcmaLegendre:
        // w_{ppb} w_{22b} - w_{p2b} w_{pb2} - w_{ppb}^2 + w_{pp} w_{pbpb} = 0
        s.name = "hcma-legendre";
        s.coords = {"p", "pb", "z2", "z2b"};
        s.quad = {{{0, 1}, {2, 3}, 1.0},
                  {{0, 3}, {1, 2}, -1.0},
                  {{0, 1}, {0, 1}, -1.0},
                  {{0, 0}, {1, 1}, 1.0}};
        return s;
    case EquationId::Heavenly2:
        // v_xx v_yy - v_xy^2 + v_xw + v_yz = 0
        s.name = "heavenly2";
        s.coords = {"x", "y", "w", "z"};
        s.quad = {{{0, 0}, {1, 1}, 1.0}, {{0, 1}, {0, 1}, -1.0}};
        s.lin = {{{0, 2}, 1.0}, {{1, 3}, 1.0}};
        return s;
    case EquationId::Heavenly2Legendre:
        // th_tt (th_xx + th_rz) + th_xt (th_rr - th_xt) - th_rt (th_rx + th_tz) = 0
        s.name = "heavenly2-legendre";
        s.coords = {"x", "r", "t", "z"};
        s.quad = {{{2, 2}, {0, 0}, 1.0},  {{2, 2}, {1, 3}, 1.0}, {{0, 2}, {1, 1}, 1.0},
                  {{0, 2}, {0, 2}, -1.0}, {{1, 2}, {0, 1}, -1.0}, {{1, 2}, {2, 3}, -1.0}};
        return s;
    case EquationId::Mixed:
        // v_ty v_xz - v_tz v_xy + v_tt v_xx - v_tx^2 = theta
        s.name = "mixed";
        s.coords = {"t", "x", "y", "z"};
        s.quad = {{{0, 2}, {1, 3}, 1.0},
                  {{0, 3}, {1, 2}, -1.0},
                  {{0, 0}, {1, 1}, 1.0},
                  {{0, 1}, {0, 1}, -1.0}};
        s.constant = -opt.theta;
        return s;
    case EquationId::MixedLegendre:
        // w_tq w_py - w_pq w_ty + w_tt w_qq - w_tq^2 + theta (w_pp w_qq - w_pq^2) = 0
        s.name = "mixed-legendre";
        s.coords = {"p", "q", "t", "y"};
        s.quad = {{{1, 2}, {0, 3}, 1.0},        {{0, 1}, {2, 3}, -1.0},
                  {{2, 2}, {1, 1}, 1.0},        {{1, 2}, {1, 2}, -1.0},
                  {{0, 0}, {1, 1}, opt.theta},  {{0, 1}, {0, 1}, -opt.theta}};
        return s;
    case EquationId::Asymm:
        // u_tx u_ty - u_tt u_xy + A u_tz + B u_xz + C u_xx = 0
        s.name = "asymm";
        s.coords = {"t", "x", "y", "z"};
        s.quad = {{{0, 1}, {0, 2}, 1.0}, {{0, 0}, {1, 2}, -1.0}};
        s.lin = {{{0, 3}, opt.A}, {{1, 3}, opt.B}, {{1, 1}, opt.C}};
        return s;
    case EquationId::Evolution2: {
        EquationOptions e = opt;
        e.B = 0.0;
        PdeSpec ev = builtin_pde(EquationId::Asymm, e);
        ev.name = "evolution2";
        return ev;
    }
    }
    throw UnknownEquation("unknown equation id");
}

inline SystemSpec builtin_system(SystemId id) {
    SystemSpec sys;
    auto lin_eq = [&](std::string name, std::vector<LinTerm> terms) {
        PdeSpec s;
        s.name = std::move(name);
        s.coords = sys.coords;
        s.lin = std::move(terms);
        return s;
    };
    switch (id) {
    case SystemId::EqSymm:
        sys.name = "eq-symm";
        sys.coords = {"x", "r", "t", "z"};
        sys.equations = {
            lin_eq("eq-symm-1", {{{1, 2}, 1.0}, {{1, 1}, 1.0}, {{0, 2}, -1.0}}),
            lin_eq("eq-symm-2", {{{0, 0}, 1.0}, {{1, 3}, 1.0}}),
            lin_eq("eq-symm-3", {{{1, 0}, 1.0}, {{0, 2}, 1.0}, {{2, 3}, 1.0}}),
        };
        return sys;
    case SystemId::HighSymm:
        sys.name = "high-symm";
        sys.coords = {"x", "r", "t", "z"};
        sys.equations = {
            lin_eq("high-symm-1", {{{1, 1}, 1.0}, {{0, 2}, -1.0}}),
            lin_eq("high-symm-2", {{{1, 0}, 1.0}, {{2, 3}, 1.0}}),
            lin_eq("high-symm-3", {{{0, 0}, 1.0}, {{1, 3}, 1.0}}),
        };
        return sys;
    case SystemId::MixedLin:
        sys.name = "mixed-lin";
        sys.coords = {"eta", "xi", "q", "y"};
        sys.equations = {
            lin_eq("mixed-lin-1", {{{0, 0}, 1.0}, {{1, 1}, 1.0}, {{1, 2}, -1.0}}),
            lin_eq("mixed-lin-2", {{{1, 2}, 1.0}, {{0, 2}, -1.0}, {{1, 3}, 1.0}}),
            lin_eq("mixed-lin-3", {{{1, 2}, 1.0}, {{0, 2}, 1.0}, {{2, 2}, -1.0}, {{0, 3}, 1.0}}),
        };
        return sys;
    }
    throw UnknownEquation("unknown system id");
}

inline EquationId parse_equation_id(const std::string& name) {
    if (name == "cma") return EquationId::CmaElliptic;
    if (name == "cma-general") return EquationId::CmaGeneral;
    if (name == "hcma-legendre") return EquationId::HcmaLegendre;
    if (name == "heavenly2") return EquationId::Heavenly2;
    if (name == "heavenly2-legendre") return EquationId::Heavenly2Legendre;
    if (name == "mixed") return EquationId::Mixed;
    if (name == "mixed-legendre") return EquationId::MixedLegendre;
    if (name == "asymm") return EquationId::Asymm;
    if (name == "evolution2") return EquationId::Evolution2;
    throw UnknownEquation("unknown equation: " + name);
}

inline SystemId parse_system_id(const std::string& name) {
    if (name == "eq-symm") return SystemId::EqSymm;
    if (name == "high-symm") return SystemId::HighSymm;
    if (name == "mixed-lin") return SystemId::MixedLin;
    throw UnknownEquation("unknown system: " + name);
}

inline std::string equation_name(EquationId id) { return builtin_pde(id).name; }

} // namespace heavenly
