#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heavenly/catalog.hpp"
#include "heavenly/closed_forms.hpp"

namespace heavenly {

/// Legendre-transform existence condition of the given transformed equation,
/// evaluated on a jet in that equation's coordinates.
inline Complex legendre_condition(EquationId id, const Jet4& j) {
    switch (id) {
    case EquationId::HcmaLegendre: // w_pp w_pbpb - w_ppb^2
        return j.h(0, 0) * j.h(1, 1) - j.h(0, 1) * j.h(0, 1);
    case EquationId::Heavenly2Legendre: // th_tt th_rr - th_rt^2, coords (x,r,t,z)
        return j.h(2, 2) * j.h(1, 1) - j.h(1, 2) * j.h(1, 2);
    case EquationId::MixedLegendre: // w_pp w_qq - w_pq^2, coords (p,q,t,y)
        return j.h(0, 0) * j.h(1, 1) - j.h(0, 1) * j.h(0, 1);
    default:
        throw UnknownEquation("no Legendre condition for " + builtin_pde(id).name);
    }
}

inline bool has_legendre_condition(EquationId id) {
    return id == EquationId::HcmaLegendre || id == EquationId::Heavenly2Legendre ||
           id == EquationId::MixedLegendre;
}

/// A class's closed-form Legendre condition, evaluated at the supplied
/// per-term second derivatives. Classes without a closed form return
/// nullopt.
inline std::optional<Scaled> closed_form_condition(ClassId id, const ParamMap& p,
                                                   const std::vector<Complex>& g2) {
    auto v = [&](const std::string& k) { return pget(p, k); };
    switch (id) {
    case ClassId::HcmaI:
        return closed::legendre_closed_hcma1(v("A"), v("a2"), v("d1"), v("d2"), g2[0], g2[1], g2[3], g2[2]);
    case ClassId::HcmaII:
        return closed::legendre_closed_hcma2(v("d4"), g2[2], g2[3]);
    case ClassId::HcmaIII:
        return closed::legendre_closed_hcma3(v("A2"), v("B3"), v("B4"), v("C2"), v("H2"), g2[0], g2[1],
                                   g2[2], g2[3]);
    case ClassId::H2Equal:
    case ClassId::H2HighII:
        return closed::legendre_closed_equal(v("a2"), v("a3"), v("b2"), v("b3"), v("c2"), v("c3"), v("d2"),
                               v("d3"), g2[0], g2[1], g2[2], g2[3]);
    case ClassId::H2HighI:
        return closed::legendre_closed_high1(v("a1"), v("a2"), v("b1"), v("b2"), v("c1"), v("c2"), v("d1"),
                                 v("d2"), g2[0], g2[1], g2[2], g2[3]);
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighII: {
        std::vector<Complex> zeta(g2.size()), gamma(g2.size());
        for (std::size_t j = 0; j < g2.size(); ++j) {
            const std::string sj = std::to_string(j + 1);
            zeta[j] = v("zeta" + sj);
            gamma[j] = v("gamma" + sj);
        }
        return closed::series_two_by_two(g2, zeta, gamma);
    }
    case ClassId::H2SeriesHighI: {
        std::vector<Complex> u(g2.size()), gamma(g2.size());
        for (std::size_t j = 0; j < g2.size(); ++j) {
            const std::string sj = std::to_string(j + 1);
            const Complex al = v("alpha" + sj), ga = v("gamma" + sj);
            u[j] = ga * ga / al;
            gamma[j] = ga;
        }
        return closed::series_two_by_two(g2, u, gamma);
    }
    case ClassId::MixedClass:
        return closed::legendre_closed_mixed(v("a1"), v("a2"), v("b1"), v("b2"), v("c1"), v("c2"),
                                   v("d1"), v("d2"), g2[0], g2[1], g2[2], g2[3]);
    case ClassId::MixedSeries: {
        std::vector<Complex> u(g2.size()), w(g2.size());
        for (std::size_t j = 0; j < g2.size(); ++j) {
            const std::string sj = std::to_string(j + 1);
            const Complex al = v("alpha" + sj), ga = v("gamma" + sj);
            u[j] = al + ga;
            w[j] = (al * al + ga * ga) / ga;
        }
        return closed::series_two_by_two(g2, u, w);
    }
    default:
        return std::nullopt;
    }
}

/// A class's closed-form Jacobian determinant. CMA needs the evaluation
/// point for its region factors.
inline std::optional<Scaled> jacobian_det_closed(ClassId id, const ParamMap& p,
                                                 const std::vector<Complex>& g1,
                                                 const Point4* x = nullptr) {
    auto v = [&](const std::string& k) { return pget(p, k); };
    auto prod4 = [&] { return g1[0] * g1[1] * g1[2] * g1[3]; };
    switch (id) {
    case ClassId::CmaSq: {
        if (!x) throw ConfigError("cma-sq closed determinant needs a point");
        const Complex a2 = v("a2"), a2b = std::conj(a2);
        const Complex s1 = a2b * (*x)[0] + a2 * (*x)[1] + v("beta2");
        const Complex s2 = 2.0 * (*x)[0] * a2b * a2 + 2.0 * (*x)[1] * a2b * a2 +
                           (*x)[2] * a2 + (*x)[3] * a2b + 2.0 * v("beta3") * a2b * a2;
        return closed::det_closed_cma(a2, v("d3"), s1, s2, g1[2], g1[3]);
    }
    case ClassId::HcmaI:
        return closed::det_closed_hcma1(v("A"), v("a2"), v("d1"), v("d2"), g1[0], g1[1], g1[3],
                                   g1[2]);
    case ClassId::HcmaII:
        return closed::det_closed_hcma2(v("a4"), v("b4"), v("d4"), g1[0], g1[1], g1[2], g1[3]);
    case ClassId::HcmaIII:
        return closed::det_closed_hcma3(v("A2"), v("B3"), v("C2"), v("H2"), g1[0], g1[1], g1[2],
                                   g1[3]);
    case ClassId::H2Equal:
    case ClassId::H2HighII: {
        const Scaled f = id == ClassId::H2Equal
                             ? closed::det_poly_equal(v("a2"), v("a3"), v("b2"), v("b3"),
                                                      v("c2"), v("c3"), v("d2"), v("d3"))
                             : closed::det_poly_high2(v("a2"), v("a3"), v("b2"), v("b3"),
                                                      v("c2"), v("c3"), v("d2"), v("d3"));
        const Complex den = v("a3") * v("b3") * v("c3") * v("d3");
        const Complex pre = prod4() / (den * den);
        return Scaled{pre * f.v, std::abs(pre) * f.scale};
    }
    case ClassId::H2HighI: {
        const Scaled f = closed::det_poly_high1(v("a1"), v("a2"), v("b1"), v("b2"), v("c1"),
                                                v("c2"), v("d1"), v("d2"));
        const Complex den = v("a1") * v("a2") * v("b1") * v("b2") * v("c1") * v("c2") *
                            v("d1") * v("d2");
        const Complex pre = prod4() / den;
        return Scaled{pre * f.v, std::abs(pre) * f.scale};
    }
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII: {
        // first four terms under the series renaming
        auto g = [&](const char* base, int j) { return v(base + std::to_string(j)); };
        if (id == ClassId::H2SeriesHighI) {
            const Scaled f = closed::det_poly_high1(g("alpha", 1), g("gamma", 1), g("alpha", 2),
                                                    g("gamma", 2), g("alpha", 3), g("gamma", 3),
                                                    g("alpha", 4), g("gamma", 4));
            Complex den = 1.0;
            for (int j = 1; j <= 4; ++j) den *= g("alpha", j) * g("gamma", j);
            const Complex pre = prod4() / den;
            return Scaled{pre * f.v, std::abs(pre) * f.scale};
        }
        const Scaled f = id == ClassId::H2SeriesEqual
                             ? closed::det_poly_equal(g("gamma", 1), g("zeta", 1), g("gamma", 2),
                                                      g("zeta", 2), g("gamma", 3), g("zeta", 3),
                                                      g("gamma", 4), g("zeta", 4))
                             : closed::det_poly_high2(g("gamma", 1), g("zeta", 1), g("gamma", 2),
                                                      g("zeta", 2), g("gamma", 3), g("zeta", 3),
                                                      g("gamma", 4), g("zeta", 4));
        Complex den = 1.0;
        for (int j = 1; j <= 4; ++j) den *= g("zeta", j) * g("zeta", j);
        const Complex pre = prod4() / den;
        return Scaled{pre * f.v, std::abs(pre) * f.scale};
    }
    case ClassId::MixedClass:
    case ClassId::MixedSeries: {
        const bool series = id == ClassId::MixedSeries;
        auto row = [&](int r) -> std::pair<Complex, Complex> {
            if (series) {
                const std::string sj = std::to_string(r + 1);
                return {v("alpha" + sj), v("gamma" + sj)};
            }
            static const char* rows = "abcd";
            const std::string base(1, rows[r]);
            return {v(base + "1"), v(base + "2")};
        };
        const auto [a1, a2] = row(0);
        const auto [b1, b2] = row(1);
        const auto [c1, c2] = row(2);
        const auto [d1, d2] = row(3);
        const Scaled f = closed::det_poly_mixed(a1, a2, b1, b2, c1, c2, d1, d2);
        const Complex den = a2 * b2 * c2 * d2;
        const Complex pre = -prod4() / (den * den);
        return Scaled{pre * f.v, std::abs(pre) * f.scale};
    }
    case ClassId::AsymmClass:
    case ClassId::EvolutionClass: {
        const Complex B = id == ClassId::EvolutionClass ? Complex(0.0) : v("B");
        const Scaled f = closed::asymm_det_factor(v("A"), B, v("a1"), v("a3"), v("b2"),
                                                  v("b3"), v("c1"), v("c3"), v("c4"), v("d2"),
                                                  v("d3"));
        const Complex pre = prod4() / (v("c1") * v("A") * v("a3"));
        return Scaled{pre * f.v, std::abs(pre) * f.scale};
    }
    default:
        return std::nullopt; // reference classes carry no closed determinant
    }
}

/// Outcome of the non-invariance criterion at one point.
struct ConditionReport {
    Complex generic_value{};
    std::optional<Complex> closed_form_value;
    bool satisfied = false;
    std::vector<std::pair<std::string, Complex>> region_factors;
};

/// The Corollary criterion: the Jacobian of the Sigma-map must be
/// nonsingular (generic and closed form), with the CMA region factors
/// checked separately.
inline ConditionReport noninvariance_verdict(ClassId id, const Instance& inst,
                                             const Point4& x) {
    ConditionReport rep;
    const Matrix4 m = jacobian_matrix(inst.ansatz, x);
    rep.generic_value = det4(m);
    const double gen_scale = det4_scale(m);
    bool ok = decisively_nonzero({rep.generic_value, gen_scale});

    const auto g1 = term_first_derivs(inst.ansatz, x);
    if (const auto closed_det = jacobian_det_closed(id, inst.params, g1, &x)) {
        rep.closed_form_value = closed_det->v;
        ok = ok && decisively_nonzero(*closed_det);
    }

    auto form_scale = [&](std::size_t j) {
        double s = 1.0;
        for (const auto& c : inst.ansatz.terms[j].form.coeffs) s += std::abs(c);
        return s;
    };
    if (id == ClassId::CmaSq) {
        rep.region_factors.emplace_back("Gamma1", g1[0]); // 2*Sigma1
        rep.region_factors.emplace_back("Gamma2", g1[1]); // 2*Sigma2
        rep.region_factors.emplace_back("g3'", g1[2]);
        for (std::size_t k = 0; k < rep.region_factors.size(); ++k)
            ok = ok && decisively_nonzero({rep.region_factors[k].second, form_scale(k)});
    } else {
        const std::size_t rows = std::min<std::size_t>(4, g1.size());
        for (std::size_t j = 0; j < rows; ++j) {
            rep.region_factors.emplace_back("g" + std::to_string(j + 1) + "'", g1[j]);
            ok = ok && decisively_nonzero({g1[j], form_scale(j)});
        }
    }
    rep.satisfied = ok;
    return rep;
}

} // namespace heavenly
