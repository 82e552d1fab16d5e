#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heavenly/catalog.hpp"
#include "heavenly/classes.hpp"
#include "heavenly/pde.hpp"
#include "heavenly/poly.hpp"
#include "heavenly/rational.hpp"

namespace heavenly {

/// Kind of each ansatz term as seen by the decomposition: arbitrary-g terms
/// carry independent unknowns g'', squares contribute the constant 2.
struct TermPlan {
    TermTag tag = TermTag::Arb;
    std::size_t conj_of = 0;
};

inline std::vector<TermPlan> plans_of(ClassId id, const ParamMap& p, int n) {
    const auto scheme = build_scheme<Complex>(id, p, n);
    std::vector<TermPlan> plans;
    for (const auto& t : scheme.terms) plans.push_back({t.tag, t.conj_of});
    return plans;
}

/// A PDE with exact coefficients, for polynomial generation.
struct ExactPde {
    std::vector<std::tuple<HessIdx, HessIdx, RatComplex>> quad;
    std::vector<std::pair<HessIdx, RatComplex>> lin;
    RatComplex constant;
};

inline ExactPde exactify(const PdeSpec& spec) {
    ExactPde out;
    for (const auto& q : spec.quad)
        out.quad.emplace_back(q.a, q.b, RatComplex::from_complex(q.coef));
    for (const auto& l : spec.lin) out.lin.emplace_back(l.a, RatComplex::from_complex(l.coef));
    out.constant = RatComplex::from_complex(spec.constant);
    return out;
}

/// The determining algebraic system of an n-term ansatz: one polynomial per
/// independent derivative product, in the 4n coefficient symbols c[j][mu]
/// (variable index 4j + mu).
struct DeterminingSystem {
    int n = 0;
    std::map<std::pair<int, int>, Poly> quad; // (i <= j) coefficient of g_i'' g_j''
    std::map<int, Poly> lin;                  // coefficient of g_i''
    Poly constant;
    bool has_constant = false; // whether a free-term condition can arise at all

    std::size_t condition_count() const {
        return quad.size() + lin.size() + (has_constant ? 1 : 0);
    }

    /// All conditions with display names, constant last.
    std::vector<std::pair<std::string, const Poly*>> named() const {
        std::vector<std::pair<std::string, const Poly*>> out;
        for (const auto& [key, poly] : quad)
            out.emplace_back("quad[" + std::to_string(key.first + 1) + "][" +
                                 std::to_string(key.second + 1) + "]",
                             &poly);
        for (const auto& [i, poly] : lin)
            out.emplace_back("lin[" + std::to_string(i + 1) + "]", &poly);
        if (has_constant) out.emplace_back("const", &constant);
        return out;
    }
};

inline std::vector<std::string> coeff_var_names(int n) {
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j)
        for (int mu = 0; mu < 4; ++mu)
            names.push_back("c" + std::to_string(j + 1) + "_" + std::to_string(mu + 1));
    return names;
}

inline DeterminingSystem generate(const ExactPde& pde, int n,
                                  const std::vector<TermPlan>& plans) {
    if (n < 1 || static_cast<int>(plans.size()) != n)
        throw ArityError("generate needs one term plan per term");
    DeterminingSystem ds;
    ds.n = n;
    auto is_square = [&](int i) { return plans[i].tag == TermTag::Square; };
    bool any_square = false;
    for (int i = 0; i < n; ++i) any_square = any_square || is_square(i);
    const bool has_quad_part = !pde.quad.empty();
    const bool lin_reachable = !pde.lin.empty() || (has_quad_part && any_square);
    ds.has_constant = !pde.constant.is_zero() ||
                      (any_square && (has_quad_part || !pde.lin.empty()));
    if (lin_reachable)
        for (int i = 0; i < n; ++i)
            if (!is_square(i)) ds.lin[i] = Poly{};
    if (has_quad_part)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!is_square(i) && !is_square(j)) ds.quad[{i, j}] = Poly{};

    auto var = [](int term, int mu) { return 4 * term + mu; };
    auto entry = [&](int term, const HessIdx& a) {
        return Monomial{static_cast<std::uint16_t>(var(term, a.mu)),
                        static_cast<std::uint16_t>(var(term, a.nu))};
    };

    const RatComplex two = RatComplex(2);
    for (const auto& [a, b, coef] : pde.quad) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Monomial m = entry(i, a);
                const Monomial mb = entry(j, b);
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                RatComplex c = coef;
                if (is_square(i)) c = c * two;
                if (is_square(j)) c = c * two;
                if (is_square(i) && is_square(j))
                    ds.constant.add_term(m, c);
                else if (is_square(i))
                    ds.lin[j].add_term(m, c);
                else if (is_square(j))
                    ds.lin[i].add_term(m, c);
                else
                    ds.quad[{std::min(i, j), std::max(i, j)}].add_term(m, c);
            }
        }
    }
    for (const auto& [a, coef] : pde.lin) {
        for (int i = 0; i < n; ++i) {
            const Monomial m = entry(i, a);
            if (is_square(i))
                ds.constant.add_term(m, coef * two);
            else
                ds.lin[i].add_term(m, coef);
        }
    }
    if (!pde.constant.is_zero()) ds.constant.add_term({}, pde.constant);
    return ds;
}

inline DeterminingSystem generate(const PdeSpec& spec, int n,
                                  const std::vector<TermPlan>& plans) {
    return generate(exactify(spec), n, plans);
}

inline std::vector<DeterminingSystem> generate(const SystemSpec& sys, int n,
                                               const std::vector<TermPlan>& plans) {
    std::vector<DeterminingSystem> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) out.push_back(generate(eq, n, plans));
    return out;
}

// ---------------------------------------------------------------------------
// Certification of the catalogued coefficient relations against the
// regenerated determining systems.
// ---------------------------------------------------------------------------

/// Classes whose coefficient tables are rational functions of the free
/// parameters (no square roots, no conjugate-pair terms): certified in exact
/// arithmetic. The others go through floating point.
inline bool class_exact_certifiable(ClassId id) {
    switch (id) {
    case ClassId::H2Equal:
    case ClassId::H2HighI:
    case ClassId::H2HighII:
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII:
    case ClassId::MixedClass:
    case ClassId::MixedSeries:
    case ClassId::AsymmClass:
    case ClassId::EvolutionClass:
        return true;
    default:
        return false;
    }
}

struct CertifyReport {
    ClassId cls{};
    std::string target;      // equation/system the relations were checked against
    int trials = 0;
    bool exact_path = false;
    bool mutated = false;
    int failed_trials = 0;   // trials where some condition came out nonzero
    double max_rel_residual = 0.0; // float path: |value| / (1 + term scale)
    bool all_exact_zero = false;

    bool certified() const {
        return mutated ? false : (exact_path ? all_exact_zero : max_rel_residual < 1e-12);
    }
};

namespace detail {

template <class C>
std::vector<C> scheme_assignment(const Scheme<C>& s, CoordTransform t) {
    std::vector<C> x;
    x.reserve(4 * s.terms.size());
    for (const auto& term : s.terms) {
        std::array<C, 4> c = term.coeffs;
        switch (t) {
        case CoordTransform::Identity:
            break;
        case CoordTransform::XyztToTxyz:
            c = {term.coeffs[3], term.coeffs[0], term.coeffs[1], term.coeffs[2]};
            break;
        case CoordTransform::EtaXiToPt:
            c = {term.coeffs[0] + term.coeffs[1], term.coeffs[2],
                 term.coeffs[0] - term.coeffs[1], term.coeffs[3]};
            break;
        }
        for (int mu = 0; mu < 4; ++mu) x.push_back(c[mu]);
    }
    return x;
}

inline RatComplex rat_of(const RatLit& lit, ParamDomain d) {
    if (d == ParamDomain::Angle) throw DomainError("angles have no exact rational value");
    return {Rat(lit.nre, lit.dre), Rat(lit.nim, lit.dim)};
}

} // namespace detail

/// Substitute the class relations into the regenerated determining system at
/// random small-rational parameter draws; report exact zeros (or scaled
/// floating residuals for the classes outside the exact path). With mutate,
/// one dependent coefficient is multiplied by 8/7 and the report counts the
/// trials in which some condition becomes decisively nonzero.
inline CertifyReport certify(ClassId id, int trials, std::uint64_t seed, int n = 0,
                             bool mutate = false) {
    if (n <= 0) n = class_default_n(id);
    CertifyReport rep;
    rep.cls = id;
    rep.trials = trials;
    rep.mutated = mutate;
    rep.exact_path = class_exact_certifiable(id);
    rep.all_exact_zero = true;

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        RatParamMap raw;
        ParamMap p;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100) throw ConstraintError("no admissible draw for certify");
            raw = draw_raw_params(id, rng, n);
            p = resolve_raw_params(raw);
            if (constraint_check(id, p, n).empty()) break;
        }
        const Binding bind = class_binding(id, p);
        const auto plans = plans_of(id, p, n);

        // target: the bound linear system when there is one, else the PDE
        std::vector<DeterminingSystem> systems;
        CoordTransform transform = CoordTransform::Identity;
        if (bind.system) {
            systems = generate(builtin_system(*bind.system), static_cast<int>(plans.size()),
                               plans);
            rep.target = builtin_system(*bind.system).name;
        } else {
            transform = bind.transform;
            systems = {generate(builtin_pde(bind.equation, bind.options),
                                static_cast<int>(plans.size()), plans)};
            rep.target = builtin_pde(bind.equation).name;
        }

        bool trial_failed = false;
        if (rep.exact_path) {
            ParamMapT<RatComplex> rp;
            for (const auto& [k, v] : raw) rp[k] = detail::rat_of(v.first, v.second);
            Scheme<RatComplex> scheme = build_scheme<RatComplex>(id, rp, n);
            if (mutate)
                scheme.terms[0].coeffs[3] =
                    scheme.terms[0].coeffs[3] * RatComplex(Rat(8, 7));
            // asymm certifies against its own exact-coefficient equation
            if (!bind.system) {
                ExactPde exact = exactify(builtin_pde(bind.equation));
                if (bind.equation == EquationId::Asymm ||
                    bind.equation == EquationId::Evolution2) {
                    const RatComplex A = detail::rat_of(raw.at("A").first, ParamDomain::Real);
                    const RatComplex B = id == ClassId::EvolutionClass
                                             ? RatComplex()
                                             : detail::rat_of(raw.at("B").first,
                                                              ParamDomain::Real);
                    const RatComplex Cc = build_scheme<RatComplex>(id, rp, n).derived.at("C");
                    exact.lin = {{HessIdx(0, 3), A}, {HessIdx(1, 3), B}, {HessIdx(1, 1), Cc}};
                }
                systems = {generate(exact, static_cast<int>(plans.size()), plans)};
            }
            const auto x = detail::scheme_assignment(scheme, transform);
            for (const auto& ds : systems) {
                for (const auto& [name, poly] : ds.named()) {
                    if (!poly->eval_exact(x).is_zero()) {
                        trial_failed = true;
                        rep.all_exact_zero = false;
                    }
                }
            }
        } else {
            Scheme<Complex> scheme = build_scheme<Complex>(id, p, n);
            if (mutate) scheme.terms[0].coeffs[3] *= 8.0 / 7.0;
            const auto x = detail::scheme_assignment(scheme, transform);
            for (const auto& ds : systems) {
                for (const auto& [name, poly] : ds.named()) {
                    double scale = 0.0;
                    const Complex value = poly->eval(x, &scale);
                    const double rel = std::abs(value) / (1.0 + scale);
                    rep.max_rel_residual = std::max(rep.max_rel_residual, rel);
                    if (rel > 1e-8) trial_failed = true;
                }
            }
        }
        if (trial_failed) ++rep.failed_trials;
    }
    return rep;
}

} // namespace heavenly
