#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "heavenly/ansatz.hpp"
#include "heavenly/classes.hpp"
#include "heavenly/closed_forms.hpp"
#include "heavenly/pde.hpp"
#include "heavenly/rng.hpp"
#include "heavenly/scalar_fn.hpp"

namespace heavenly {

/// Linear map from a class's ansatz coordinates to its equation coordinates.
enum class CoordTransform {
    Identity,
    XyztToTxyz, // asymmetric family: ansatz (x,y,z,t), equation (t,x,y,z)
    EtaXiToPt,  // mixed family: eta = p + t, xi = p - t
};

inline LinearForm transform_form(const LinearForm& f, CoordTransform t) {
    LinearForm g = f;
    switch (t) {
    case CoordTransform::Identity:
        return g;
    case CoordTransform::XyztToTxyz:
        g.coeffs = {f.coeffs[3], f.coeffs[0], f.coeffs[1], f.coeffs[2]};
        return g;
    case CoordTransform::EtaXiToPt:
        g.coeffs = {f.coeffs[0] + f.coeffs[1], f.coeffs[2], f.coeffs[0] - f.coeffs[1],
                    f.coeffs[3]};
        return g;
    }
    return g;
}

inline Ansatz transform_ansatz(const Ansatz& a, CoordTransform t) {
    Ansatz out = a;
    for (auto& term : out.terms) term.form = transform_form(term.form, t);
    return out;
}

struct Binding {
    EquationId equation;
    EquationOptions options;
    std::optional<SystemId> system;
    CoordTransform transform = CoordTransform::Identity;
};

inline Binding class_binding(ClassId id, const ParamMap& params) {
    switch (id) {
    case ClassId::CmaSq:
        return {EquationId::CmaElliptic, {}, std::nullopt, CoordTransform::Identity};
    case ClassId::HcmaI:
    case ClassId::HcmaII:
    case ClassId::HcmaIII:
    case ClassId::RefMalykhExp:
        return {EquationId::HcmaLegendre, {}, std::nullopt, CoordTransform::Identity};
    case ClassId::H2Equal:
    case ClassId::H2SeriesEqual:
        return {EquationId::Heavenly2Legendre, {}, SystemId::EqSymm, CoordTransform::Identity};
    case ClassId::H2HighI:
    case ClassId::H2HighII:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII:
        return {EquationId::Heavenly2Legendre, {}, SystemId::HighSymm, CoordTransform::Identity};
    case ClassId::MixedClass:
    case ClassId::MixedSeries:
    case ClassId::RefSheftel:
        return {EquationId::MixedLegendre, {}, SystemId::MixedLin, CoordTransform::EtaXiToPt};
    case ClassId::AsymmClass:
    case ClassId::EvolutionClass: {
        EquationOptions opt;
        opt.A = pget(params, "A");
        opt.B = id == ClassId::EvolutionClass ? Complex(0.0) : pget(params, "B");
        // C is fixed by the class relations
        const Complex c1 = pget(params, "c1"), c3 = pget(params, "c3"), c4 = pget(params, "c4");
        opt.C = -c3 * (opt.B * c1 + opt.A * c4) / (c1 * c1);
        const EquationId eq =
            id == ClassId::EvolutionClass ? EquationId::Evolution2 : EquationId::Asymm;
        return {eq, opt, std::nullopt, CoordTransform::XyztToTxyz};
    }
    default:
        throw ConfigError("unknown class id");
    }
}

/// Classes living on barred/unbarred coordinates, where real-slice reality
/// is meaningful.
inline bool class_on_barred_coords(ClassId id) {
    switch (id) {
    case ClassId::CmaSq:
    case ClassId::HcmaI:
    case ClassId::HcmaII:
    case ClassId::HcmaIII:
    case ClassId::RefMalykhExp:
        return true;
    default:
        return false;
    }
}

// ---------------------------------------------------------------------------
// Constraint check: each class's side inequalities plus the
// parameter-only factors of its closed-form Jacobian determinant.
// ---------------------------------------------------------------------------

struct Violation {
    std::string factor;
    Complex value;
};

inline void require_nonzero(std::vector<Violation>& out, const std::string& name, Complex v,
                            double scale = 0.0) {
    Scaled s{v, scale};
    if (!decisively_nonzero(s)) out.push_back({name, v});
}

inline std::vector<Violation> constraint_check(ClassId id, const ParamMap& p, int n);

/// Reference classes have no closed determinant; the nonsingularity of the
/// first four Sigma rows is their non-invariance side condition.
inline void check_leading_rows_independent(std::vector<Violation>& out, ClassId id,
                                           const ParamMap& p, int n) {
    const Scheme<Complex> s = build_scheme<Complex>(id, p, n);
    if (s.terms.size() < 4) return;
    std::array<std::array<Complex, 4>, 4> m{};
    for (int j = 0; j < 4; ++j) m[j] = s.terms[j].coeffs;
    auto d3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    const Complex det = m[0][0] * d3(1, 2, 3, 1, 2, 3) - m[0][1] * d3(1, 2, 3, 0, 2, 3) +
                        m[0][2] * d3(1, 2, 3, 0, 1, 3) - m[0][3] * d3(1, 2, 3, 0, 1, 2);
    double scale = 0.0;
    for (int j = 0; j < 4; ++j) {
        double rowsum = 0.0;
        for (const auto& c : m[j]) rowsum += std::abs(c);
        scale = std::max(scale, rowsum);
    }
    require_nonzero(out, "coefficient rows determinant", det, scale * scale * scale * scale);
}

inline std::vector<Violation> constraint_check(ClassId id, const ParamMap& p, int n = 0) {
    std::vector<Violation> out;
    auto value = [&](const std::string& k) { return pget(p, k); };
    if (n <= 0) n = class_default_n(id);

    switch (id) {
    case ClassId::CmaSq:
        require_nonzero(out, "a2", value("a2"));
        return out;
    case ClassId::HcmaI: {
        require_nonzero(out, "d1*d2", value("d1") * value("d2"));
        require_nonzero(out, "a2", value("a2"));
        require_nonzero(out, "A", value("A"));
        const Scaled f = closed::hcma1_det_factor(value("d1"), value("d2"));
        if (!decisively_nonzero(f))
            out.push_back({"d1^6-d2^6-3d1^4d2^2+3d1^2d2^4", f.v});
        return out;
    }
    case ClassId::HcmaII: {
        require_nonzero(out, "d4", value("d4"));
        const Complex a4 = value("a4"), b4 = value("b4");
        const Complex pair = std::conj(a4) * b4 - a4 * std::conj(b4);
        require_nonzero(out, "conj(a4)b4-a4conj(b4)", pair,
                        2.0 * std::abs(a4) * std::abs(b4));
        return out;
    }
    case ClassId::HcmaIII: {
        const Complex B3 = value("B3"), B4 = value("B4");
        const Complex sr = std::sqrt(B3 * B3 + B4 * B4);
        require_nonzero(out, "B3-B4+sqrt(B3^2+B4^2)", B3 - B4 + sr,
                        std::abs(B3) + std::abs(B4) + std::abs(sr));
        require_nonzero(out, "A2*B3*C2*H2",
                        value("A2") * B3 * value("C2") * value("H2"));
        return out;
    }
    case ClassId::H2Equal:
    case ClassId::H2HighII: {
        require_nonzero(out, "a3*b3*c3*d3",
                        value("a3") * value("b3") * value("c3") * value("d3"));
        const Scaled f =
            id == ClassId::H2Equal
                ? closed::det_poly_equal(value("a2"), value("a3"), value("b2"), value("b3"),
                                         value("c2"), value("c3"), value("d2"), value("d3"))
                : closed::det_poly_high2(value("a2"), value("a3"), value("b2"), value("b3"),
                                         value("c2"), value("c3"), value("d2"), value("d3"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::H2HighI: {
        Complex prod = 1.0;
        for (const char* k : {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"})
            prod *= value(k);
        require_nonzero(out, "a1a2b1b2c1c2d1d2", prod);
        const Scaled f =
            closed::det_poly_high1(value("a1"), value("a2"), value("b1"), value("b2"),
                                   value("c1"), value("c2"), value("d1"), value("d2"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighII: {
        for (int j = 1; j <= n; ++j)
            require_nonzero(out, "zeta" + std::to_string(j),
                            value("zeta" + std::to_string(j)));
        const Scaled f = id == ClassId::H2SeriesEqual
                             ? closed::det_poly_equal(value("gamma1"), value("zeta1"),
                                                      value("gamma2"), value("zeta2"),
                                                      value("gamma3"), value("zeta3"),
                                                      value("gamma4"), value("zeta4"))
                             : closed::det_poly_high2(value("gamma1"), value("zeta1"),
                                                      value("gamma2"), value("zeta2"),
                                                      value("gamma3"), value("zeta3"),
                                                      value("gamma4"), value("zeta4"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::H2SeriesHighI: {
        for (int j = 1; j <= n; ++j) {
            require_nonzero(out, "alpha" + std::to_string(j),
                            value("alpha" + std::to_string(j)));
            require_nonzero(out, "gamma" + std::to_string(j),
                            value("gamma" + std::to_string(j)));
        }
        const Scaled f = closed::det_poly_high1(value("alpha1"), value("gamma1"),
                                                value("alpha2"), value("gamma2"),
                                                value("alpha3"), value("gamma3"),
                                                value("alpha4"), value("gamma4"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::MixedClass: {
        require_nonzero(out, "a2*b2*c2*d2",
                        value("a2") * value("b2") * value("c2") * value("d2"));
        const Scaled f =
            closed::det_poly_mixed(value("a1"), value("a2"), value("b1"), value("b2"),
                                   value("c1"), value("c2"), value("d1"), value("d2"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::MixedSeries: {
        for (int j = 1; j <= n; ++j)
            require_nonzero(out, "gamma" + std::to_string(j),
                            value("gamma" + std::to_string(j)));
        const Scaled f = closed::det_poly_mixed(value("alpha1"), value("gamma1"),
                                                value("alpha2"), value("gamma2"),
                                                value("alpha3"), value("gamma3"),
                                                value("alpha4"), value("gamma4"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::AsymmClass:
    case ClassId::EvolutionClass: {
        const Complex B = id == ClassId::EvolutionClass ? Complex(0.0) : value("B");
        require_nonzero(out, "A*c1*a3*c4",
                        value("A") * value("c1") * value("a3") * value("c4"));
        const Scaled f = closed::asymm_det_factor(value("A"), B, value("a1"), value("a3"),
                                                  value("b2"), value("b3"), value("c1"),
                                                  value("c3"), value("c4"), value("d2"),
                                                  value("d3"));
        if (!decisively_nonzero(f)) out.push_back({"jacobian polynomial", f.v});
        return out;
    }
    case ClassId::RefSheftel: {
        for (int j = 1; j <= n; ++j) {
            const std::string sj = std::to_string(j);
            require_nonzero(out, "A" + sj, value("A" + sj));
            const Complex c = value("C" + sj), h = value("H" + sj);
            require_nonzero(out, "C" + sj + "^2+H" + sj + "^2", c * c + h * h);
        }
        if (out.empty()) check_leading_rows_independent(out, id, p, n);
        return out;
    }
    case ClassId::RefMalykhExp: {
        const Complex a = value("a");
        require_nonzero(out, "a", a);
        for (int j = 1; j <= n; ++j) {
            const std::string sj = std::to_string(j);
            require_nonzero(out, "amp" + sj, value("amp" + sj));
            const Complex gam =
                std::conj(a) + std::abs(a) * std::exp(Complex(0.0, value("phi" + sj).real()));
            require_nonzero(out, "gamma" + sj, gam, 2.0 * std::abs(a));
        }
        if (out.empty()) check_leading_rows_independent(out, id, p, n);
        return out;
    }
    }
    throw ConfigError("unknown class id");
}

// ---------------------------------------------------------------------------
// Instantiation
// ---------------------------------------------------------------------------

struct Instance {
    ClassId id{};
    int n = 4;
    ParamMap params;  // resolved free parameters (echoed in reports)
    ParamMap derived; // full coefficient report
    Ansatz ansatz;     // class coordinates
    Ansatz pde_ansatz; // bound-equation coordinates
    PdeSpec equation;
    std::optional<SystemSpec> system;
    std::vector<std::size_t> g_slots; // term index of every ArbitraryG term
};

/// Count of arbitrary-g slots (and their real-function requirements).
struct GSlotInfo {
    std::size_t term;
    bool real_required;
    double coeff_scale; // 1 + sum |coeffs|
};

inline std::vector<GSlotInfo> g_slot_info(ClassId id, const ParamMap& p, int n) {
    const Scheme<Complex> s = build_scheme<Complex>(id, p, n);
    std::vector<GSlotInfo> out;
    for (std::size_t j = 0; j < s.terms.size(); ++j) {
        if (s.terms[j].tag != TermTag::Arb) continue;
        double sum = 1.0;
        for (const auto& c : s.terms[j].coeffs) sum += std::abs(c);
        out.push_back({j, s.terms[j].real_fn, sum});
    }
    return out;
}

/// Parameter domain tags are enforced here: real parameters must carry no
/// imaginary part, nonzero ones must not vanish, signs must be +-1.
inline void validate_domains(ClassId id, const ParamMap& params, int n) {
    for (const auto& spec : param_schema(id)) {
        for (int j = spec.per_term ? 1 : 0; j <= (spec.per_term ? n : 0); ++j) {
            const std::string name =
                spec.per_term ? spec.name + std::to_string(j) : spec.name;
            const auto it = params.find(name);
            if (it == params.end()) throw ConfigError("missing parameter: " + name);
            const Complex v = it->second;
            switch (spec.domain) {
            case ParamDomain::Real:
            case ParamDomain::Angle:
                if (v.imag() != 0.0) throw DomainError(name + " must be real");
                break;
            case ParamDomain::RealNonzero:
                if (v.imag() != 0.0) throw DomainError(name + " must be real");
                if (v.real() == 0.0) throw DomainError(name + " must be nonzero");
                break;
            case ParamDomain::ComplexNonzero:
                if (std::abs(v) == 0.0) throw DomainError(name + " must be nonzero");
                break;
            case ParamDomain::Sign:
                if (v != Complex(1.0) && v != Complex(-1.0))
                    throw DomainError(name + " must be +1 or -1");
                break;
            case ParamDomain::Complex:
                break;
            }
        }
    }
}

/// Bind scalar functions to the scheme's ArbitraryG slots and assemble the
/// evaluable instance. REF classes carry their own fixed exponentials and
/// ignore gs.
inline Instance instantiate(ClassId id, const ParamMap& params, std::vector<ScalarFn> gs,
                            int n = 0) {
    if (n <= 0) n = class_default_n(id);
    validate_domains(id, params, n);
    if (class_is_series(id)) {
        const int lo = (id == ClassId::RefSheftel) ? 2 : 4;
        if (n < lo || n > 16) throw ConfigError("series term count out of range 4..16");
    }
    const Scheme<Complex> scheme = build_scheme<Complex>(id, params, n);
    for (const auto& t : scheme.terms) {
        bool finite = std::isfinite(std::abs(t.offset));
        for (const auto& coef : t.coeffs) finite = finite && std::isfinite(std::abs(coef));
        if (!finite)
            throw DomainError("coefficient relations hit a zero denominator for " +
                              class_name(id));
    }

    Instance inst;
    inst.id = id;
    inst.n = n;
    inst.params = params;
    for (const auto& [k, v] : scheme.derived) inst.derived[k] = v;

    const bool fixed_exp = id == ClassId::RefSheftel || id == ClassId::RefMalykhExp;
    std::size_t next_g = 0;
    inst.ansatz.beta1 = scheme.beta1;
    for (std::size_t j = 0; j < scheme.terms.size(); ++j) {
        const auto& t = scheme.terms[j];
        AnsatzTerm term;
        term.form.coeffs = t.coeffs;
        term.form.offset = t.offset;
        switch (t.tag) {
        case TermTag::Square:
            term.kind = SquareTerm{};
            break;
        case TermTag::Conj:
            term.kind = ConjugateOf{t.conj_of};
            break;
        case TermTag::Arb: {
            ScalarFn fn = ScalarFn::exp();
            if (!fixed_exp) {
                if (gs.empty()) throw ConfigError("no scalar functions supplied");
                fn = gs[std::min(next_g, gs.size() - 1)];
                ++next_g;
                if (t.real_fn && !fn.has_real_params())
                    throw DomainError("term " + std::to_string(j + 1) +
                                      " requires a real-valued g");
            }
            term.kind = ArbitraryG{fn};
            inst.g_slots.push_back(j);
            break;
        }
        }
        inst.ansatz.terms.push_back(std::move(term));
    }
    if (!fixed_exp && !gs.empty() && next_g > gs.size() && gs.size() != 1)
        throw ConfigError("wrong number of scalar functions");

    const Binding bind = class_binding(id, params);
    inst.equation = builtin_pde(bind.equation, bind.options);
    if (bind.system) inst.system = builtin_system(*bind.system);
    inst.pde_ansatz = transform_ansatz(inst.ansatz, bind.transform);
    return inst;
}

/// First/second derivatives of every term at a class-coordinate point,
/// ordered by term.
inline std::vector<Complex> term_first_derivs(const Ansatz& a, const Point4& x) {
    std::vector<Complex> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = term_deriv2(a, j, a.terms[j].form.eval(x)).dg;
    return out;
}

inline std::vector<Complex> term_second_derivs(const Ansatz& a, const Point4& x) {
    std::vector<Complex> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = term_deriv2(a, j, a.terms[j].form.eval(x)).d2g;
    return out;
}

// ---------------------------------------------------------------------------
// Random admissible parameters
// ---------------------------------------------------------------------------

/// Exact rational literal (re + im*i as two small fractions).
struct RatLit {
    long long nre = 0, dre = 1, nim = 0, dim = 1;

    Complex to_complex(ParamDomain domain) const {
        const double re = static_cast<double>(nre) / static_cast<double>(dre);
        const double im = static_cast<double>(nim) / static_cast<double>(dim);
        if (domain == ParamDomain::Angle) return {2.0 * M_PI * re, 0.0};
        return {re, im};
    }
};

using RatParamMap = std::map<std::string, std::pair<RatLit, ParamDomain>>;

inline RatParamMap draw_raw_params(ClassId id, Rng& rng, int n, int maxAbs = 9) {
    RatParamMap out;
    auto draw_one = [&](ParamDomain d) {
        RatLit lit;
        switch (d) {
        case ParamDomain::Real:
        case ParamDomain::RealNonzero: {
            auto [num, den] = rng.small_rational(maxAbs, d == ParamDomain::RealNonzero);
            if (d == ParamDomain::Real && rng.int_in(0, 7) == 0) num = 0;
            lit.nre = num;
            lit.dre = den;
            break;
        }
        case ParamDomain::Complex:
        case ParamDomain::ComplexNonzero: {
            auto [nre, dre] = rng.small_rational(maxAbs, false);
            auto [nim, dim] = rng.small_rational(maxAbs, false);
            if (d == ParamDomain::ComplexNonzero && nre == 0 && nim == 0) nre = 1;
            lit = {nre, dre, nim, dim};
            break;
        }
        case ParamDomain::Angle: {
            // rational fraction of a turn
            lit.nre = rng.int_in(0, 63);
            lit.dre = 64;
            break;
        }
        case ParamDomain::Sign:
            lit.nre = rng.int_in(0, 1) == 0 ? 1 : -1;
            break;
        }
        return lit;
    };
    for (const auto& spec : param_schema(id)) {
        if (spec.per_term) {
            for (int j = 1; j <= n; ++j)
                out[spec.name + std::to_string(j)] = {draw_one(spec.domain), spec.domain};
        } else {
            out[spec.name] = {draw_one(spec.domain), spec.domain};
        }
    }
    return out;
}

inline ParamMap resolve_raw_params(const RatParamMap& raw) {
    ParamMap out;
    for (const auto& [k, v] : raw) out[k] = v.first.to_complex(v.second);
    return out;
}

/// Draw until the class side conditions hold; at most 100 attempts.
inline ParamMap draw_params(ClassId id, Rng& rng, int n = 0, int maxAbs = 9,
                            RatParamMap* raw_out = nullptr) {
    if (n <= 0) n = class_default_n(id);
    for (int attempt = 0; attempt < 100; ++attempt) {
        RatParamMap raw = draw_raw_params(id, rng, n, maxAbs);
        ParamMap p = resolve_raw_params(raw);
        if (constraint_check(id, p, n).empty()) {
            if (raw_out) *raw_out = std::move(raw);
            return p;
        }
    }
    throw ConstraintError("no admissible parameters after 100 attempts for " + class_name(id));
}

/// Deterministic g assignment for verification drivers: either one family
/// for all slots or one per slot; arguments optionally rescaled so that
/// |k * Sigma| stays O(1) on the polydisk.
inline std::vector<ScalarFn> choose_g(ClassId id, const ParamMap& p, int n,
                                      const std::vector<std::string>& families,
                                      bool autoscale = true) {
    if (id == ClassId::RefSheftel || id == ClassId::RefMalykhExp) return {};
    const auto slots = g_slot_info(id, p, n);
    std::vector<ScalarFn> out;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const std::string& desc =
            families.empty() ? "exp" : families[std::min(s, families.size() - 1)];
        ScalarFn fn = ScalarFn::parse(desc);
        if (slots[s].real_required && !fn.has_real_params())
            throw DomainError("slot requires a real-valued g: " + desc);
        if (autoscale) fn = fn.rescaled(1.0 / slots[s].coeff_scale);
        out.push_back(fn);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification driver
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    double max_abs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    bool degenerate_g = false; // all g' vanished somewhere: non-invariance untestable
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Per-point residuals of the bound equation and linear subsystem.
inline VerifyOutcome verify_instance(const Instance& inst, int points, Rng& rng,
                                     double tol_pde = 1e-9, double tol_sys = 1e-12) {
    VerifyOutcome out;
    CheckResult pde{"pde-residual:" + inst.equation.name, 0.0, tol_pde, false};
    CheckResult sys{inst.system ? "system-residual:" + inst.system->name : "", 0.0, tol_sys,
                    false};
    for (int k = 0; k < points; ++k) {
        const Point4 x = rng.polydisk_point();
        const Jet4 jet = eval_jet(inst.pde_ansatz, x);
        pde.max_abs = std::max(pde.max_abs, std::abs(residual(inst.equation, jet)));
        if (inst.system) {
            const Point4 y = rng.polydisk_point();
            const Jet4 jos = eval_jet(inst.ansatz, y);
            for (const Complex r : residual_system(*inst.system, jos))
                sys.max_abs = std::max(sys.max_abs, std::abs(r));
        }
        const auto d1 = term_first_derivs(inst.ansatz, x);
        bool all_zero = true;
        for (const Complex d : d1) all_zero = all_zero && std::abs(d) < 1e-14;
        if (all_zero) out.degenerate_g = true;
    }
    pde.pass = pde.max_abs < pde.tolerance;
    out.checks.push_back(pde);
    if (inst.system) {
        sys.pass = sys.max_abs < sys.tolerance;
        out.checks.push_back(sys);
    }
    return out;
}

} // namespace heavenly
