#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"
#include "heavenly/pde.hpp"
#include "heavenly/rational.hpp"

namespace heavenly {

enum class ClassId {
    CmaSq,
    HcmaI,
    HcmaII,
    HcmaIII,
    H2Equal,
    H2HighI,
    H2HighII,
    H2SeriesEqual,
    H2SeriesHighI,
    H2SeriesHighII,
    MixedClass,
    MixedSeries,
    AsymmClass,
    EvolutionClass,
    RefSheftel,
    RefMalykhExp,
};

inline const std::vector<std::pair<ClassId, std::string>>& class_names() {
    static const std::vector<std::pair<ClassId, std::string>> names = {
        {ClassId::CmaSq, "cma-sq"},
        {ClassId::HcmaI, "hcma-i"},
        {ClassId::HcmaII, "hcma-ii"},
        {ClassId::HcmaIII, "hcma-iii"},
        {ClassId::H2Equal, "h2-equal"},
        {ClassId::H2HighI, "h2-high-i"},
        {ClassId::H2HighII, "h2-high-ii"},
        {ClassId::H2SeriesEqual, "h2-series-equal"},
        {ClassId::H2SeriesHighI, "h2-series-high-i"},
        {ClassId::H2SeriesHighII, "h2-series-high-ii"},
        {ClassId::MixedClass, "mixed-class"},
        {ClassId::MixedSeries, "mixed-series"},
        {ClassId::AsymmClass, "asymm-class"},
        {ClassId::EvolutionClass, "evolution-class"},
        {ClassId::RefSheftel, "ref-sheftel"},
        {ClassId::RefMalykhExp, "ref-malykh-exp"},
    };
    return names;
}

inline std::string class_name(ClassId id) {
    for (const auto& [cid, name] : class_names())
        if (cid == id) return name;
    throw ConfigError("unknown class id");
}

inline ClassId parse_class_id(const std::string& name) {
    for (const auto& [cid, n] : class_names())
        if (n == name) return cid;
    throw ConfigError("unknown class: " + name);
}

/// Whether a class takes a configurable term count, and its bounds.
inline bool class_is_series(ClassId id) {
    switch (id) {
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII:
    case ClassId::MixedSeries:
    case ClassId::RefSheftel:
    case ClassId::RefMalykhExp:
        return true;
    default:
        return false;
    }
}

inline int class_default_n(ClassId id) {
    switch (id) {
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII:
    case ClassId::MixedSeries:
        return 6;
    case ClassId::RefSheftel:
        return 3; // physical terms; each splits into two exponentials
    case ClassId::RefMalykhExp:
        return 4;
    default:
        return 4;
    }
}

// ---------------------------------------------------------------------------
// Parameter schema
// ---------------------------------------------------------------------------

enum class ParamDomain { Real, RealNonzero, Complex, ComplexNonzero, Angle, Sign };

struct ParamSpec {
    std::string name; // per-term specs get the 1-based term index appended
    ParamDomain domain;
    bool per_term = false;
};

inline std::vector<ParamSpec> param_schema(ClassId id) {
    using D = ParamDomain;
    switch (id) {
    case ClassId::CmaSq:
        return {{"a2", D::ComplexNonzero}, {"d3", D::Complex},     {"beta1", D::Real},
                {"beta2", D::Real},        {"beta3", D::Real},     {"beta4", D::Complex}};
    case ClassId::HcmaI:
        return {{"A", D::RealNonzero},  {"a2", D::RealNonzero}, {"d1", D::RealNonzero},
                {"d2", D::RealNonzero}, {"d4", D::Real},        {"beta1", D::Real},
                {"beta2", D::Real},     {"beta3", D::Complex},  {"beta4", D::Real}};
    case ClassId::HcmaII:
        return {{"a4", D::Complex},  {"b4", D::Complex},  {"d3", D::Real},
                {"d4", D::RealNonzero}, {"beta1", D::Real}, {"beta2", D::Real},
                {"beta3", D::Real},  {"beta4", D::Complex}};
    case ClassId::HcmaIII:
        return {{"A2", D::RealNonzero}, {"B3", D::RealNonzero}, {"B4", D::Real},
                {"C2", D::RealNonzero}, {"H2", D::RealNonzero}, {"beta1", D::Real},
                {"beta2", D::Real},     {"beta3", D::Real},     {"beta4", D::Real},
                {"beta5", D::Real}};
    case ClassId::H2Equal:
    case ClassId::H2HighII:
        return {{"a2", D::ComplexNonzero}, {"a3", D::ComplexNonzero}, {"b2", D::ComplexNonzero},
                {"b3", D::ComplexNonzero}, {"c2", D::ComplexNonzero}, {"c3", D::ComplexNonzero},
                {"d2", D::ComplexNonzero}, {"d3", D::ComplexNonzero}, {"beta1", D::Complex},
                {"beta2", D::Complex},     {"beta3", D::Complex},     {"beta4", D::Complex},
                {"beta5", D::Complex}};
    case ClassId::H2HighI:
        return {{"a1", D::ComplexNonzero}, {"a2", D::ComplexNonzero}, {"b1", D::ComplexNonzero},
                {"b2", D::ComplexNonzero}, {"c1", D::ComplexNonzero}, {"c2", D::ComplexNonzero},
                {"d1", D::ComplexNonzero}, {"d2", D::ComplexNonzero}, {"beta1", D::Complex},
                {"beta2", D::Complex},     {"beta3", D::Complex},     {"beta4", D::Complex},
                {"beta5", D::Complex}};
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighII:
        return {{"gamma", D::ComplexNonzero, true},
                {"zeta", D::ComplexNonzero, true},
                {"beta", D::Complex, true}};
    case ClassId::H2SeriesHighI:
        return {{"alpha", D::ComplexNonzero, true},
                {"gamma", D::ComplexNonzero, true},
                {"beta", D::Complex, true}};
    case ClassId::MixedClass:
        return {{"a1", D::Complex},        {"a2", D::ComplexNonzero}, {"b1", D::Complex},
                {"b2", D::ComplexNonzero}, {"c1", D::Complex},        {"c2", D::ComplexNonzero},
                {"d1", D::Complex},        {"d2", D::ComplexNonzero}, {"beta1", D::Complex},
                {"beta2", D::Complex},     {"beta3", D::Complex},     {"beta4", D::Complex},
                {"beta5", D::Complex}};
    case ClassId::MixedSeries:
        return {{"alpha", D::Complex, true},
                {"gamma", D::ComplexNonzero, true},
                {"beta", D::Complex, true}};
    case ClassId::AsymmClass:
        return {{"A", D::RealNonzero},     {"B", D::Real},
                {"a1", D::ComplexNonzero}, {"a3", D::ComplexNonzero},
                {"b2", D::Complex},        {"b3", D::Complex},
                {"c1", D::ComplexNonzero}, {"c2", D::Complex},
                {"c3", D::Complex},        {"c4", D::ComplexNonzero},
                {"d2", D::Complex},        {"d3", D::Complex},
                {"beta1", D::Complex},     {"beta2", D::Complex},
                {"beta3", D::Complex},     {"beta4", D::Complex},
                {"beta5", D::Complex}};
    case ClassId::EvolutionClass:
        return {{"A", D::RealNonzero},     {"a1", D::ComplexNonzero},
                {"a3", D::ComplexNonzero}, {"b2", D::Complex},
                {"b3", D::Complex},        {"c1", D::ComplexNonzero},
                {"c2", D::Complex},        {"c3", D::Complex},
                {"c4", D::ComplexNonzero}, {"d2", D::Complex},
                {"d3", D::Complex},        {"beta1", D::Complex},
                {"beta2", D::Complex},     {"beta3", D::Complex},
                {"beta4", D::Complex},     {"beta5", D::Complex}};
    case ClassId::RefSheftel:
        return {{"A", D::RealNonzero, true},
                {"B", D::Real, true},
                {"C", D::Real, true},
                {"H", D::Real, true},
                {"sign", D::Sign, true}};
    case ClassId::RefMalykhExp:
        return {{"a", D::ComplexNonzero},
                {"b", D::Complex},
                {"phi", D::Angle, true},
                {"amp", D::RealNonzero, true}};
    }
    throw ConfigError("unknown class id");
}

// ---------------------------------------------------------------------------
// Coefficient schemes, generic over the scalar (exact rational or double
// complex). One coefficient table per catalogued family.
// ---------------------------------------------------------------------------

template <class C> using ParamMapT = std::map<std::string, C>;
using ParamMap = ParamMapT<Complex>;

enum class TermTag { Arb, Square, Conj };

template <class C> struct SchemeTerm {
    std::array<C, 4> coeffs{};
    C offset{};
    TermTag tag = TermTag::Arb;
    std::size_t conj_of = 0;
    bool real_fn = false; // this term's g must be a real-valued function
};

template <class C> struct Scheme {
    C beta1{};
    std::vector<SchemeTerm<C>> terms;
    std::map<std::string, C> derived; // full coefficient report
};

template <class C> struct scalar_ops;

template <> struct scalar_ops<Complex> {
    static Complex from_ll(long long n, long long d = 1) {
        return {static_cast<double>(n) / static_cast<double>(d), 0.0};
    }
    static Complex i() { return {0.0, 1.0}; }
    static Complex conj(Complex z) { return std::conj(z); }
    static Complex sqrt_val(Complex z) { return std::sqrt(z); }
    static constexpr bool exact = false;
};

template <> struct scalar_ops<RatComplex> {
    static RatComplex from_ll(long long n, long long d = 1) { return RatComplex(Rat(n, d)); }
    static RatComplex i() { return RatComplex::i_unit(); }
    static RatComplex conj(const RatComplex& z) { return heavenly::conj(z); }
    static RatComplex sqrt_val(const RatComplex&) {
        throw DomainError("square roots are not available on the exact path");
    }
    static constexpr bool exact = true;
};

template <class C> const C& pget(const ParamMapT<C>& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw ConfigError("missing parameter: " + name);
    return it->second;
}

template <class C> C pget_or(const ParamMapT<C>& p, const std::string& name, const C& dflt) {
    auto it = p.find(name);
    return it == p.end() ? dflt : it->second;
}

/// Conjugate companion form on barred/unbarred coordinates.
template <class C> std::array<C, 4> conj_swap(const std::array<C, 4>& c) {
    using ops = scalar_ops<C>;
    return {ops::conj(c[1]), ops::conj(c[0]), ops::conj(c[3]), ops::conj(c[2])};
}

/// The exponential reference families are scale covariant: multiplying all
/// form coefficients by a real factor re-parameterizes within the same class
/// (A -> kA, B -> kB resp. a -> ka, b -> kb). Shrink drawn instances so the
/// arguments stay O(1) on the polydisk; offsets (folded amplitudes) stay.
inline void shrink_to_unit_scale(Scheme<Complex>& s) {
    double worst = 0.0;
    for (const auto& t : s.terms) {
        double sum = 0.0;
        for (const auto& c : t.coeffs) sum += std::abs(c);
        worst = std::max(worst, sum);
    }
    const double k = 1.0 / (1.0 + worst);
    for (auto& t : s.terms)
        for (auto& c : t.coeffs) c *= k;
    s.derived["scale"] = k;
}

template <class C> Scheme<C> build_scheme(ClassId id, const ParamMapT<C>& p, int n) {
    using ops = scalar_ops<C>;
    const C one = ops::from_ll(1);
    const C two = ops::from_ll(2);
    const C iu = ops::i();
    Scheme<C> s;
    auto record4 = [&s](const char* row, const std::array<C, 4>& c) {
        const std::string r(row);
        for (int mu = 0; mu < 4; ++mu) s.derived[r + std::to_string(mu + 1)] = c[mu];
    };

    switch (id) {
    case ClassId::CmaSq: {
        const C a2 = pget(p, "a2"), d3 = pget(p, "d3");
        const C a2b = ops::conj(a2), d3b = ops::conj(d3);
        const C be4 = pget(p, "beta4");
        const std::array<C, 4> va = {a2b, a2, C{}, C{}};
        const std::array<C, 4> vb = {one, one, one / (two * a2b), one / (two * a2)};
        const std::array<C, 4> vc = {C{}, one / (two * a2b), C{}, d3b};
        s.beta1 = pget(p, "beta1");
        s.terms.push_back({va, pget(p, "beta2"), TermTag::Square, 0, false});
        s.terms.push_back({vb, pget(p, "beta3"), TermTag::Square, 0, false});
        s.terms.push_back({vc, be4, TermTag::Arb, 0, false});
        s.terms.push_back({conj_swap(vc), ops::conj(be4), TermTag::Conj, 2, false});
        record4("a", va);
        record4("b", vb);
        record4("c", vc);
        record4("d", s.terms[3].coeffs);
        s.derived["beta5"] = ops::conj(be4);
        return s;
    }
    case ClassId::HcmaI: {
        const C A = pget(p, "A"), a2 = pget(p, "a2");
        const C d1 = pget(p, "d1"), d2 = pget(p, "d2"), d4 = pget(p, "d4");
        const C k = (d1 * d2 - d2 * d2 - d1 * d4) / (d1 * d2);
        const C l = (d1 * d2 + d2 * d2 + d1 * d4) / (d1 * d2);
        const C m = (d1 * d1 - d2 * d2 - d1 * d4) / d2;
        const C b3param = pget(p, "beta3");
        const std::array<C, 4> va = {a2, a2, C{} - a2 * k, C{} - a2 * k};
        const std::array<C, 4> vb = {d2, d1, d4, C{} - m};
        const std::array<C, 4> vc = {C{} - iu * A, iu * A, C{} - iu * A * l, iu * A * l};
        s.beta1 = pget(p, "beta1");
        s.terms.push_back({va, pget(p, "beta2"), TermTag::Arb, 0, true});
        s.terms.push_back({vb, b3param, TermTag::Arb, 0, false});
        s.terms.push_back({vc, pget(p, "beta4"), TermTag::Arb, 0, true});
        s.terms.push_back({conj_swap(vb), ops::conj(b3param), TermTag::Conj, 1, false});
        record4("a", va);
        record4("b", vb);
        record4("c", vc);
        record4("d", s.terms[3].coeffs);
        s.derived["beta5"] = ops::conj(b3param);
        return s;
    }
    case ClassId::HcmaII: {
        const C a4 = pget(p, "a4"), b4 = pget(p, "b4");
        const C d3 = pget(p, "d3"), d4 = pget(p, "d4");
        const C be4 = pget(p, "beta4");
        const std::array<C, 4> va = {C{}, C{}, ops::conj(a4), a4};
        const std::array<C, 4> vb = {C{}, C{}, ops::conj(b4), b4};
        const std::array<C, 4> vc = {C{}, d4, d4, d3};
        s.beta1 = pget(p, "beta1");
        s.terms.push_back({va, pget(p, "beta2"), TermTag::Arb, 0, true});
        s.terms.push_back({vb, pget(p, "beta3"), TermTag::Arb, 0, true});
        s.terms.push_back({vc, be4, TermTag::Arb, 0, false});
        s.terms.push_back({conj_swap(vc), ops::conj(be4), TermTag::Conj, 2, false});
        record4("a", va);
        record4("b", vb);
        record4("c", vc);
        record4("d", s.terms[3].coeffs);
        s.derived["beta5"] = ops::conj(be4);
        return s;
    }
    case ClassId::HcmaIII: {
        const C A2 = pget(p, "A2"), B3 = pget(p, "B3"), B4 = pget(p, "B4");
        const C C2 = pget(p, "C2"), H2 = pget(p, "H2");
        const C sr = ops::sqrt_val(B3 * B3 + B4 * B4);
        const C N1 = (sr / two) * (one + iu * (B3 + B4 - sr) / (B3 - B4 + sr));
        const std::array<C, 4> va = {A2 * (one + iu), A2 * (one - iu), two * iu * A2,
                                     C{} - two * iu * A2};
        const std::array<C, 4> vb = {N1, ops::conj(N1), B3 + iu * B4, B3 - iu * B4};
        const std::array<C, 4> vc = {iu * C2, C{} - iu * C2, C{}, C{}};
        const std::array<C, 4> vd = {H2 * (iu - one), C{} - H2 * (one + iu), two * iu * H2,
                                     C{} - two * iu * H2};
        s.beta1 = pget(p, "beta1");
        s.terms.push_back({va, pget(p, "beta2"), TermTag::Arb, 0, true});
        s.terms.push_back({vb, pget(p, "beta3"), TermTag::Arb, 0, true});
        s.terms.push_back({vc, pget(p, "beta4"), TermTag::Arb, 0, true});
        s.terms.push_back({vd, pget(p, "beta5"), TermTag::Arb, 0, true});
        record4("a", va);
        record4("b", vb);
        record4("c", vc);
        record4("d", vd);
        return s;
    }
    case ClassId::H2Equal:
    case ClassId::H2HighI:
    case ClassId::H2HighII:
    case ClassId::MixedClass: {
        static const char* rows = "abcd";
        static const char* betas[4] = {"beta2", "beta3", "beta4", "beta5"};
        s.beta1 = pget(p, "beta1");
        for (int r = 0; r < 4; ++r) {
            const std::string row(1, rows[r]);
            std::array<C, 4> v{};
            if (id == ClassId::H2Equal) {
                const C p2 = pget(p, row + "2"), p3 = pget(p, row + "3");
                v = {p2 * (p2 + p3) / p3, p2, p3, C{} - p2 * (p2 + p3) * (p2 + p3) / (p3 * p3)};
            } else if (id == ClassId::H2HighI) {
                const C p1 = pget(p, row + "1"), p2 = pget(p, row + "2");
                v = {p1, p2, p2 * p2 / p1, C{} - p1 * p1 / p2};
            } else if (id == ClassId::H2HighII) {
                const C p2 = pget(p, row + "2"), p3 = pget(p, row + "3");
                v = {p2 * p2 / p3, p2, p3, C{} - p2 * p2 * p2 / (p3 * p3)};
            } else { // MixedClass
                const C p1 = pget(p, row + "1"), p2 = pget(p, row + "2");
                v = {p1, p2, (p1 * p1 + p2 * p2) / p2,
                     C{} - (p1 * p1 * p2 + p2 * p2 * p2 - p1 * p1 * p1 - p1 * p2 * p2) /
                         (p2 * p2)};
            }
            s.terms.push_back({v, pget(p, betas[r]), TermTag::Arb, 0, false});
            record4(row.c_str(), v);
        }
        return s;
    }
    case ClassId::H2SeriesEqual:
    case ClassId::H2SeriesHighI:
    case ClassId::H2SeriesHighII:
    case ClassId::MixedSeries: {
        for (int j = 1; j <= n; ++j) {
            const std::string sj = std::to_string(j);
            std::array<C, 4> v{};
            if (id == ClassId::H2SeriesEqual) {
                const C ga = pget(p, "gamma" + sj), ze = pget(p, "zeta" + sj);
                v = {ga * (ga + ze) / ze, ga, ze, C{} - ga * (ga + ze) * (ga + ze) / (ze * ze)};
            } else if (id == ClassId::H2SeriesHighI) {
                const C al = pget(p, "alpha" + sj), ga = pget(p, "gamma" + sj);
                v = {al, ga, ga * ga / al, C{} - al * al / ga};
            } else if (id == ClassId::H2SeriesHighII) {
                const C ga = pget(p, "gamma" + sj), ze = pget(p, "zeta" + sj);
                v = {ga * ga / ze, ga, ze, C{} - ga * ga * ga / (ze * ze)};
            } else { // MixedSeries
                const C al = pget(p, "alpha" + sj), ga = pget(p, "gamma" + sj);
                v = {al, ga, (al * al + ga * ga) / ga,
                     C{} - (al * al * ga + ga * ga * ga - al * al * al - al * ga * ga) /
                         (ga * ga)};
            }
            s.terms.push_back({v, pget(p, "beta" + sj), TermTag::Arb, 0, false});
            s.derived["alpha" + sj] = v[0];
            s.derived["gamma" + sj] = v[1];
            s.derived["zeta" + sj] = v[2];
            s.derived["lambda" + sj] = v[3];
        }
        return s;
    }
    case ClassId::AsymmClass:
    case ClassId::EvolutionClass: {
        const C A = pget(p, "A");
        const C B = id == ClassId::EvolutionClass ? C{} : pget(p, "B");
        const C a1 = pget(p, "a1"), a3 = pget(p, "a3");
        const C b2 = pget(p, "b2"), b3 = pget(p, "b3");
        const C c1 = pget(p, "c1"), c2 = pget(p, "c2"), c3 = pget(p, "c3"), c4 = pget(p, "c4");
        const C d2 = pget(p, "d2"), d3 = pget(p, "d3");
        const C K = C{} - B * a3 * c1 * c1 + a1 * c1 * c3 * B + a1 * c3 * c4 * A;
        const C a2 = a1 * c2 * K / (A * a3 * c1 * c1 * c4);
        const C a4 = a1 * K / (A * a3 * c1 * c1);
        const C Cc = C{} - c3 * (B * c1 + A * c4) / (c1 * c1);
        // ansatz coordinates (x, y, z, t)
        const std::array<C, 4> va = {a1, a2, a3, a4};
        const std::array<C, 4> vb = {C{}, b2, b3, C{}};
        const std::array<C, 4> vc = {c1, c2, c3, c4};
        const std::array<C, 4> vd = {C{}, d2, d3, C{}};
        s.beta1 = pget(p, "beta1");
        s.terms.push_back({va, pget(p, "beta2"), TermTag::Arb, 0, false});
        s.terms.push_back({vb, pget(p, "beta3"), TermTag::Arb, 0, false});
        s.terms.push_back({vc, pget(p, "beta4"), TermTag::Arb, 0, false});
        s.terms.push_back({vd, pget(p, "beta5"), TermTag::Arb, 0, false});
        record4("a", va);
        record4("b", vb);
        record4("c", vc);
        record4("d", vd);
        s.derived["C"] = Cc;
        s.derived["B"] = B;
        return s;
    }
    case ClassId::RefSheftel: {
        if constexpr (!ops::exact) {
            // each physical term splits into two exponentials:
            //   exp(L1 ± i L2 + log amp), L1 = s(eta + (B/A) y), L2 = A xi + B(q - y)
            for (int j = 1; j <= n; ++j) {
                const std::string sj = std::to_string(j);
                const Complex A = pget(p, "A" + sj), B = pget(p, "B" + sj);
                const Complex Cc = pget(p, "C" + sj), H = pget(p, "H" + sj);
                const Complex sign = pget_or(p, "sign" + sj, Complex(1.0));
                const Complex sr = sign * std::sqrt(A * (A - B));
                const Complex iU(0.0, 1.0);
                const Complex ampP = (Cc - iU * H) / 2.0;
                const Complex ampM = (Cc + iU * H) / 2.0;
                if (std::abs(ampP) == 0.0 || std::abs(ampM) == 0.0)
                    throw DomainError("ref-sheftel term with C = H = 0");
                SchemeTerm<Complex> tp, tm;
                tp.coeffs = {sr, iU * A, iU * B, sr * B / A - iU * B};
                tp.offset = std::log(ampP);
                tm.coeffs = {sr, -iU * A, -iU * B, sr * B / A + iU * B};
                tm.offset = std::log(ampM);
                s.terms.push_back(tp);
                s.terms.push_back(tm);
            }
            shrink_to_unit_scale(s);
            return s;
        } else {
            throw DomainError("ref-sheftel has no exact-rational form");
        }
    }
    case ClassId::RefMalykhExp: {
        if constexpr (!ops::exact) {
            const Complex a = pget(p, "a"), b = pget(p, "b");
            const Complex ab = std::conj(a), bb = std::conj(b);
            const Complex iU(0.0, 1.0);
            for (int j = 1; j <= n; ++j) {
                const std::string sj = std::to_string(j);
                const double phi = pget(p, "phi" + sj).real();
                const Complex amp = pget(p, "amp" + sj);
                const Complex gam = ab + std::abs(a) * std::exp(iU * phi);
                if (std::abs(gam) == 0.0) throw DomainError("degenerate gamma on the circle");
                const Complex del = iU * (gam * gam - (ab + iU * bb) * gam) / ab;
                if (std::abs(amp) == 0.0) throw DomainError("zero amplitude");
                SchemeTerm<Complex> t;
                t.coeffs = {gam, std::conj(gam), del, std::conj(del)};
                t.offset = std::log(amp);
                s.terms.push_back(t);
            }
            shrink_to_unit_scale(s);
            for (int j = 1; j <= n; ++j) {
                const std::string sj = std::to_string(j);
                s.derived["gamma" + sj] = s.terms[j - 1].coeffs[0];
                s.derived["delta" + sj] = s.terms[j - 1].coeffs[2];
            }
            return s;
        } else {
            throw DomainError("ref-malykh-exp has no exact-rational form");
        }
    }
    }
    throw ConfigError("unknown class id");
}

} // namespace heavenly
