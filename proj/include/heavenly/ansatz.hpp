#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"
#include "heavenly/scalar_fn.hpp"

namespace heavenly {

/// Term backed by an arbitrary C^2 function from the library.
struct ArbitraryG {
    ScalarFn fn;
};

/// Term of the form (Sigma)^2.
struct SquareTerm {};

/// Term realized as conj ∘ g_k ∘ conj of an earlier ArbitraryG term k,
/// applied to this term's own (conjugated) linear form.
struct ConjugateOf {
    std::size_t term;
};

using TermKind = std::variant<SquareTerm, ArbitraryG, ConjugateOf>;

struct AnsatzTerm {
    LinearForm form;
    TermKind kind = SquareTerm{};
};

/// u(x) = beta1 + sum_j term_j(Sigma_j(x))
struct Ansatz {
    Complex beta1{};
    std::vector<AnsatzTerm> terms;

    std::size_t size() const { return terms.size(); }
};

/// Conjugate companion of a form on barred/unbarred coordinates: swaps the
/// conjugate coordinate pairs (0,1) and (2,3) and conjugates everything.
inline LinearForm conjugate_form(const LinearForm& f) {
    LinearForm g;
    g.coeffs[0] = std::conj(f.coeffs[1]);
    g.coeffs[1] = std::conj(f.coeffs[0]);
    g.coeffs[2] = std::conj(f.coeffs[3]);
    g.coeffs[3] = std::conj(f.coeffs[2]);
    g.offset = std::conj(f.offset);
    return g;
}

/// (g, g', g'') of term j at argument s.
inline Deriv2 term_deriv2(const Ansatz& a, std::size_t j, Complex s) {
    const TermKind& kind = a.terms[j].kind;
    if (const auto* arb = std::get_if<ArbitraryG>(&kind)) return arb->fn.eval(s);
    if (std::holds_alternative<SquareTerm>(kind)) return {s * s, 2.0 * s, 2.0};
    const auto& cj = std::get<ConjugateOf>(kind);
    if (cj.term >= j) throw ArityError("ConjugateOf must reference an earlier term");
    const auto* src = std::get_if<ArbitraryG>(&a.terms[cj.term].kind);
    if (!src) throw ArityError("ConjugateOf must reference an ArbitraryG term");
    return src->fn.eval_conjugated(s);
}

inline Jet4 eval_jet(const Ansatz& a, const Point4& x) {
    Jet4 out = Jet4::constant(a.beta1);
    for (std::size_t j = 0; j < a.terms.size(); ++j) {
        const Jet4 inner = jet_linform(a.terms[j].form, x);
        out = jet_add(out, jet_compose(term_deriv2(a, j, inner.val), inner));
    }
    return out;
}

/// Pointwise value only (what the finite-difference oracle sees).
inline Complex eval_value(const Ansatz& a, const Point4& x) {
    Complex v = a.beta1;
    for (std::size_t j = 0; j < a.terms.size(); ++j)
        v += term_deriv2(a, j, a.terms[j].form.eval(x)).g;
    return v;
}

using Matrix4 = std::array<std::array<Complex, 4>, 4>;

/// Row j = (d term_j / d Sigma_j) * form coefficients, for the first four
/// terms; rows ordered by term, columns by coordinate.
inline Matrix4 jacobian_matrix(const Ansatz& a, const Point4& x) {
    if (a.size() < 4) throw ArityError("jacobian_matrix needs at least 4 terms");
    Matrix4 m{};
    for (std::size_t j = 0; j < 4; ++j) {
        const Complex s = a.terms[j].form.eval(x);
        const Complex d = term_deriv2(a, j, s).dg;
        for (int mu = 0; mu < 4; ++mu) m[j][mu] = d * a.terms[j].form.coeffs[mu];
    }
    return m;
}

inline Complex det3(const Matrix4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

inline Complex det4(const Matrix4& m) {
    return m[0][0] * det3(m, 1, 2, 3, 1, 2, 3) - m[0][1] * det3(m, 1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(m, 1, 2, 3, 0, 1, 3) - m[0][3] * det3(m, 1, 2, 3, 0, 1, 2);
}

/// Sum of |products| over all 24 permutations; magnitude scale for det4.
inline double det4_scale(const Matrix4& m) {
    int idx[4] = {0, 1, 2, 3};
    double total = 0.0;
    // enumerate permutations of columns
    std::array<int, 4> p{};
    for (p[0] = 0; p[0] < 4; ++p[0])
        for (p[1] = 0; p[1] < 4; ++p[1]) {
            if (p[1] == p[0]) continue;
            for (p[2] = 0; p[2] < 4; ++p[2]) {
                if (p[2] == p[0] || p[2] == p[1]) continue;
                p[3] = idx[0] + idx[1] + idx[2] + idx[3] - p[0] - p[1] - p[2];
                total += std::abs(m[0][p[0]]) * std::abs(m[1][p[1]]) * std::abs(m[2][p[2]]) *
                         std::abs(m[3][p[3]]);
            }
        }
    return total;
}

/// |Im u| with the point assembled on the real slice from (z1, z2).
inline double reality_defect(const Ansatz& a, Complex z1, Complex z2) {
    const Point4 x = {z1, std::conj(z1), z2, std::conj(z2)};
    return std::abs(eval_jet(a, x).val.imag());
}

} // namespace heavenly
