#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "heavenly/fd.hpp"
#include "heavenly/pde.hpp"
#include "heavenly/rng.hpp"
#include "heavenly/scalar_fn.hpp"
#include "test_helpers.hpp"

using namespace heavenly;
using namespace heavenly::testing;

namespace {

// Hand-written second encodings of every builtin equation, for the
// two-independent-transcriptions invariant.
Complex by_hand(EquationId id, const Jet4& j, const EquationOptions& opt = {}) {
    auto H = [&](int m, int n) { return j.h(m, n); };
    switch (id) {
    case EquationId::CmaElliptic:
        return H(0, 1) * H(2, 3) - H(0, 3) * H(1, 2) - 1.0;
    case EquationId::CmaGeneral:
        return H(0, 1) * H(2, 3) - H(0, 3) * H(1, 2) - opt.theta;
    case EquationId::HcmaLegendre:
        return H(0, 1) * H(2, 3) - H(0, 3) * H(1, 2) - H(0, 1) * H(0, 1) +
               H(0, 0) * H(1, 1);
    case EquationId::Heavenly2:
        return H(0, 0) * H(1, 1) - H(0, 1) * H(0, 1) + H(0, 2) + H(1, 3);
    case EquationId::Heavenly2Legendre:
        return H(2, 2) * (H(0, 0) + H(1, 3)) + H(0, 2) * (H(1, 1) - H(0, 2)) -
               H(1, 2) * (H(0, 1) + H(2, 3));
    case EquationId::Mixed:
        return H(0, 2) * H(1, 3) - H(0, 3) * H(1, 2) + H(0, 0) * H(1, 1) -
               H(0, 1) * H(0, 1) - opt.theta;
    case EquationId::MixedLegendre:
        return H(2, 1) * H(0, 3) - H(0, 1) * H(2, 3) + H(2, 2) * H(1, 1) -
               H(2, 1) * H(2, 1) +
               opt.theta * (H(0, 0) * H(1, 1) - H(0, 1) * H(0, 1));
    case EquationId::Asymm:
        return H(0, 1) * H(0, 2) - H(0, 0) * H(1, 2) + opt.A * H(0, 3) + opt.B * H(1, 3) +
               opt.C * H(1, 1);
    case EquationId::Evolution2:
        return H(0, 1) * H(0, 2) - H(0, 0) * H(1, 2) + opt.A * H(0, 3) + opt.C * H(1, 1);
    }
    return {};
}

std::vector<Complex> by_hand_system(SystemId id, const Jet4& j) {
    auto H = [&](int m, int n) { return j.h(m, n); };
    switch (id) {
    case SystemId::EqSymm:
        return {H(1, 2) + H(1, 1) - H(0, 2), H(0, 0) + H(1, 3),
                H(1, 0) + H(0, 2) + H(2, 3)};
    case SystemId::HighSymm:
        return {H(1, 1) - H(0, 2), H(1, 0) + H(2, 3), H(0, 0) + H(1, 3)};
    case SystemId::MixedLin:
        return {H(0, 0) + H(1, 1) - H(1, 2), H(1, 2) - H(0, 2) + H(1, 3),
                H(1, 2) + H(0, 2) - H(2, 2) + H(0, 3)};
    }
    return {};
}

} // namespace

TEST_CASE("builtin equation spot values") {
    SUBCASE("second heavenly on v = x*w") {
        // only v_xw = 1 survives
        Jet4 j;
        j.hess[0][2] = 1.0;
        j.hess[2][0] = 1.0;
        check_close(residual(builtin_pde(EquationId::Heavenly2), j), 1.0);
    }
    SUBCASE("elliptic cma constant term") {
        check_close(residual(builtin_pde(EquationId::CmaElliptic), Jet4{}), -1.0);
    }
    SUBCASE("elliptic cma on the unit Kahler potential") {
        Jet4 j; // v = z1 z1b + z2 z2b
        j.hess[0][1] = j.hess[1][0] = 1.0;
        j.hess[2][3] = j.hess[3][2] = 1.0;
        check_close(residual(builtin_pde(EquationId::CmaElliptic), j), 0.0);
    }
    SUBCASE("hcma is homogeneous") {
        check_close(residual(builtin_pde(EquationId::HcmaLegendre), Jet4{}), 0.0);
    }
    SUBCASE("constant-only spec returns its constant") {
        PdeSpec c;
        c.constant = Complex(0.25, -1.0);
        Rng rng(5);
        check_close(residual(c, random_jet(rng)), Complex(0.25, -1.0));
    }
    SUBCASE("transformed heavenly on an equal-symmetry exponential") {
        // coefficients (2,1,1,-4) from a2 = a3 = 1
        const LinearForm f{{Complex(2), 1, 1, -4}, 0};
        const Jet4 j = jet_compose_scalar(ScalarFn::exp(), jet_linform(f, {0, 0, 0, 0}));
        CHECK(std::abs(residual(builtin_pde(EquationId::Heavenly2Legendre), j)) < 1e-12);
    }
}

TEST_CASE("linear systems") {
    const SystemSpec eq = builtin_system(SystemId::EqSymm);
    CHECK(eq.equations.size() == 3);
    for (const auto& e : eq.equations) CHECK(e.quad.empty());

    SUBCASE("zero jet solves the homogeneous systems") {
        for (const Complex r : residual_system(eq, Jet4{})) check_close(r, 0.0);
    }
    SUBCASE("mixed system on one term of the reference solution") {
        // w = exp(sqrt(A(A-B)) (eta + B/A y)) * C cos(A xi + B(q - y)),
        // A=2, B=1, C=1, H=0, plus sign; coordinates (eta, xi, q, y)
        const double A = 2.0, B = 1.0, C = 1.0;
        const double s = std::sqrt(A * (A - B));
        const LinearForm l1{{Complex(s), 0, 0, s * B / A}, 0};
        const LinearForm l2{{0, Complex(A), B, -B}, 0};
        Rng rng(11);
        const SystemSpec sys = builtin_system(SystemId::MixedLin);
        for (int k = 0; k < 5; ++k) {
            const Point4 x = rng.polydisk_point();
            const Jet4 j = jet_scale(
                jet_mul(jet_compose_scalar(ScalarFn::exp(), jet_linform(l1, x)),
                        jet_compose_scalar(ScalarFn::cos(), jet_linform(l2, x))),
                C);
            for (const Complex r : residual_system(sys, j)) CHECK(std::abs(r) < 1e-9);
        }
    }
    SUBCASE("residuals are additive across jets") {
        Rng rng(17);
        for (const SystemId id : {SystemId::EqSymm, SystemId::HighSymm, SystemId::MixedLin}) {
            const SystemSpec sys = builtin_system(id);
            for (int k = 0; k < 20; ++k) {
                const Jet4 a = random_jet(rng), b = random_jet(rng);
                const auto ra = residual_system(sys, a);
                const auto rb = residual_system(sys, b);
                const auto rsum = residual_system(sys, jet_add(a, b));
                for (std::size_t e = 0; e < rsum.size(); ++e)
                    check_close(rsum[e], ra[e] + rb[e], 1e-12);
            }
        }
    }
}

TEST_CASE("every builtin matches its independent encoding on random jets") {
    Rng rng(23);
    EquationOptions opt;
    opt.theta = -1.0;
    opt.A = Complex(0.7, 0.1);
    opt.B = Complex(-1.3, 0.0);
    opt.C = Complex(0.4, -0.6);
    for (const EquationId id :
         {EquationId::CmaElliptic, EquationId::CmaGeneral, EquationId::HcmaLegendre,
          EquationId::Heavenly2, EquationId::Heavenly2Legendre, EquationId::Mixed,
          EquationId::MixedLegendre, EquationId::Asymm, EquationId::Evolution2}) {
        const PdeSpec spec = builtin_pde(id, opt);
        for (int k = 0; k < 100; ++k) {
            const Jet4 j = random_jet(rng);
            const Complex a = residual(spec, j);
            const Complex b = by_hand(id, j, opt);
            check_rel(a, b, 1e-12);
        }
    }
    for (const SystemId id : {SystemId::EqSymm, SystemId::HighSymm, SystemId::MixedLin}) {
        const SystemSpec sys = builtin_system(id);
        for (int k = 0; k < 100; ++k) {
            const Jet4 j = random_jet(rng);
            const auto a = residual_system(sys, j);
            const auto b = by_hand_system(id, j);
            REQUIRE(a.size() == b.size());
            for (std::size_t e = 0; e < a.size(); ++e) check_rel(a[e], b[e], 1e-12);
        }
    }
}

TEST_CASE("second heavenly residual of one g(Sigma) term") {
    // the Monge-Ampere quadratic of a rank-one Hessian drops out, leaving
    // g'' (c_x c_w + c_y c_z)
    Rng rng(31);
    const PdeSpec spec = builtin_pde(EquationId::Heavenly2);
    for (int k = 0; k < 50; ++k) {
        LinearForm f;
        for (auto& c : f.coeffs) c = rng.unit_disk();
        f.offset = rng.unit_disk();
        const ScalarFn g = ScalarFn::cosh(0.7);
        const Point4 x = rng.polydisk_point();
        const Jet4 j = jet_compose_scalar(g, jet_linform(f, x));
        const Complex expected =
            g.eval(f.eval(x)).d2g * (f.coeffs[0] * f.coeffs[2] + f.coeffs[1] * f.coeffs[3]);
        check_close(residual(spec, j), expected, 1e-13);
    }
}

TEST_CASE("id parsing") {
    CHECK(parse_equation_id("cma") == EquationId::CmaElliptic);
    CHECK(parse_equation_id("heavenly2-legendre") == EquationId::Heavenly2Legendre);
    CHECK(parse_system_id("mixed-lin") == SystemId::MixedLin);
    CHECK_THROWS_AS(parse_equation_id("nonsense"), UnknownEquation);
    CHECK_THROWS_AS(parse_system_id("nonsense"), UnknownEquation);
    for (const EquationId id :
         {EquationId::CmaElliptic, EquationId::CmaGeneral, EquationId::HcmaLegendre,
          EquationId::Heavenly2, EquationId::Heavenly2Legendre, EquationId::Mixed,
          EquationId::MixedLegendre, EquationId::Asymm, EquationId::Evolution2})
        CHECK(parse_equation_id(equation_name(id)) == id);
}

TEST_CASE("canonical hessian indexing") {
    const HessIdx a(3, 1);
    CHECK(a.mu == 1);
    CHECK(a.nu == 3);
    CHECK(HessIdx(1, 3) == a);
}
