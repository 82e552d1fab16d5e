#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heavenly/determining.hpp"
#include "test_helpers.hpp"

using namespace heavenly;
using namespace heavenly::testing;

TEST_CASE("bigint arithmetic against native integers") {
    Rng rng(1);
    for (int k = 0; k < 2000; ++k) {
        const long long a = rng.int_in(-1000000, 1000000);
        const long long b = rng.int_in(-1000000, 1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
    SUBCASE("large products and decimal rendering") {
        BigInt f(1);
        for (long long k = 2; k <= 25; ++k) f = f * BigInt(k);
        CHECK(f.to_string() == "15511210043330985984000000"); // 25!
        CHECK(BigInt::gcd(f, BigInt(1000000)) == BigInt(1000000));
    }
}

TEST_CASE("rationals reduce and convert exactly") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 3) * Rat(3, 5)) == Rat(1, 5));
    CHECK((Rat(1, 3) / Rat(3, 5)) == Rat(5, 9));
    CHECK(Rat::from_double(0.5) == Rat(1, 2));
    CHECK(Rat::from_double(-0.375) == Rat(-3, 8));
    CHECK(Rat::from_double(3.0) == Rat(3));
    CHECK(Rat(1, 3).to_string() == "1/3");
    CHECK_THROWS_AS(Rat(1, 0), DomainError);

    const RatComplex z{Rat(1, 2), Rat(-3, 4)};
    CHECK(conj(z) == RatComplex{Rat(1, 2), Rat(3, 4)});
    CHECK((z * conj(z)).im.is_zero());
    CHECK((z / z) == RatComplex(Rat(1)));
}

TEST_CASE("polynomial algebra") {
    const Poly x = Poly::var(0), y = Poly::var(1);
    const Poly p = x * x + y * Poly::constant(RatComplex(Rat(2)));
    const Poly q = x * y - Poly::constant(RatComplex(Rat(1)));
    CHECK((p - p).is_zero());
    CHECK((p * q).term_count() == 4);
    const std::vector<RatComplex> at = {RatComplex(Rat(3)), RatComplex(Rat(-2))};
    CHECK(p.eval_exact(at) == RatComplex(Rat(5)));  // 9 - 4
    CHECK(q.eval_exact(at) == RatComplex(Rat(-7))); // -6 - 1
    double scale = 0.0;
    check_close(p.eval({Complex(3), Complex(-2)}, &scale), 5.0);
    CHECK(scale == doctest::Approx(13.0));
}

TEST_CASE("determining system of the second heavenly equation, one term") {
    const auto ds = generate(builtin_pde(EquationId::Heavenly2), 1, {{TermTag::Arb, 0}});
    REQUIRE(ds.quad.count({0, 0}) == 1);
    CHECK(ds.quad.at({0, 0}).is_zero()); // rank-one Monge-Ampere minor
    REQUIRE(ds.lin.count(0) == 1);
    // c_x c_w + c_y c_z over variables (x,y,w,z) -> indices 0,2 and 1,3
    Poly expect;
    expect.add_term({0, 2}, RatComplex(Rat(1)));
    expect.add_term({1, 3}, RatComplex(Rat(1)));
    CHECK(ds.lin.at(0) == expect);
    CHECK(!ds.has_constant);
}

TEST_CASE("determining systems of the linear subsystems") {
    const auto all = generate(builtin_system(SystemId::EqSymm), 1, {{TermTag::Arb, 0}});
    REQUIRE(all.size() == 3);
    std::size_t conditions = 0;
    for (const auto& ds : all) conditions += ds.condition_count();
    CHECK(conditions == 3);

    // expected termwise conditions, coords (x,r,t,z) = vars 0..3
    Poly eq1, eq2, eq3;
    eq1.add_term({1, 2}, RatComplex(Rat(1)));
    eq1.add_term({1, 1}, RatComplex(Rat(1)));
    eq1.add_term({0, 2}, RatComplex(Rat(-1)));
    eq2.add_term({0, 0}, RatComplex(Rat(1)));
    eq2.add_term({1, 3}, RatComplex(Rat(1)));
    eq3.add_term({0, 1}, RatComplex(Rat(1)));
    eq3.add_term({0, 2}, RatComplex(Rat(1)));
    eq3.add_term({2, 3}, RatComplex(Rat(1)));
    CHECK(all[0].lin.at(0) == eq1);
    CHECK(all[1].lin.at(0) == eq2);
    CHECK(all[2].lin.at(0) == eq3);
}

TEST_CASE("block diagonality for linear systems") {
    const std::vector<TermPlan> plans(3, {TermTag::Arb, 0});
    for (const SystemId id : {SystemId::EqSymm, SystemId::HighSymm, SystemId::MixedLin}) {
        const auto all = generate(builtin_system(id), 3, plans);
        for (const auto& ds : all) {
            CHECK(ds.quad.empty());
            for (int i = 1; i < 3; ++i) {
                // the term-i condition is the term-0 condition shifted by 4i
                Poly shifted;
                for (const auto& [mono, coef] : ds.lin.at(0).terms()) {
                    Monomial m = mono;
                    for (auto& v : m) v = static_cast<std::uint16_t>(v + 4 * i);
                    shifted.add_term(m, coef);
                }
                CHECK(ds.lin.at(i) == shifted);
            }
        }
    }
}

TEST_CASE("generation is additive in the equation") {
    PdeSpec one = builtin_pde(EquationId::Heavenly2Legendre);
    PdeSpec two = builtin_pde(EquationId::Heavenly2);
    two.coords = one.coords;
    PdeSpec sum = one;
    sum.quad.insert(sum.quad.end(), two.quad.begin(), two.quad.end());
    sum.lin.insert(sum.lin.end(), two.lin.begin(), two.lin.end());
    sum.constant += two.constant;
    const std::vector<TermPlan> plans(2, {TermTag::Arb, 0});
    const auto a = generate(one, 2, plans);
    const auto b = generate(two, 2, plans);
    const auto s = generate(sum, 2, plans);
    for (const auto& [key, poly] : s.quad) {
        Poly expect = poly;
        if (a.quad.count(key)) expect = expect - a.quad.at(key);
        if (b.quad.count(key)) expect = expect - b.quad.at(key);
        CHECK(expect.is_zero());
    }
    for (const auto& [key, poly] : s.lin) {
        Poly expect = poly;
        if (a.lin.count(key)) expect = expect - a.lin.at(key);
        if (b.lin.count(key)) expect = expect - b.lin.at(key);
        CHECK(expect.is_zero());
    }
}

TEST_CASE("cma determining constant vanishes under the class relations") {
    // kinds (square, square, g, conj-of-3); exact substitution at rational a2, d3
    const std::vector<TermPlan> plans = {
        {TermTag::Square, 0}, {TermTag::Square, 0}, {TermTag::Arb, 0}, {TermTag::Conj, 2}};
    const auto ds = generate(builtin_pde(EquationId::CmaElliptic), 4, plans);
    REQUIRE(ds.has_constant);
    CHECK(!ds.constant.is_zero()); // square cross-products minus one

    ParamMapT<RatComplex> p;
    p["a2"] = RatComplex{Rat(3, 2), Rat(0)};
    p["d3"] = RatComplex{Rat(-2, 5), Rat(0)};
    p["beta1"] = RatComplex();
    p["beta2"] = RatComplex();
    p["beta3"] = RatComplex();
    p["beta4"] = RatComplex();
    const Scheme<RatComplex> scheme = build_scheme<RatComplex>(ClassId::CmaSq, p, 4);
    std::vector<RatComplex> assign;
    for (const auto& t : scheme.terms)
        for (int mu = 0; mu < 4; ++mu) assign.push_back(t.coeffs[mu]);
    CHECK(ds.constant.eval_exact(assign).is_zero());

    SUBCASE("also at a complex rational a2") {
        p["a2"] = RatComplex{Rat(1, 2), Rat(2, 3)};
        p["d3"] = RatComplex{Rat(1), Rat(-1, 4)};
        const Scheme<RatComplex> s2 = build_scheme<RatComplex>(ClassId::CmaSq, p, 4);
        std::vector<RatComplex> a2;
        for (const auto& t : s2.terms)
            for (int mu = 0; mu < 4; ++mu) a2.push_back(t.coeffs[mu]);
        CHECK(ds.constant.eval_exact(a2).is_zero());
    }
}

TEST_CASE("exact certification of the catalogued relations") {
    struct Case {
        ClassId cls;
        const char* target;
    };
    const Case cases[] = {
        {ClassId::H2Equal, "eq-symm"},   {ClassId::H2HighI, "high-symm"},
        {ClassId::H2HighII, "high-symm"}, {ClassId::MixedClass, "mixed-lin"},
        {ClassId::AsymmClass, "asymm"},
    };
    for (const auto& c : cases) {
        CAPTURE(class_name(c.cls));
        const CertifyReport rep = certify(c.cls, 10, 77);
        CHECK(rep.exact_path);
        CHECK(rep.all_exact_zero);
        CHECK(rep.failed_trials == 0);
        CHECK(rep.target == c.target);
        CHECK(rep.certified());
    }
}

TEST_CASE("mutated relations fail certification") {
    for (const ClassId cls : {ClassId::H2Equal, ClassId::H2HighI, ClassId::MixedClass,
                              ClassId::AsymmClass}) {
        CAPTURE(class_name(cls));
        const CertifyReport rep = certify(cls, 20, 99, 4, true);
        CHECK(rep.failed_trials >= 19); // at least 19/20 trials must notice
    }
}

TEST_CASE("floating certification of the conjugate-pair classes") {
    for (const ClassId cls :
         {ClassId::CmaSq, ClassId::HcmaI, ClassId::HcmaII, ClassId::HcmaIII}) {
        CAPTURE(class_name(cls));
        const CertifyReport rep = certify(cls, 50, 31);
        CHECK(!rep.exact_path);
        CHECK(rep.max_rel_residual < 1e-12);
        CHECK(rep.certified());
    }
}

TEST_CASE("generation rejects inconsistent arity") {
    CHECK_THROWS_AS(generate(builtin_pde(EquationId::Heavenly2), 2, {{TermTag::Arb, 0}}),
                    ArityError);
}
