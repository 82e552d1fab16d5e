// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "heavenly/catalog.hpp"
#include "heavenly/conditions.hpp"
#include "heavenly/determining.hpp"
#include "heavenly/fd.hpp"
#include "heavenly/metrics.hpp"

using namespace heavenly;

namespace {

constexpr std::uint64_t kSeed = 20240808;

struct Criterion {
    bool pass = true;
    double worst = 0.0;
    std::string note;

    void fold(double value, double tolerance) {
        worst = std::max(worst, value);
        if (!(value < tolerance)) pass = false;
    }
};

int failures = 0;

void report(int index, const std::string& name, const Criterion& c) {
    std::printf("%s  %d. %-34s worst=%.3e %s\n", c.pass ? "PASS" : "FAIL", index, name.c_str(),
                c.worst, c.note.c_str());
    if (!c.pass) ++failures;
}

const std::vector<std::string> kFamilies = {"exp", "cos", "poly:0.4,1,0.5,-0.25"};

int class_n(ClassId id) { return class_default_n(id); }

// ---------------------------------------------------------------------------

Criterion criterion_residuals() {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    const std::vector<ClassId> classes = {
        ClassId::CmaSq,         ClassId::HcmaI,          ClassId::HcmaII,
        ClassId::HcmaIII,       ClassId::H2Equal,        ClassId::H2HighI,
        ClassId::H2HighII,      ClassId::H2SeriesEqual,  ClassId::H2SeriesHighI,
        ClassId::H2SeriesHighII, ClassId::MixedClass,    ClassId::MixedSeries,
        ClassId::AsymmClass,    ClassId::EvolutionClass, ClassId::RefSheftel};
    Rng rng(kSeed);
    double worst_sys = 0.0;
    for (const ClassId id : classes) {
        const int n = class_is_series(id) && id != ClassId::RefSheftel ? 6 : class_n(id);
        for (int draw = 0; draw < 20; ++draw) {
            const ParamMap p = draw_params(id, rng, n);
            for (const auto& family : kFamilies) {
                const auto gs = choose_g(id, p, n, {family}, true);
                const Instance inst = instantiate(id, p, gs, n);
                const VerifyOutcome out = verify_instance(inst, 100, rng, 1e-9, 1e-12);
                for (const auto& check : out.checks) {
                    c.fold(check.max_abs, check.tolerance);
                    if (check.name.rfind("system", 0) == 0)
                        worst_sys = std::max(worst_sys, check.max_abs);
                    if (!check.pass && c.note.empty())
                        c.note = "first failure: " + class_name(id) + " " + check.name;
                }
                if (id == ClassId::RefSheftel) break; // fixed exponentials, no g axis
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[128];
    std::snprintf(buf, sizeof buf, "sys_worst=%.3e runtime=%.1fs", worst_sys, secs);
    c.note = std::string(buf) + (c.note.empty() ? "" : " | " + c.note);
    if (secs >= 60.0) c.pass = false;
    return c;
}

Criterion criterion_oracle() {
    Criterion c;
    Rng rng(kSeed + 1);
    int samples = 0;
    while (samples < 1000) {
        for (const auto& [id, name] : class_names()) {
            const int n = class_n(id);
            const ParamMap p = draw_params(id, rng, n);
            const auto gs = choose_g(id, p, n, {kFamilies[samples % 3]}, true);
            const Instance inst = instantiate(id, p, gs, n);
            for (int k = 0; k < 4; ++k) {
                const Point4 x = rng.polydisk_point();
                const Jet4 analytic = eval_jet(inst.ansatz, x);
                const Jet4 numeric = fd_hessian(
                    [&](const Point4& q) { return eval_value(inst.ansatz, q); }, x, 1e-4);
                double rel = 0.0;
                auto fold = [&](Complex a, Complex b) {
                    rel = std::max(rel, std::abs(a - b) / std::max(1.0, std::abs(b)));
                };
                fold(analytic.val, numeric.val);
                for (int mu = 0; mu < 4; ++mu) fold(analytic.grad[mu], numeric.grad[mu]);
                for (int mu = 0; mu < 4; ++mu)
                    for (int nu = 0; nu < 4; ++nu)
                        fold(analytic.hess[mu][nu], numeric.hess[mu][nu]);
                c.fold(rel, 1e-5);
                ++samples;
            }
        }
    }
    c.note = "samples=" + std::to_string(samples);
    return c;
}

Criterion criterion_certification() {
    Criterion c;
    const std::vector<ClassId> exact = {ClassId::H2Equal, ClassId::H2HighI, ClassId::H2HighII,
                                        ClassId::MixedClass, ClassId::AsymmClass};
    for (const ClassId id : exact) {
        const CertifyReport rep = certify(id, 50, kSeed + 2);
        if (!(rep.exact_path && rep.all_exact_zero && rep.failed_trials == 0)) {
            c.pass = false;
            c.note += " exact:" + class_name(id);
        }
        const CertifyReport mut = certify(id, 50, kSeed + 3, 4, true);
        if (mut.failed_trials < 49) { // >= 98 percent
            c.pass = false;
            c.note += " mutant:" + class_name(id) + "=" +
                      std::to_string(mut.failed_trials) + "/50";
        }
    }
    if (c.note.empty()) c.note = "5 exact certifications, 5 mutants";
    return c;
}

Criterion criterion_determinants() {
    Criterion c;
    const std::vector<ClassId> classes = {
        ClassId::CmaSq,   ClassId::HcmaI,    ClassId::HcmaII,     ClassId::HcmaIII,
        ClassId::H2Equal, ClassId::H2HighI,  ClassId::H2HighII,   ClassId::MixedClass,
        ClassId::AsymmClass};
    Rng rng(kSeed + 4);
    for (const ClassId id : classes) {
        for (int draw = 0; draw < 100; ++draw) {
            const int n = class_n(id);
            const ParamMap p = draw_params(id, rng, n, 3);
            const auto gs = choose_g(id, p, n, {kFamilies[draw % 3]}, true);
            const Instance inst = instantiate(id, p, gs, n);
            for (int k = 0; k < 10; ++k) {
                const Point4 x = rng.polydisk_point();
                const Complex generic = det4(jacobian_matrix(inst.ansatz, x));
                const auto g1 = term_first_derivs(inst.ansatz, x);
                const auto closed = jacobian_det_closed(id, p, g1, &x);
                const double rel = std::abs(generic - closed->v) /
                                   std::max({1.0, std::abs(generic), std::abs(closed->v)});
                c.fold(rel, 1e-10);
                if (!c.pass && c.note.empty()) c.note = "first failure: " + class_name(id);
            }
        }
    }
    return c;
}

Criterion criterion_long_forms() {
    Criterion c;
    Rng rng(kSeed + 5);
    for (const ClassId id : {ClassId::HcmaIII, ClassId::MixedClass}) {
        const EquationId eq =
            id == ClassId::HcmaIII ? EquationId::HcmaLegendre : EquationId::MixedLegendre;
        for (int draw = 0; draw < 50; ++draw) {
            const ParamMap p = draw_params(id, rng, 4, 3);
            const auto gs = choose_g(id, p, 4, {kFamilies[draw % 3]}, true);
            const Instance inst = instantiate(id, p, gs, 4);
            for (int k = 0; k < 10; ++k) {
                const Point4 y = rng.polydisk_point();
                const Complex generic = legendre_condition(eq, eval_jet(inst.pde_ansatz, y));
                const auto g2 = term_second_derivs(inst.pde_ansatz, y);
                const auto closed = closed_form_condition(id, p, g2);
                const double rel = std::abs(generic - closed->v) /
                                   std::max({1.0, std::abs(generic), std::abs(closed->v)});
                c.fold(rel, 1e-8);
                if (!c.pass && c.note.empty()) c.note = "first failure: " + class_name(id);
            }
        }
    }
    return c;
}

Criterion criterion_reality() {
    Criterion c;
    Rng rng(kSeed + 6);
    for (const ClassId id :
         {ClassId::CmaSq, ClassId::HcmaI, ClassId::HcmaII, ClassId::HcmaIII}) {
        for (int draw = 0; draw < 20; ++draw) {
            const ParamMap p = draw_params(id, rng, 4);
            const auto gs = choose_g(id, p, 4, {kFamilies[draw % 3]}, true);
            const Instance inst = instantiate(id, p, gs, 4);
            for (int k = 0; k < 100; ++k)
                c.fold(reality_defect(inst.ansatz, rng.unit_disk(), rng.unit_disk()), 1e-12);
        }
    }
    return c;
}

Criterion criterion_degeneracy() {
    Criterion c;
    Rng rng(kSeed + 7);
    auto expect_flagged = [&](ClassId id, ParamMap p, const char* what) {
        const auto violations = constraint_check(id, p, 4);
        bool det_factor_zero = false;
        for (const auto& v : violations)
            det_factor_zero = det_factor_zero || std::abs(v.value) < 1e-10;
        bool verdict_satisfied = false;
        try {
            const auto gs = choose_g(id, p, 4, {"exp"}, true);
            const Instance inst = instantiate(id, p, gs, 4);
            verdict_satisfied =
                noninvariance_verdict(id, inst, rng.polydisk_point()).satisfied;
        } catch (const DomainError&) {
            // parameters on the excluded locus may not even instantiate
        }
        if (violations.empty() || !det_factor_zero || verdict_satisfied) {
            c.pass = false;
            c.note += std::string(" not flagged: ") + what;
        }
    };
    ParamMap p1 = draw_params(ClassId::HcmaI, rng, 4);
    p1["d1"] = p1["d2"];
    expect_flagged(ClassId::HcmaI, p1, "hcma-i d1=d2");

    ParamMap p3 = draw_params(ClassId::HcmaIII, rng, 4);
    p3["B3"] = 0.0;
    expect_flagged(ClassId::HcmaIII, p3, "hcma-iii B3=0");
    ParamMap p3c = draw_params(ClassId::HcmaIII, rng, 4);
    p3c["C2"] = 0.0;
    expect_flagged(ClassId::HcmaIII, p3c, "hcma-iii C2=0");

    // generic draws pass
    for (const ClassId id : {ClassId::HcmaI, ClassId::HcmaIII}) {
        const ParamMap p = draw_params(id, rng, 4);
        const auto gs = choose_g(id, p, 4, {"exp"}, true);
        const Instance inst = instantiate(id, p, gs, 4);
        const ConditionReport rep = noninvariance_verdict(id, inst, rng.polydisk_point());
        if (!rep.satisfied || !constraint_check(id, p, 4).empty()) {
            c.pass = false;
            c.note += " generic draw failed: " + class_name(id);
        }
    }
    if (c.note.empty()) c.note = "3 degenerate flagged, 2 generic pass";
    return c;
}

Criterion criterion_metrics() {
    Criterion c;
    Rng rng(kSeed + 8);
    // Kahler block determinant on cma solutions
    for (int draw = 0; draw < 10; ++draw) {
        const ParamMap p = draw_params(ClassId::CmaSq, rng, 4);
        const auto gs = choose_g(ClassId::CmaSq, p, 4, {kFamilies[draw % 3]}, true);
        const Instance inst = instantiate(ClassId::CmaSq, p, gs, 4);
        for (int k = 0; k < 50; ++k) {
            const Complex z1 = rng.unit_disk(), z2 = rng.unit_disk();
            const Jet4 j = eval_jet(inst.ansatz, {z1, std::conj(z1), z2, std::conj(z2)});
            const Complex block = j.h(0, 1) * j.h(2, 3) - j.h(0, 3) * j.h(2, 1);
            c.fold(std::abs(block - 1.0), 1e-9);
        }
    }
    // flat heavenly determinant
    const Complex det0 = metric_det(metric_at(MetricId::Heavenly, Jet4{}));
    c.fold(std::abs(det0 - 1.0 / 16.0), 1e-15);
    // dual transcription of the transformed heavenly metric
    for (const ClassId id : {ClassId::H2Equal, ClassId::H2HighI, ClassId::H2HighII}) {
        const ParamMap p = draw_params(id, rng, 4);
        const auto gs = choose_g(id, p, 4, {"exp"}, true);
        const Instance inst = instantiate(id, p, gs, 4);
        int compared = 0;
        for (int k = 0; k < 50 && compared < 20; ++k) {
            const Jet4 j = eval_jet(inst.ansatz, rng.polydisk_point());
            try {
                const Metric4 a = metric_at(MetricId::HeavenlyLeg, j);
                const Metric4 b = metric_heavenly_leg_expanded(j);
                double rel = 0.0;
                for (int mu = 0; mu < 4; ++mu)
                    for (int nu = 0; nu < 4; ++nu)
                        rel = std::max(rel, std::abs(a.g[mu][nu] - b.g[mu][nu]) /
                                                std::max({1.0, std::abs(a.g[mu][nu]),
                                                          std::abs(b.g[mu][nu])}));
                c.fold(rel, 1e-10);
                ++compared;
            } catch (const SingularDenominator&) {
            }
        }
        if (compared < 20) {
            c.pass = false;
            c.note += " too few admissible points: " + class_name(id);
        }
    }
    if (c.note.empty()) c.note = "block det, flat det, dual transcription";
    return c;
}

} // namespace

int main() {
    std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kSeed));
    report(1, "solution-class residuals", criterion_residuals());
    report(2, "oracle equivalence", criterion_oracle());
    report(3, "determining-system certification", criterion_certification());
    report(4, "closed-form vs generic determinants", criterion_determinants());
    report(5, "long-form condition fidelity", criterion_long_forms());
    report(6, "reality on the real slice", criterion_reality());
    report(7, "degeneracy detection", criterion_degeneracy());
    report(8, "metric checks", criterion_metrics());
    return failures;
}
