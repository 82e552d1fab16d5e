#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heavenly/catalog.hpp"
#include "heavenly/conditions.hpp"
#include "heavenly/determining.hpp"
#include "heavenly/metrics.hpp"
#include "heavenly/version.hpp"

namespace heavenly::cli {

using json = nlohmann::ordered_json;

inline json cplx(Complex z) { return json::array({z.real(), z.imag()}); }

inline json params_json(const ParamMap& p) {
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = cplx(v);
    return out;
}

inline double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// --params value: either "k=v,k=v" assignments or "random:<seed>:<draws>".
struct ParamsArg {
    bool random = false;
    std::uint64_t seed = 0;
    int draws = 1;
    ParamMap overrides;
};

inline ParamsArg parse_params_arg(const std::string& text) {
    ParamsArg out;
    if (text.rfind("random:", 0) == 0) {
        out.random = true;
        const auto rest = text.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ConfigError("expected random:<seed>:<draws>");
        out.seed = std::stoull(rest.substr(0, colon));
        out.draws = std::stoi(rest.substr(colon + 1));
        if (out.draws < 1) throw ConfigError("draws must be >= 1");
        return out;
    }
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ConfigError("expected name=value in --params");
        out.overrides[tok.substr(0, eq)] = ScalarFn::parse_complex(tok.substr(eq + 1));
    }
    return out;
}

/// Families split on ';' when present (unambiguous with poly coefficient
/// lists), else on ',' with poly coefficient runs re-joined.
inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    const char sep = text.find(';') != std::string::npos ? ';' : ',';
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, sep)) {
        if (sep == ',' && !out.empty() && out.back().rfind("poly", 0) == 0) {
            out.back() += "," + tok;
        } else if (!tok.empty()) {
            out.push_back(tok);
        }
    }
    return out;
}

inline std::uint64_t env_seed() {
    if (const char* s = std::getenv("HEAVENLY_SEED")) return std::stoull(s);
    return 12345;
}

inline json report_header(const std::string& command) {
    json rep;
    rep["schema"] = kReportSchema;
    rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    rep["command"] = command;
    return rep;
}

inline void emit(const json& rep, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << rep.dump(2) << "\n";
    } else {
        std::ofstream f(output);
        if (!f) throw ConfigError("cannot open output file: " + output);
        f << rep.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
    ClassId cls{};
    ParamsArg params;
    std::vector<std::string> g_families{"exp"};
    int points = 100;
    int n = 0;
    double tolerance = 1e-9;
    double sys_tolerance = 1e-12;
    std::uint64_t seed = 0;
    bool autoscale = true;
    std::string output;
};

inline json run_verify_draw(const VerifyConfig& cfg, Rng& rng, bool& draw_pass) {
    json d;
    // resolve parameters: fresh draw, then explicit values override; redraw
    // the unpinned ones until admissible (a violation pinned by the user
    // survives all attempts and is reported below)
    const int n = cfg.n > 0 ? cfg.n : class_default_n(cfg.cls);
    ParamMap params;
    for (int attempt = 0; attempt < 100; ++attempt) {
        params = resolve_raw_params(draw_raw_params(cfg.cls, rng, n));
        for (const auto& [k, v] : cfg.params.overrides) {
            if (!params.count(k)) throw ConfigError("unknown parameter for class: " + k);
            params[k] = v;
        }
        if (constraint_check(cfg.cls, params, n).empty()) break;
    }
    d["params"] = params_json(params);

    const auto violations = constraint_check(cfg.cls, params, n);
    d["violations"] = json::array();
    for (const auto& v : violations)
        d["violations"].push_back({{"factor", v.factor}, {"value", cplx(v.value)}});

    draw_pass = violations.empty();
    json checks = json::array();
    json verdicts = json::object();
    json notes = json::array();
    try {
        const auto gs = choose_g(cfg.cls, params, n, cfg.g_families, cfg.autoscale);
        Instance inst = instantiate(cfg.cls, params, gs, n);
        d["derived"] = params_json(inst.derived);
        d["equation"] = inst.equation.name;
        if (inst.system) d["system"] = inst.system->name;

        VerifyOutcome outcome =
            verify_instance(inst, cfg.points, rng, cfg.tolerance, cfg.sys_tolerance);
        bool solution = true;
        for (const auto& c : outcome.checks) {
            checks.push_back({{"name", c.name},
                              {"maxAbsResidual", c.max_abs},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
            solution = solution && c.pass;
            draw_pass = draw_pass && c.pass;
        }
        verdicts["solution"] = solution;

        if (class_on_barred_coords(inst.id)) {
            double worst = 0.0;
            for (int k = 0; k < cfg.points; ++k)
                worst = std::max(worst,
                                 reality_defect(inst.ansatz, rng.unit_disk(), rng.unit_disk()));
            const bool pass = worst < 1e-12;
            checks.push_back({{"name", "reality|Im u|"},
                              {"maxAbsResidual", worst},
                              {"tolerance", 1e-12},
                              {"pass", pass}});
            draw_pass = draw_pass && pass;
        }

        const EquationId eq_id = parse_equation_id(inst.equation.name);
        if (has_legendre_condition(eq_id)) {
            double best = 0.0;
            for (int k = 0; k < cfg.points; ++k) {
                const Point4 y = rng.polydisk_point();
                const Jet4 j = eval_jet(inst.pde_ansatz, y);
                const Complex L = legendre_condition(eq_id, j);
                const double scale = std::abs(j.h(0, 0) * j.h(1, 1)) +
                                     std::abs(j.h(2, 2) * j.h(1, 1)) +
                                     std::abs(j.h(0, 1) * j.h(0, 1)) +
                                     std::abs(j.h(1, 2) * j.h(1, 2));
                best = std::max(best, std::abs(L) / (1.0 + scale));
            }
            const bool ok = best > 1e-8;
            verdicts["legendre_ok"] = ok;
            d["legendreConditionMax"] = best;
            draw_pass = draw_pass && ok;
        } else {
            verdicts["legendre_ok"] = nullptr;
        }

        if (outcome.degenerate_g) {
            verdicts["non_invariant"] = nullptr;
            notes.push_back("g'=0: non-invariance untestable");
        } else {
            bool any = false;
            json factors = json::array();
            for (int k = 0; k < std::min(cfg.points, 32); ++k) {
                const Point4 x = rng.polydisk_point();
                const ConditionReport rep = noninvariance_verdict(cfg.cls, inst, x);
                if (k == 0) {
                    json f = json::object();
                    for (const auto& [name, value] : rep.region_factors) f[name] = cplx(value);
                    d["jacobianGeneric"] = cplx(rep.generic_value);
                    if (rep.closed_form_value) d["jacobianClosed"] = cplx(*rep.closed_form_value);
                    d["regionFactors"] = f;
                }
                any = any || rep.satisfied;
            }
            verdicts["non_invariant"] = any;
            draw_pass = draw_pass && any;
        }
    } catch (const std::exception& e) {
        notes.push_back(std::string("error: ") + e.what());
        draw_pass = false;
    }
    d["checks"] = checks;
    d["verdicts"] = verdicts;
    if (!notes.empty()) d["notes"] = notes;
    d["pass"] = draw_pass;
    return d;
}

inline int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
    json rep = report_header("verify");
    rep["class"] = class_name(cfg.cls);
    rep["seed"] = cfg.seed;
    rep["n"] = cfg.n > 0 ? cfg.n : class_default_n(cfg.cls);
    rep["points"] = cfg.points;
    rep["gChoice"] = cfg.g_families;
    rep["autoscale"] = cfg.autoscale;
    rep["tolerance"] = cfg.tolerance;
    rep["systemTolerance"] = cfg.sys_tolerance;
    Rng rng(cfg.seed);
    bool all = true;
    json draws = json::array();
    for (int k = 0; k < cfg.params.draws; ++k) {
        bool pass = false;
        draws.push_back(run_verify_draw(cfg, rng, pass));
        all = all && pass;
    }
    rep["draws"] = draws;
    rep["pass"] = all;
    emit(rep, cfg.output, out);
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// determine
// ---------------------------------------------------------------------------

inline json poly_json(const Poly& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [mono, coef] : p.terms()) {
        json vars = json::array();
        for (auto v : mono) vars.push_back(names.at(v));
        terms.push_back({{"coeff", json::array({coef.re.to_string(), coef.im.to_string()})},
                         {"monomial", vars}});
    }
    return terms;
}

inline std::vector<TermPlan> parse_kinds(const std::string& text, int n) {
    std::vector<TermPlan> plans;
    if (text.empty()) {
        plans.assign(static_cast<std::size_t>(n), TermPlan{TermTag::Arb, 0});
        return plans;
    }
    for (const auto& tok : split_list(text)) {
        if (tok == "g") {
            plans.push_back({TermTag::Arb, 0});
        } else if (tok == "square") {
            plans.push_back({TermTag::Square, 0});
        } else if (tok.rfind("conj:", 0) == 0) {
            const int ref = std::stoi(tok.substr(5));
            if (ref < 1 || ref > static_cast<int>(plans.size()))
                throw ConfigError("conj kind must reference an earlier term");
            plans.push_back({TermTag::Conj, static_cast<std::size_t>(ref - 1)});
        } else {
            throw ConfigError("unknown term kind: " + tok);
        }
    }
    if (static_cast<int>(plans.size()) != n)
        throw ConfigError("--kinds must list exactly n terms");
    return plans;
}

struct DetermineConfig {
    std::string equation;
    std::string system;
    std::string kinds;
    std::string certify_class;
    int n = 1;
    int trials = 50;
    bool mutate = false;
    std::uint64_t seed = 0;
    double theta = 1.0;
    Complex A{1.0}, B{1.0}, C{1.0};
    std::string output;
};

inline int cmd_determine(const DetermineConfig& cfg, std::ostream& out) {
    json rep = report_header("determine");
    rep["seed"] = cfg.seed;
    int exit_code = 0;

    std::vector<DeterminingSystem> systems;
    std::vector<std::string> eq_names;
    if (!cfg.equation.empty() || !cfg.system.empty()) {
        const auto plans = parse_kinds(cfg.kinds, cfg.n);
        if (!cfg.equation.empty()) {
            EquationOptions opt;
            opt.theta = cfg.theta;
            opt.A = cfg.A;
            opt.B = cfg.B;
            opt.C = cfg.C;
            const PdeSpec spec = builtin_pde(parse_equation_id(cfg.equation), opt);
            rep["equation"] = spec.name;
            systems = {generate(spec, cfg.n, plans)};
            eq_names = {spec.name};
        } else {
            const SystemSpec sys = builtin_system(parse_system_id(cfg.system));
            rep["system"] = sys.name;
            systems = generate(sys, cfg.n, plans);
            for (const auto& eq : sys.equations) eq_names.push_back(eq.name);
        }
        rep["n"] = cfg.n;
        const auto names = coeff_var_names(cfg.n);
        rep["variables"] = names;
        json conds = json::array();
        for (std::size_t e = 0; e < systems.size(); ++e) {
            for (const auto& [name, poly] : systems[e].named()) {
                conds.push_back({{"equation", eq_names[e]},
                                 {"condition", name},
                                 {"zero", poly->is_zero()},
                                 {"polynomial", poly_json(*poly, names)},
                                 {"text", poly->to_string(names)}});
            }
        }
        rep["conditions"] = conds;
    }

    if (!cfg.certify_class.empty()) {
        const ClassId cls = parse_class_id(cfg.certify_class);
        const CertifyReport cert =
            certify(cls, cfg.trials, cfg.seed, class_default_n(cls), cfg.mutate);
        json cj;
        cj["class"] = class_name(cls);
        cj["target"] = cert.target;
        cj["trials"] = cert.trials;
        cj["exactPath"] = cert.exact_path;
        cj["mutated"] = cert.mutated;
        cj["failedTrials"] = cert.failed_trials;
        if (cert.exact_path)
            cj["allExactZero"] = cert.all_exact_zero;
        else
            cj["maxRelResidual"] = cert.max_rel_residual;
        cj["certified"] = cert.certified();
        rep["certify"] = cj;
        if (!cert.mutated && !cert.certified()) exit_code = 1;
        if (cert.mutated && cert.failed_trials < (cfg.trials * 49 + 49) / 50) exit_code = 1;
    }

    rep["pass"] = exit_code == 0;
    emit(rep, cfg.output, out);
    return exit_code;
}

// ---------------------------------------------------------------------------
// conditions
// ---------------------------------------------------------------------------

struct ConditionsConfig {
    ClassId cls{};
    ParamsArg params;
    std::vector<std::string> g_families{"exp"};
    int points = 10;
    int n = 0;
    std::uint64_t seed = 0;
    std::string output;
};

inline int cmd_conditions(const ConditionsConfig& cfg, std::ostream& out) {
    json rep = report_header("conditions");
    rep["class"] = class_name(cfg.cls);
    rep["seed"] = cfg.seed;
    Rng rng(cfg.seed);
    const int n = cfg.n > 0 ? cfg.n : class_default_n(cfg.cls);
    bool all = true;
    json draws = json::array();
    for (int k = 0; k < cfg.params.draws; ++k) {
        json d;
        ParamMap params = draw_params(cfg.cls, rng, n);
        for (const auto& [key, v] : cfg.params.overrides) params[key] = v;
        d["params"] = params_json(params);
        try {
            const auto gs = choose_g(cfg.cls, params, n, cfg.g_families, true);
            Instance inst = instantiate(cfg.cls, params, gs, n);
            const EquationId eq_id = parse_equation_id(inst.equation.name);

            double det_rel = 0.0, leg_rel = 0.0;
            bool has_closed_det = false, has_closed_leg = false;
            for (int p = 0; p < cfg.points; ++p) {
                const Point4 x = rng.polydisk_point();
                const auto g1 = term_first_derivs(inst.ansatz, x);
                const Complex generic = det4(jacobian_matrix(inst.ansatz, x));
                if (const auto closed = jacobian_det_closed(cfg.cls, params, g1, &x)) {
                    has_closed_det = true;
                    det_rel = std::max(det_rel, rel_diff(generic, closed->v));
                }
                if (has_legendre_condition(eq_id)) {
                    const Point4 y = rng.polydisk_point();
                    const Complex gl = legendre_condition(eq_id, eval_jet(inst.pde_ansatz, y));
                    const auto g2 = term_second_derivs(inst.pde_ansatz, y);
                    if (const auto closed = closed_form_condition(cfg.cls, params, g2)) {
                        has_closed_leg = true;
                        leg_rel = std::max(leg_rel, rel_diff(gl, closed->v));
                    }
                }
            }
            json checks = json::array();
            if (has_closed_det) {
                const bool ok = det_rel < 1e-10;
                checks.push_back({{"name", "closed-vs-generic-jacobian"},
                                  {"maxRelDiff", det_rel},
                                  {"tolerance", 1e-10},
                                  {"pass", ok}});
                all = all && ok;
            }
            if (has_closed_leg) {
                const bool ok = leg_rel < 1e-8;
                checks.push_back({{"name", "closed-vs-generic-legendre"},
                                  {"maxRelDiff", leg_rel},
                                  {"tolerance", 1e-8},
                                  {"pass", ok}});
                all = all && ok;
            }
            const ConditionReport verdict =
                noninvariance_verdict(cfg.cls, inst, rng.polydisk_point());
            json vj;
            vj["satisfied"] = verdict.satisfied;
            vj["generic"] = cplx(verdict.generic_value);
            if (verdict.closed_form_value) vj["closedForm"] = cplx(*verdict.closed_form_value);
            json factors = json::object();
            for (const auto& [name, value] : verdict.region_factors) factors[name] = cplx(value);
            vj["regionFactors"] = factors;
            d["checks"] = checks;
            d["verdict"] = vj;
        } catch (const std::exception& e) {
            d["error"] = e.what();
            all = false;
        }
        draws.push_back(d);
    }
    rep["draws"] = draws;
    rep["pass"] = all;
    emit(rep, cfg.output, out);
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// metric
// ---------------------------------------------------------------------------

inline bool metric_pairs_with(MetricId m, ClassId c) {
    switch (m) {
    case MetricId::Kahler:
        return c == ClassId::CmaSq;
    case MetricId::HcmaLeg:
        return c == ClassId::HcmaI || c == ClassId::HcmaII || c == ClassId::HcmaIII ||
               c == ClassId::RefMalykhExp;
    case MetricId::Heavenly:
        return false; // catalogued heavenly classes carry the transformed potential
    case MetricId::HeavenlyLeg:
        return c == ClassId::H2Equal || c == ClassId::H2HighI || c == ClassId::H2HighII ||
               c == ClassId::H2SeriesEqual || c == ClassId::H2SeriesHighI ||
               c == ClassId::H2SeriesHighII;
    }
    return false;
}

struct MetricConfig {
    MetricId family{};
    ClassId cls{};
    ParamsArg params;
    std::vector<std::string> g_families{"exp"};
    int points = 10;
    int n = 0;
    std::uint64_t seed = 0;
    std::string output;
};

inline int cmd_metric(const MetricConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!metric_pairs_with(cfg.family, cfg.cls)) {
        err << "metric family " << metric_name(cfg.family) << " does not pair with class "
            << class_name(cfg.cls) << "\n";
        return 2;
    }
    json rep = report_header("metric");
    rep["family"] = metric_name(cfg.family);
    rep["class"] = class_name(cfg.cls);
    rep["seed"] = cfg.seed;
    Rng rng(cfg.seed);
    const int n = cfg.n > 0 ? cfg.n : class_default_n(cfg.cls);
    json draws = json::array();
    for (int k = 0; k < cfg.params.draws; ++k) {
        json d;
        ParamMap params = draw_params(cfg.cls, rng, n);
        for (const auto& [key, v] : cfg.params.overrides) params[key] = v;
        d["params"] = params_json(params);
        const auto gs = choose_g(cfg.cls, params, n, cfg.g_families, true);
        const Instance inst = instantiate(cfg.cls, params, gs, n);
        json rows = json::array();
        for (int p = 0; p < cfg.points; ++p) {
            Point4 x;
            if (class_on_barred_coords(cfg.cls)) {
                const Complex z1 = rng.unit_disk(), z2 = rng.unit_disk();
                x = {z1, std::conj(z1), z2, std::conj(z2)};
            } else {
                x = rng.polydisk_point();
            }
            json row;
            row["point"] = json::array({cplx(x[0]), cplx(x[1]), cplx(x[2]), cplx(x[3])});
            try {
                const Metric4 m = metric_at(cfg.family, eval_jet(inst.ansatz, x));
                json comp = json::array();
                for (int mu = 0; mu < 4; ++mu) {
                    json rowj = json::array();
                    for (int nu = 0; nu < 4; ++nu) rowj.push_back(cplx(m.g[mu][nu]));
                    comp.push_back(rowj);
                }
                row["components"] = comp;
                row["det"] = cplx(metric_det(m));
            } catch (const SingularDenominator& e) {
                row["skipped"] = e.factor_name;
            }
            rows.push_back(row);
        }
        d["rows"] = rows;
        draws.push_back(d);
    }
    rep["draws"] = draws;
    rep["pass"] = true;
    emit(rep, cfg.output, out);
    return 0;
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification driver for heavenly-equation solution classes"};
    app.require_subcommand(1);

    std::string params_text, g_text, output, config_file;
    std::uint64_t seed_flag = 0;
    int points = 0, nterms = 0;
    double tolerance = 0.0, sys_tolerance = 0.0;
    bool raw_g = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--params", params_text, "name=value list or random:<seed>:<draws>");
        sub->add_option("--g", g_text, "scalar function families, e.g. exp or exp,cos");
        sub->add_option("--points", points, "sample points per draw");
        sub->add_option("--n", nterms, "series term count");
        sub->add_option("--seed", seed_flag, "master seed (default HEAVENLY_SEED or 12345)");
        sub->add_option("--output", output, "write the JSON report to this file");
        sub->add_option("--config", config_file, "JSON file with the same keys; flags win");
    };

    std::string class_text, family_text;
    CLI::App* verify = app.add_subcommand("verify", "check a solution class end to end");
    verify->add_option("--class", class_text, "solution class");
    verify->add_option("--tolerance", tolerance, "PDE residual tolerance");
    verify->add_option("--sys-tolerance", sys_tolerance, "linear subsystem tolerance");
    verify->add_flag("--raw-g", raw_g, "disable argument auto-scaling");
    add_common(verify);

    std::string eq_text, sys_text, kinds_text, certify_text;
    int dn = 1, trials = 50;
    bool mutate = false;
    double theta = 1.0;
    std::string a_text = "1", b_text = "1", c_text = "1";
    CLI::App* determine = app.add_subcommand("determine", "regenerate determining systems");
    determine->add_option("--equation", eq_text, "equation id");
    determine->add_option("--system", sys_text, "system id");
    determine->add_option("--n", dn, "ansatz term count");
    determine->add_option("--kinds", kinds_text, "term kinds: g,square,conj:<k>");
    determine->add_option("--certify", certify_text, "certify this class's relations");
    determine->add_option("--trials", trials, "certification trials");
    determine->add_flag("--mutate", mutate, "perturb one relation (expects failure)");
    determine->add_option("--theta", theta, "theta for cma-general/mixed");
    determine->add_option("--A", a_text, "asymm A");
    determine->add_option("--B", b_text, "asymm B");
    determine->add_option("--C", c_text, "asymm C");
    determine->add_option("--seed", seed_flag, "master seed");
    determine->add_option("--output", output, "write the JSON report to this file");

    CLI::App* conditions = app.add_subcommand("conditions", "closed-form condition checks");
    conditions->add_option("--class", class_text, "solution class");
    add_common(conditions);

    CLI::App* metric = app.add_subcommand("metric", "sample metric components");
    metric->add_option("--family", family_text, "metric family");
    metric->add_option("--class", class_text, "solution class");
    add_common(metric);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        // config file values fill any flag the user did not pass
        json file_cfg = json::object();
        if (!config_file.empty()) {
            std::ifstream f(config_file);
            if (!f) throw ConfigError("cannot open config file: " + config_file);
            f >> file_cfg;
        }
        auto cfg_str = [&](const char* key, std::string& slot) {
            if (slot.empty() && file_cfg.contains(key)) slot = file_cfg[key].get<std::string>();
        };
        auto cfg_int = [&](const char* key, int& slot) {
            if (slot == 0 && file_cfg.contains(key)) slot = file_cfg[key].get<int>();
        };
        cfg_str("class", class_text);
        cfg_str("params", params_text);
        cfg_str("g", g_text);
        cfg_str("family", family_text);
        cfg_int("points", points);
        cfg_int("n", nterms);
        if (tolerance == 0.0 && file_cfg.contains("tolerance"))
            tolerance = file_cfg["tolerance"].get<double>();
        if (seed_flag == 0 && file_cfg.contains("seed"))
            seed_flag = file_cfg["seed"].get<std::uint64_t>();

        ParamsArg pa = params_text.empty() ? ParamsArg{true, env_seed(), 1, {}}
                                           : parse_params_arg(params_text);
        if (!pa.random) pa.draws = 1;
        std::uint64_t seed = seed_flag != 0 ? seed_flag : (pa.random && !params_text.empty()
                                                               ? pa.seed
                                                               : env_seed());

        if (app.got_subcommand(verify) || app.got_subcommand(conditions) ||
            app.got_subcommand(metric)) {
            if (class_text.empty()) throw ConfigError("--class is required");
        }
        if (app.got_subcommand(metric) && family_text.empty())
            throw ConfigError("--family is required");
        if (app.got_subcommand(verify)) {
            VerifyConfig cfg;
            cfg.cls = parse_class_id(class_text);
            cfg.params = pa;
            if (!g_text.empty()) cfg.g_families = split_list(g_text);
            if (points > 0) cfg.points = points;
            if (nterms > 0) cfg.n = nterms;
            if (tolerance > 0.0) cfg.tolerance = tolerance;
            if (sys_tolerance > 0.0) cfg.sys_tolerance = sys_tolerance;
            cfg.seed = seed;
            cfg.autoscale = !raw_g;
            cfg.output = output;
            if (cfg.points < 1) throw ConfigError("points must be >= 1");
            return cmd_verify(cfg, out);
        }
        if (app.got_subcommand(determine)) {
            DetermineConfig cfg;
            cfg.equation = eq_text;
            cfg.system = sys_text;
            cfg.kinds = kinds_text;
            cfg.certify_class = certify_text;
            cfg.n = dn;
            cfg.trials = trials;
            cfg.mutate = mutate;
            cfg.seed = seed;
            cfg.theta = theta;
            cfg.A = ScalarFn::parse_complex(a_text);
            cfg.B = ScalarFn::parse_complex(b_text);
            cfg.C = ScalarFn::parse_complex(c_text);
            cfg.output = output;
            if (cfg.equation.empty() && cfg.system.empty() && cfg.certify_class.empty())
                throw ConfigError("determine needs --equation, --system or --certify");
            if (!cfg.equation.empty() && !cfg.system.empty())
                throw ConfigError("pass either --equation or --system, not both");
            return cmd_determine(cfg, out);
        }
        if (app.got_subcommand(conditions)) {
            ConditionsConfig cfg;
            cfg.cls = parse_class_id(class_text);
            cfg.params = pa;
            if (!g_text.empty()) cfg.g_families = split_list(g_text);
            if (points > 0) cfg.points = points;
            if (nterms > 0) cfg.n = nterms;
            cfg.seed = seed;
            cfg.output = output;
            return cmd_conditions(cfg, out);
        }
        if (app.got_subcommand(metric)) {
            MetricConfig cfg;
            cfg.family = parse_metric_id(family_text);
            cfg.cls = parse_class_id(class_text);
            cfg.params = pa;
            if (!g_text.empty()) cfg.g_families = split_list(g_text);
            if (points > 0) cfg.points = points;
            if (nterms > 0) cfg.n = nterms;
            cfg.seed = seed;
            cfg.output = output;
            return cmd_metric(cfg, out, err);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownEquation& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace heavenly::cli
