// pmfp: partial-metric fixed-point toolkit.
//
// Subcommands: check-axioms, verify, solve, demo. Structured output in
// json, csv, or text; exit codes encode the verdict so scripts can branch
// without parsing (see README).

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmfp/axioms.hpp"
#include "pmfp/catalog.hpp"
#include "pmfp/contraction.hpp"
#include "pmfp/errors.hpp"
#include "pmfp/metric_expr.hpp"
#include "pmfp/serialize.hpp"
#include "pmfp/solver.hpp"
#include "pmfp/text_specs.hpp"

namespace {

using pmfp::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitCycle = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitEscape = 5;

struct CommonOpts {
    std::string space_name;
    std::string space_custom;
    std::string map_spec;
    std::string sets_spec;
    std::size_t grid = 100;
    double tol = 1e-9;
    std::string output = "text";
};

struct Resolved {
    pmfp::PartialMetric space;
    std::optional<pmfp::PiecewiseMap> map;
    std::optional<pmfp::CyclicDecomposition> decomp;
    std::function<std::vector<double>(std::size_t)> sampler;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--space", o.space_name,
                    "Catalog space: max, rationals-max, hybrid-unit, counterexample");
    cmd->add_option("--space-custom", o.space_custom,
                    "Custom metric expression in x and y, e.g. \"x+y\" or "
                    "\"max(x,y)\"; domain is [0,1] unless --sets is given");
    cmd->add_option("--map", o.map_spec,
                    "Self-map: affine expression (\"x/2\") or guarded pieces "
                    "(\"[0,1): 3/2; {1.5}: 1/2; [3,4]: (x-2)/2\")");
    cmd->add_option("--sets", o.sets_spec,
                    "Cyclic sets A_1..A_k, semicolon separated, e.g. "
                    "\"[0,0.5];[0.5,1]\"");
    cmd->add_option("--grid", o.grid, "Sample points per set")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "Numeric tolerance")->capture_default_str();
    cmd->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

Resolved resolve(const CommonOpts& o) {
    if (!o.space_name.empty() && !o.space_custom.empty()) {
        throw pmfp::ArgumentError("--space and --space-custom are mutually exclusive");
    }
    std::optional<pmfp::CyclicDecomposition> decomp;
    if (!o.sets_spec.empty()) decomp = pmfp::parse_decomp_spec(o.sets_spec);

    std::optional<Resolved> r;
    if (!o.space_name.empty()) {
        pmfp::CatalogEntry entry = pmfp::make_entry(o.space_name);
        r.emplace(Resolved{std::move(entry.space), std::move(entry.map),
                           decomp ? std::move(decomp) : std::move(entry.decomposition),
                           std::move(entry.sampler)});
    } else if (!o.space_custom.empty()) {
        pmfp::SetDescriptor domain;
        if (decomp) {
            for (const auto& set : decomp->sets) domain = set_union(domain, set);
        } else {
            domain = pmfp::SetDescriptor::closed(0.0, 1.0);
        }
        pmfp::MetricRule rule;
        rule.kind = pmfp::MetricRule::Kind::Custom;
        rule.fallback = pmfp::MetricExpr::parse(o.space_custom);
        r.emplace(Resolved{
            pmfp::PartialMetric("custom(" + o.space_custom + ")", domain, rule),
            std::nullopt, std::move(decomp), nullptr});
    } else {
        throw pmfp::ArgumentError("need --space or --space-custom");
    }
    if (!o.map_spec.empty()) {
        r->map = pmfp::parse_map_spec(o.map_spec, r->space.domain());
    }
    return std::move(*r);
}

std::vector<double> sample_points(const Resolved& r, std::size_t density) {
    if (r.sampler) return r.sampler(density);
    return pmfp::sample(r.space.domain(), density);
}

ordered_json make_config(const std::string& command, const CommonOpts& o,
                         const Resolved& r) {
    ordered_json config;
    config["space"] = r.space.name();
    config["map"] = r.map ? ordered_json(r.map->name()) : ordered_json(nullptr);
    if (r.decomp) {
        ordered_json sets = ordered_json::array();
        for (const auto& set : r.decomp->sets) sets.push_back(pmfp::to_string(set));
        config["sets"] = std::move(sets);
    } else {
        config["sets"] = nullptr;
    }
    config["grid"] = o.grid;
    config["tol"] = pmfp::json_number(o.tol);
    config["output"] = o.output;
    (void)command;
    return config;
}

void print_json(const ordered_json& envelope) {
    std::fputs(envelope.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
}

std::string witness_text(const pmfp::Certificate& cert) {
    if (cert.witness.empty()) return "none (vacuous scan)";
    std::string s = "(";
    for (std::size_t i = 0; i < cert.witness.size(); ++i) {
        if (i) s += ", ";
        s += pmfp::format_double(cert.witness[i]);
    }
    s += ") lhs=" + pmfp::format_double(cert.witness_lhs) +
         " rhs=" + pmfp::format_double(cert.witness_rhs);
    return s;
}

void print_certificate_text(const pmfp::Certificate& cert) {
    std::printf("%s: %s\n", pmfp::to_string(cert.condition),
                cert.holds ? "HOLDS" : "FAILS");
    if (cert.alpha_used) {
        std::printf("  alpha: %s\n", pmfp::format_double(*cert.alpha_used).c_str());
    }
    std::printf("  margin: %s\n", pmfp::format_double(cert.margin).c_str());
    std::printf("  worst case: %s\n", witness_text(cert).c_str());
    std::printf("  pairs checked: %zu (skipped %zu) at density %zu\n",
                cert.pairs_checked, cert.pairs_skipped, cert.density);
}

std::string certificate_csv(const pmfp::Certificate& cert) {
    std::string csv =
        "condition,holds,alpha_used,margin,witness,lhs,rhs,density,pairs_checked,"
        "pairs_skipped\n";
    csv += pmfp::to_string(cert.condition);
    csv += cert.holds ? ",true," : ",false,";
    if (cert.alpha_used) csv += pmfp::format_double(*cert.alpha_used);
    csv += ',';
    csv += pmfp::format_double(cert.margin);
    csv += ',';
    for (std::size_t i = 0; i < cert.witness.size(); ++i) {
        if (i) csv += ' ';
        csv += pmfp::format_double(cert.witness[i]);
    }
    csv += ',' + pmfp::format_double(cert.witness_lhs);
    csv += ',' + pmfp::format_double(cert.witness_rhs);
    csv += ',' + std::to_string(cert.density);
    csv += ',' + std::to_string(cert.pairs_checked);
    csv += ',' + std::to_string(cert.pairs_skipped);
    csv += '\n';
    return csv;
}

// ---------------------------------------------------------------- check-axioms

int run_check_axioms(const CommonOpts& o) {
    Resolved r = resolve(o);
    const auto pts = sample_points(r, o.grid);
    const pmfp::AxiomReport report = pmfp::check_axioms(r.space, pts, o.tol);

    if (o.output == "json") {
        ordered_json envelope;
        envelope["command"] = "check-axioms";
        envelope["config"] = make_config("check-axioms", o, r);
        envelope["result"] = pmfp::to_json(report);
        print_json(envelope);
    } else if (o.output == "csv") {
        std::string csv = "axiom,x,y,z,lhs,rhs\n";
        for (const auto& v : report.violations) {
            csv += pmfp::to_string(v.axiom);
            for (std::size_t i = 0; i < 3; ++i) {
                csv += ',';
                if (i < v.witness.size()) csv += pmfp::format_double(v.witness[i]);
            }
            csv += ',' + pmfp::format_double(v.lhs);
            csv += ',' + pmfp::format_double(v.rhs);
            csv += '\n';
        }
        std::fputs(csv.c_str(), stdout);
    } else {
        std::printf("axioms on %s: %s (%zu points, tol %s)\n", r.space.name().c_str(),
                    report.passed ? "PASS" : "FAIL", report.sample_size,
                    pmfp::format_double(report.tol).c_str());
        std::size_t shown = 0;
        for (const auto& v : report.violations) {
            if (shown == 10) {
                std::printf("  ... and %zu more\n", report.violations.size() - shown);
                break;
            }
            std::string pts_text;
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                if (i) pts_text += ", ";
                pts_text += pmfp::format_double(v.witness[i]);
            }
            std::printf("  %s violated at (%s): lhs=%s rhs=%s\n",
                        pmfp::to_string(v.axiom), pts_text.c_str(),
                        pmfp::format_double(v.lhs).c_str(),
                        pmfp::format_double(v.rhs).c_str());
            ++shown;
        }
    }
    return report.passed ? kExitOk : kExitFailedCheck;
}

// ----------------------------------------------------------------------- verify

int run_verify(const std::string& condition, const CommonOpts& o,
               const std::optional<double>& alpha) {
    Resolved r = resolve(o);
    if (!r.map) {
        throw pmfp::ArgumentError(
            "verify needs a map: pass --map or pick a catalog space that has one");
    }
    const pmfp::CyclicDecomposition decomp =
        r.decomp ? *r.decomp
                 : pmfp::CyclicDecomposition{{r.space.domain()}};

    std::optional<pmfp::Certificate> cert;
    std::optional<pmfp::AlphaEstimate> estimate;
    if (condition == "c1") {
        cert = pmfp::verify_inclusions(*r.map, decomp, o.grid);
    } else if (condition == "c2") {
        if (alpha) {
            cert = pmfp::verify_c2(r.space, *r.map, decomp, *alpha, o.grid);
        } else {
            estimate = pmfp::estimate_alpha(r.space, *r.map, decomp, o.grid);
        }
    } else if (condition == "pc2") {
        if (!alpha) throw pmfp::ArgumentError("verify pc2 needs --alpha");
        cert = pmfp::verify_partial_cyclic(r.space, *r.map, decomp, *alpha, o.grid);
    } else if (condition == "orbital") {
        if (!alpha) throw pmfp::ArgumentError("verify orbital needs --alpha");
        cert = pmfp::verify_orbital(r.space, *r.map, sample_points(r, o.grid), *alpha);
    } else {  // strict
        cert = pmfp::verify_strict(r.space, *r.map, decomp, o.grid);
    }

    const bool holds = cert ? cert->holds : estimate->alpha_hat < 1.0;

    if (o.output == "json") {
        ordered_json envelope;
        envelope["command"] = "verify";
        ordered_json config = make_config("verify", o, r);
        config["condition"] = condition;
        config["alpha"] = alpha ? pmfp::json_number(*alpha) : ordered_json(nullptr);
        envelope["config"] = std::move(config);
        ordered_json result;
        result["holds"] = holds;
        if (estimate) result["estimate"] = pmfp::to_json(*estimate);
        envelope["result"] = std::move(result);
        if (cert) envelope["certificate"] = pmfp::to_json(*cert);
        print_json(envelope);
    } else if (o.output == "csv") {
        if (cert) {
            std::fputs(certificate_csv(*cert).c_str(), stdout);
        } else {
            std::string csv = "alpha_hat,witness_x,witness_y,num,den,pairs_checked\n";
            csv += pmfp::format_double(estimate->alpha_hat);
            csv += ',';
            if (estimate->has_witness) {
                csv += pmfp::format_double(estimate->x) + ',' +
                       pmfp::format_double(estimate->y) + ',' +
                       pmfp::format_double(estimate->num) + ',' +
                       pmfp::format_double(estimate->den);
            } else {
                csv += ",,,";
            }
            csv += ',' + std::to_string(estimate->pairs_checked);
            csv += '\n';
            std::fputs(csv.c_str(), stdout);
        }
    } else {
        if (cert) {
            print_certificate_text(*cert);
        } else {
            std::printf("C2 estimate: alpha_hat = %s -> %s\n",
                        pmfp::format_double(estimate->alpha_hat).c_str(),
                        holds ? "contraction plausible (alpha_hat < 1)"
                              : "no contraction constant exists at this density");
            if (estimate->has_witness) {
                std::printf("  sup attained at (x, y) = (%s, %s): p(Tx,Ty)=%s, "
                            "p(x,y)=%s\n",
                            pmfp::format_double(estimate->x).c_str(),
                            pmfp::format_double(estimate->y).c_str(),
                            pmfp::format_double(estimate->num).c_str(),
                            pmfp::format_double(estimate->den).c_str());
            }
            std::printf("  pairs checked: %zu\n", estimate->pairs_checked);
        }
    }
    return holds ? kExitOk : kExitFailedCheck;
}

// ------------------------------------------------------------------------ solve

int run_solve(const CommonOpts& o, double x0, std::size_t max_iter) {
    Resolved r = resolve(o);
    if (!r.map) {
        throw pmfp::ArgumentError(
            "solve needs a map: pass --map or pick a catalog space that has one");
    }
    pmfp::SolverConfig config;
    config.tol = o.tol;
    config.max_iter = max_iter;

    const pmfp::SolveResult result =
        r.decomp ? pmfp::solve_cyclic(r.space, *r.map, *r.decomp, x0, config)
                 : pmfp::picard(r.space, *r.map, x0, config);

    if (o.output == "json") {
        ordered_json envelope;
        envelope["command"] = "solve";
        ordered_json cfg = make_config("solve", o, r);
        cfg["x0"] = pmfp::json_number(x0);
        cfg["max_iter"] = max_iter;
        envelope["config"] = std::move(cfg);
        envelope["result"] = pmfp::to_json(result);
        envelope["trace"] = pmfp::to_json(result.trace);
        print_json(envelope);
    } else if (o.output == "csv") {
        std::fputs(pmfp::to_csv(result.trace).c_str(), stdout);
    } else {
        const std::size_t steps = result.trace.iterates.size() - 1;
        switch (result.status) {
            case pmfp::SolveStatus::Converged:
                std::printf("converged in %zu steps: u = %s\n", steps,
                            pmfp::format_double(result.fixed_point).c_str());
                std::printf("  p(u,u) = %s\n",
                            pmfp::format_double(result.p_uu).c_str());
                std::printf("  |p(Tu,u) - p(Tu,Tu)| = %s\n",
                            pmfp::format_double(result.orbital_residual).c_str());
                if (result.has_membership) {
                    std::string sets;
                    for (bool b : result.membership) {
                        sets += b ? " yes" : " no";
                    }
                    std::printf("  membership per set:%s (intersection: %s)\n",
                                sets.c_str(),
                                result.in_intersection ? "yes" : "no");
                }
                break;
            case pmfp::SolveStatus::Cycle: {
                std::string orbit;
                for (std::size_t i = 0; i < result.cycle_orbit.size(); ++i) {
                    if (i) orbit += ", ";
                    orbit += pmfp::format_double(result.cycle_orbit[i]);
                }
                std::printf("cycle of period %zu after %zu steps: {%s}\n",
                            result.period, steps, orbit.c_str());
                break;
            }
            case pmfp::SolveStatus::Exhausted:
                std::printf("no verdict after %zu steps\n", steps);
                break;
        }
    }
    switch (result.status) {
        case pmfp::SolveStatus::Converged: return kExitOk;
        case pmfp::SolveStatus::Cycle: return kExitCycle;
        case pmfp::SolveStatus::Exhausted: return kExitExhausted;
    }
    return kExitExhausted;
}

// ------------------------------------------------------------------------- demo

struct DemoOutcome {
    bool ok = true;
    std::string text;
    ordered_json claims = ordered_json::array();

    void claim(const std::string& name, bool pass, const ordered_json& data) {
        ok = ok && pass;
        ordered_json c;
        c["claim"] = name;
        c["ok"] = pass;
        c["data"] = data;
        claims.push_back(std::move(c));
    }

    void line(const std::string& s) {
        text += "  ";
        text += s;
        text += '\n';
    }
};

DemoOutcome demo_hybrid_pair() {
    DemoOutcome out;
    pmfp::CatalogEntry entry = pmfp::make_hybrid_unit();
    const auto& space = entry.space;
    const auto& map = *entry.map;
    const auto& decomp = *entry.decomposition;
    out.text = "demo example-2.4: cyclic pair on the hybrid unit-interval space\n";

    const auto c1 = pmfp::verify_inclusions(map, decomp, 100);
    out.claim("C1: T(A) in B and T(B) in A", c1.holds, pmfp::to_json(c1));
    out.line(std::string("C1 inclusions: ") + (c1.holds ? "HOLDS" : "FAILS"));

    const auto est = pmfp::estimate_alpha(space, map, decomp, 100);
    const bool est_ok = std::fabs(est.alpha_hat - 0.5) <= 1e-9;
    out.claim("measured contraction ratio is 1/2", est_ok, pmfp::to_json(est));
    out.line("measured sup p(Tx,Ty)/p(x,y) = " + pmfp::format_double(est.alpha_hat) +
             " (so alpha = 3/4 is indeed admissible)");

    const auto c2 = pmfp::verify_c2(space, map, decomp, 0.75, 100);
    out.claim("C2 at alpha = 3/4", c2.holds, pmfp::to_json(c2));
    out.line(std::string("C2 at alpha=0.75: ") + (c2.holds ? "HOLDS" : "FAILS") +
             " (margin " + pmfp::format_double(c2.margin) + ")");

    for (double x0 : {0.0, 0.3, 1.0}) {
        const auto res = pmfp::solve_cyclic(space, map, decomp, x0, {});
        const bool ok = res.status == pmfp::SolveStatus::Converged &&
                        res.fixed_point == 0.5 && res.p_uu == 0.0 &&
                        res.in_intersection;
        out.claim("Picard from " + pmfp::format_double(x0) +
                      " reaches u=1/2 in A n B",
                  ok, pmfp::to_json(res));
        out.line("Picard from x0=" + pmfp::format_double(x0) + ": u = " +
                 pmfp::format_double(res.fixed_point) + " in " +
                 std::to_string(res.trace.iterates.size() - 1) +
                 " steps, p(u,u) = " + pmfp::format_double(res.p_uu) +
                 ", lies in both sets: " + (res.in_intersection ? "yes" : "no"));
    }

    // The same map fails C2 under the ordinary absolute-value metric, so
    // the partial-metric hypothesis is strictly weaker here.
    const auto abs_space =
        pmfp::PartialMetric::abs_rule("abs-unit", pmfp::SetDescriptor::closed(0, 1));
    const auto abs_c2 = pmfp::verify_c2(abs_space, map, decomp, 0.75, 100);
    out.claim("C2 fails for the same map under |x-y|", !abs_c2.holds,
              pmfp::to_json(abs_c2));
    out.line(std::string("same map under plain |x-y|: C2 at alpha=0.75 ") +
             (abs_c2.holds ? "HOLDS" : "FAILS") + " (worst pair " +
             witness_text(abs_c2) + ")");
    out.line("conclusion: the partial-metric contraction hypothesis is met where "
             "the ordinary-metric one is not");
    return out;
}

DemoOutcome demo_cycling_pair() {
    DemoOutcome out;
    pmfp::CatalogEntry entry = pmfp::make_counterexample();
    const auto& space = entry.space;
    const auto& map = *entry.map;
    const auto& decomp = *entry.decomposition;
    out.text = "demo example-2.5: a cycling pair where the one-set criterion "
               "misleads\n";

    const auto c1 = pmfp::verify_inclusions(map, decomp, 100);
    out.claim("C1: T cycles A and B", c1.holds, pmfp::to_json(c1));
    out.line(std::string("C1 inclusions: ") + (c1.holds ? "HOLDS" : "FAILS"));

    const auto pc2_free = pmfp::verify_partial_cyclic_alpha_free(space, map, decomp, 100);
    out.claim("alpha-free PC2: p(Tx,Ty) <= max{p(x,x), p(y,y)}", pc2_free.holds,
              pmfp::to_json(pc2_free));
    out.line(std::string("alpha-free PC2: ") + (pc2_free.holds ? "HOLDS" : "FAILS") +
             " (margin " + pmfp::format_double(pc2_free.margin) +
             "; no contraction constant needed)");

    const auto pc2 = pmfp::verify_partial_cyclic(space, map, decomp, 0.9, 100);
    out.claim("PC2 at alpha = 0.9", pc2.holds, pmfp::to_json(pc2));
    out.line(std::string("PC2 at alpha=0.9: ") + (pc2.holds ? "HOLDS" : "FAILS") +
             " (worst pair " + witness_text(pc2) + ")");

    const auto est = pmfp::estimate_alpha(space, map, decomp, 100);
    const bool est_ok = est.alpha_hat >= 1.0;
    out.claim("no C2 constant exists (alpha_hat >= 1)", est_ok, pmfp::to_json(est));
    out.line("measured sup p(Tx,Ty)/p(x,y) = " + pmfp::format_double(est.alpha_hat) +
             " at (x, y) = (" + pmfp::format_double(est.x) + ", " +
             pmfp::format_double(est.y) + "): not a cyclic contraction");

    const auto res = pmfp::picard(space, map, 0.0, {});
    const bool cycle_ok =
        res.status == pmfp::SolveStatus::Cycle && res.period == 2 &&
        res.cycle_orbit.size() == 2 && std::fabs(res.cycle_orbit[0] - 1.5) <= 1e-12 &&
        std::fabs(res.cycle_orbit[1] - 0.5) <= 1e-12;
    out.claim("Picard from 0 cycles with period 2 on {3/2, 1/2}", cycle_ok,
              pmfp::to_json(res));
    out.line("Picard from x0=0: cycle of period " + std::to_string(res.period) +
             ", orbit {" + pmfp::format_double(res.cycle_orbit.empty() ? 0.0 : res.cycle_orbit[0]) +
             ", " + pmfp::format_double(res.cycle_orbit.size() < 2 ? 0.0 : res.cycle_orbit[1]) +
             "}: no fixed point");

    bool empty_ok = true;
    for (std::size_t density : {10u, 50u, 100u, 250u}) {
        empty_ok = empty_ok &&
                   pmfp::sample(pmfp::set_intersect(decomp.sets[0], decomp.sets[1]),
                                density)
                       .empty();
    }
    out.claim("sampled A n B is empty at every density", empty_ok, empty_ok);
    out.line(std::string("sampled A n B at densities 10/50/100/250: ") +
             (empty_ok ? "empty" : "NONEMPTY"));
    out.line("conclusion: the one-set inequality holds yet the orbit cycles and "
             "A n B is empty, so that criterion does not extend to cyclic maps");
    return out;
}

DemoOutcome demo_edelstein_delta() {
    DemoOutcome out;
    pmfp::CatalogEntry counter = pmfp::make_counterexample();
    pmfp::CatalogEntry hybrid = pmfp::make_hybrid_unit();
    out.text = "demo edelstein-delta: set distances and the strict contraction "
               "condition\n";

    const auto d1 = pmfp::set_distance(counter.space, counter.decomposition->sets[0],
                                       counter.decomposition->sets[1], 100);
    const bool d1_ok = std::fabs(d1.delta - 1.5) <= 1e-9;
    out.claim("delta(A,B) = 3/2 on the cycling pair", d1_ok, pmfp::to_json(d1));
    out.line("cycling pair: delta(A,B) = " + pmfp::format_double(d1.delta) +
             " at (" + pmfp::format_double(d1.x) + ", " + pmfp::format_double(d1.y) +
             "): bounded away from zero");

    const auto strict_counter = pmfp::verify_strict(
        counter.space, *counter.map, *counter.decomposition, 100);
    out.claim("strict condition fails on the cycling pair", !strict_counter.holds,
              pmfp::to_json(strict_counter));
    out.line(std::string("strict p(Tx,Ty) < p(x,y) there: ") +
             (strict_counter.holds ? "HOLDS" : "FAILS") + " (worst pair " +
             witness_text(strict_counter) + ")");

    const auto d2 = pmfp::set_distance(hybrid.space, hybrid.decomposition->sets[0],
                                       hybrid.decomposition->sets[1], 100);
    const bool d2_ok = d2.delta == 0.0;
    out.claim("delta(A,B) = 0 on the hybrid pair", d2_ok, pmfp::to_json(d2));
    out.line("hybrid pair: delta(A,B) = " + pmfp::format_double(d2.delta) + " at (" +
             pmfp::format_double(d2.x) + ", " + pmfp::format_double(d2.y) + ")");

    pmfp::CatalogEntry max_entry = pmfp::make_max_entry();
    const pmfp::CyclicDecomposition whole{{max_entry.space.domain()}};
    const auto strict_half =
        pmfp::verify_strict(max_entry.space, *max_entry.map, whole, 100);
    out.claim("strict condition holds for x/2 on the max space", strict_half.holds,
              pmfp::to_json(strict_half));
    out.line(std::string("x/2 on the max space: strict condition ") +
             (strict_half.holds ? "HOLDS" : "FAILS") + " (zero-distance pairs skipped: " +
             std::to_string(strict_half.pairs_skipped) + ")");

    pmfp::PiecewiseMap identity("identity");
    identity.add_rule(max_entry.space.domain(), 1.0, 0.0);
    const auto strict_id =
        pmfp::verify_strict(max_entry.space, identity, whole, 100);
    out.claim("strict condition rejects the identity map", !strict_id.holds,
              pmfp::to_json(strict_id));
    out.line(std::string("identity on the max space: strict condition ") +
             (strict_id.holds ? "HOLDS" : "FAILS"));

    const auto xp = pmfp::compute_Xp(counter.space, counter.default_sample(100));
    const bool xp_ok = xp.rho_p == 0.0 && xp.xp.size() == 1 && xp.xp[0] == 0.0;
    out.claim("rho_p = 0 with X_p = {0} on the cycling space", xp_ok,
              pmfp::to_json(xp));
    out.line("cycling space: rho_p = " + pmfp::format_double(xp.rho_p) +
             ", X_p has " + std::to_string(xp.xp.size()) + " point(s)");
    return out;
}

DemoOutcome demo_k3_cycle() {
    DemoOutcome out;
    pmfp::CatalogEntry entry = pmfp::make_k3_demo();
    const auto& space = entry.space;
    const auto& map = *entry.map;
    const auto& decomp = *entry.decomposition;
    out.text = "demo k3-cycle: three cyclically shrinking sets under T(x) = x/4\n";

    const auto c1 = pmfp::verify_inclusions(map, decomp, 20);
    out.claim("C1: T(A_i) in A_{i+1} for all i", c1.holds, pmfp::to_json(c1));
    out.line(std::string("C1 inclusions around the 3-cycle: ") +
             (c1.holds ? "HOLD" : "FAIL"));

    const auto est = pmfp::estimate_alpha(space, map, decomp, 100);
    const bool est_ok = std::fabs(est.alpha_hat - 0.25) <= 1e-9;
    out.claim("measured contraction ratio is 1/4", est_ok, pmfp::to_json(est));
    out.line("measured sup p(Tx,Ty)/p(x,y) = " + pmfp::format_double(est.alpha_hat));

    const auto c2 = pmfp::verify_c2(space, map, decomp, 0.25, 100);
    out.claim("C2 at alpha = 1/4", c2.holds, pmfp::to_json(c2));
    out.line(std::string("C2 at alpha=0.25: ") + (c2.holds ? "HOLDS" : "FAILS"));

    const auto res = pmfp::solve_cyclic(space, map, decomp, 1.0, {});
    const bool solved = res.status == pmfp::SolveStatus::Converged &&
                        std::fabs(res.fixed_point) <= 1e-9 && res.in_intersection;
    out.claim("Picard from 1 converges to u=0 inside every A_i", solved,
              pmfp::to_json(res));
    out.line("Picard from x0=1: u = " + pmfp::format_double(res.fixed_point) +
             " after " + std::to_string(res.trace.iterates.size() - 1) +
             " steps; membership in all three sets: " +
             (res.in_intersection ? "yes" : "no"));
    out.line("conclusion: with k sets the fixed point lands in the intersection "
             "of all of them");
    return out;
}

int run_demo(const std::string& name, const std::string& output) {
    DemoOutcome out;
    if (name == "example-2.4") {
        out = demo_hybrid_pair();
    } else if (name == "example-2.5") {
        out = demo_cycling_pair();
    } else if (name == "edelstein-delta") {
        out = demo_edelstein_delta();
    } else {
        out = demo_k3_cycle();
    }

    if (output == "json") {
        ordered_json envelope;
        envelope["command"] = "demo";
        ordered_json config;
        config["name"] = name;
        config["output"] = output;
        envelope["config"] = std::move(config);
        ordered_json result;
        result["ok"] = out.ok;
        result["claims"] = std::move(out.claims);
        envelope["result"] = std::move(result);
        print_json(envelope);
    } else {
        std::fputs(out.text.c_str(), stdout);
        std::printf("demo verdict: %s\n", out.ok ? "all claims reproduced"
                                                 : "SOME CLAIMS FAILED");
    }
    return out.ok ? kExitOk : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed-point toolkit for partial metric spaces: axiom checks, "
                 "contraction certificates, Picard orbits, and scripted demos."};
    app.require_subcommand(1);

    CommonOpts axioms_opts;
    CLI::App* cmd_axioms = app.add_subcommand(
        "check-axioms", "Check axioms P1-P4 on a sampled space");
    add_common(cmd_axioms, axioms_opts);

    CommonOpts verify_opts;
    std::string condition;
    double verify_alpha = 0.0;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Verify a contraction hypothesis on sampled sets");
    cmd_verify
        ->add_option("condition", condition,
                     "One of: c1, c2, pc2, orbital, strict")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "pc2", "orbital", "strict"}));
    CLI::Option* alpha_opt = cmd_verify->add_option(
        "--alpha", verify_alpha,
        "Contraction constant in (0,1); c2 without it estimates the best one");
    add_common(cmd_verify, verify_opts);

    CommonOpts solve_opts;
    double x0 = 0.0;
    std::size_t max_iter = 10000;
    CLI::App* cmd_solve =
        app.add_subcommand("solve", "Iterate T from x0 until a verdict");
    cmd_solve->add_option("--x0", x0, "Start point")->required();
    cmd_solve->add_option("--max-iter", max_iter, "Iteration budget")
        ->capture_default_str();
    add_common(cmd_solve, solve_opts);

    std::string demo_name;
    std::string demo_output = "text";
    CLI::App* cmd_demo = app.add_subcommand("demo", "Run a scripted scenario");
    cmd_demo
        ->add_option("name", demo_name,
                     "One of: example-2.4, example-2.5, edelstein-delta, k3-cycle")
        ->required()
        ->check(CLI::IsMember(
            {"example-2.4", "example-2.5", "edelstein-delta", "k3-cycle"}));
    cmd_demo->add_option("--output", demo_output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (cmd_axioms->parsed()) return run_check_axioms(axioms_opts);
        if (cmd_verify->parsed()) {
            std::optional<double> alpha;
            if (alpha_opt->count() > 0) alpha = verify_alpha;
            return run_verify(condition, verify_opts, alpha);
        }
        if (cmd_solve->parsed()) return run_solve(solve_opts, x0, max_iter);
        if (cmd_demo->parsed()) return run_demo(demo_name, demo_output);
    } catch (const pmfp::DomainEscapeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitEscape;
    } catch (const pmfp::MapTotalityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitEscape;
    } catch (const pmfp::ArgumentError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadArgs;
    } catch (const pmfp::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailedCheck;
    }
    return kExitBadArgs;
}
