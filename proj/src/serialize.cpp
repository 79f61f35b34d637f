#include "pmfp/serialize.hpp"

#include <charconv>
#include <cmath>

namespace pmfp {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

ordered_json json_number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0.0 ? "inf" : "-inf";
}

namespace {

ordered_json number_array(const std::vector<double>& vs) {
    ordered_json arr = ordered_json::array();
    for (double v : vs) arr.push_back(json_number(v));
    return arr;
}

}  // namespace

ordered_json to_json(const AxiomReport& report) {
    ordered_json j;
    j["passed"] = report.passed;
    j["sample_size"] = report.sample_size;
    j["tol"] = json_number(report.tol);
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json jv;
        jv["axiom"] = to_string(v.axiom);
        jv["witness"] = number_array(v.witness);
        jv["lhs"] = json_number(v.lhs);
        jv["rhs"] = json_number(v.rhs);
        violations.push_back(std::move(jv));
    }
    j["violations"] = std::move(violations);
    return j;
}

ordered_json to_json(const Certificate& cert) {
    ordered_json j;
    j["condition"] = to_string(cert.condition);
    j["holds"] = cert.holds;
    j["alpha_used"] =
        cert.alpha_used ? json_number(*cert.alpha_used) : ordered_json(nullptr);
    if (cert.witness.empty()) {
        j["witness"] = nullptr;
    } else {
        ordered_json w;
        w["points"] = number_array(cert.witness);
        w["lhs"] = json_number(cert.witness_lhs);
        w["rhs"] = json_number(cert.witness_rhs);
        j["witness"] = std::move(w);
    }
    j["margin"] = json_number(cert.margin);
    j["density"] = cert.density;
    j["pairs_checked"] = cert.pairs_checked;
    j["pairs_skipped"] = cert.pairs_skipped;
    return j;
}

ordered_json to_json(const AlphaEstimate& est) {
    ordered_json j;
    j["alpha_hat"] = json_number(est.alpha_hat);
    if (est.has_witness) {
        ordered_json w;
        w["x"] = json_number(est.x);
        w["y"] = json_number(est.y);
        w["num"] = json_number(est.num);
        w["den"] = json_number(est.den);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["pairs_checked"] = est.pairs_checked;
    return j;
}

ordered_json to_json(const SequenceVerdict& verdict) {
    ordered_json j;
    j["kind"] = to_string(verdict.kind);
    j["holds"] = verdict.holds;
    j["residual"] = json_number(verdict.residual);
    j["prefix_length"] = verdict.prefix_length;
    return j;
}

ordered_json to_json(const SolveResult& result) {
    ordered_json j;
    j["status"] = to_string(result.status);
    j["iterations"] = result.trace.iterates.size() - 1;
    switch (result.status) {
        case SolveStatus::Converged:
            j["fixed_point"] = json_number(result.fixed_point);
            j["p_uu"] = json_number(result.p_uu);
            j["orbital_residual"] = json_number(result.orbital_residual);
            break;
        case SolveStatus::Cycle:
            j["period"] = result.period;
            j["cycle_orbit"] = number_array(result.cycle_orbit);
            break;
        case SolveStatus::Exhausted:
            break;
    }
    if (result.has_membership) {
        j["membership"] = result.membership;
        j["in_intersection"] = result.in_intersection;
    }
    return j;
}

ordered_json to_json(const OrbitTrace& trace) {
    ordered_json j;
    j["iterates"] = number_array(trace.iterates);
    j["p_step"] = number_array(trace.p_step);
    j["ps_step"] = number_array(trace.ps_step);
    j["self_dist"] = number_array(trace.self_dist);
    return j;
}

ordered_json to_json(const XpResult& xp) {
    ordered_json j;
    j["rho_p"] = json_number(xp.rho_p);
    j["Xp"] = number_array(xp.xp);
    return j;
}

ordered_json to_json(const SetDistance& d) {
    ordered_json j;
    j["delta"] = json_number(d.delta);
    j["witness"] = number_array({d.x, d.y});
    return j;
}

ordered_json to_json(const RateFit& fit) {
    ordered_json j;
    j["rate"] = json_number(fit.rate);
    j["r_squared"] = json_number(fit.r_squared);
    j["steps_used"] = fit.steps_used;
    return j;
}

std::string to_csv(const OrbitTrace& trace) {
    std::string csv = "n,x_n,p_step,ps_step,self_dist\n";
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        csv += std::to_string(n);
        csv += ',';
        csv += format_double(trace.iterates[n]);
        csv += ',';
        if (n < trace.p_step.size()) csv += format_double(trace.p_step[n]);
        csv += ',';
        if (n < trace.ps_step.size()) csv += format_double(trace.ps_step[n]);
        csv += ',';
        csv += format_double(trace.self_dist[n]);
        csv += '\n';
    }
    return csv;
}

}  // namespace pmfp
