#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmfp/kernels.hpp"
#include "pmfp/metric_expr.hpp"
#include "pmfp/set_descriptor.hpp"

namespace pmfp {

// One guarded piece of a custom metric. The piece applies when both
// coordinates lie in the guard set; pieces are tried in order.
struct MetricPiece {
    SetDescriptor guard;
    MetricExpr expr;
};

struct MetricRule {
    enum class Kind { Max, AbsDiff, HybridUnit, Custom };
    Kind kind = Kind::Max;
    std::vector<MetricPiece> pieces;  // Custom only
    MetricExpr fallback;              // Custom only, used when no piece matches
};

// A named partial-metric space: a real domain plus an evaluation rule.
// Built-in rules route through the vectorized kernels; custom piecewise
// rules evaluate element-wise through the expression interpreter.
class PartialMetric {
public:
    PartialMetric(std::string name, SetDescriptor domain, MetricRule rule);

    static PartialMetric max_rule(std::string name, SetDescriptor domain);
    static PartialMetric abs_rule(std::string name, SetDescriptor domain);
    static PartialMetric hybrid_unit_rule(std::string name, SetDescriptor domain);

    // p(x,y). Throws DomainError naming the offending coordinate, and Error
    // if a custom rule evaluates negative.
    double p(double x, double y) const;

    // p^s(x,y) = 2 p(x,y) - p(x,x) - p(y,y), evaluated in that exact order.
    double induced(double x, double y) const;

    // Open ball membership: p(center,y) < p(center,center) + eps, strict.
    bool ball_contains(double center, double eps, double y) const;

    // Batch forms over already-validated points (callers sample the domain).
    // out[i] = p(x, ys[i]) and out[i] = p(xs[i], ys[i]) respectively.
    void p_row(double x, const double* ys, double* out, std::size_t n) const;
    void p_pairs(const double* xs, const double* ys, double* out, std::size_t n) const;

    const std::string& name() const { return name_; }
    const SetDescriptor& domain() const { return domain_; }
    const MetricRule& rule() const { return rule_; }
    bool kernel_backed() const { return rule_.kind != MetricRule::Kind::Custom; }

private:
    double eval_raw(double x, double y) const;
    void require_member(double v, const char* which) const;

    std::string name_;
    SetDescriptor domain_;
    MetricRule rule_;
    std::optional<kernels::Rule> kernel_rule_;
};

}  // namespace pmfp
