#include "pmfp/partial_metric.hpp"

#include <string>

#include "pmfp/errors.hpp"

namespace pmfp {

namespace {

std::optional<kernels::Rule> kernel_rule_for(MetricRule::Kind kind) {
    switch (kind) {
        case MetricRule::Kind::Max: return kernels::Rule::Max;
        case MetricRule::Kind::AbsDiff: return kernels::Rule::AbsDiff;
        case MetricRule::Kind::HybridUnit: return kernels::Rule::HybridUnit;
        case MetricRule::Kind::Custom: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

PartialMetric::PartialMetric(std::string name, SetDescriptor domain, MetricRule rule)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      rule_(std::move(rule)),
      kernel_rule_(kernel_rule_for(rule_.kind)) {
    if (rule_.kind == MetricRule::Kind::Custom && rule_.pieces.empty() &&
        rule_.fallback.empty()) {
        throw ArgumentError("custom metric rule has no pieces and no fallback");
    }
}

PartialMetric PartialMetric::max_rule(std::string name, SetDescriptor domain) {
    return PartialMetric(std::move(name), std::move(domain),
                         MetricRule{MetricRule::Kind::Max, {}, {}});
}

PartialMetric PartialMetric::abs_rule(std::string name, SetDescriptor domain) {
    return PartialMetric(std::move(name), std::move(domain),
                         MetricRule{MetricRule::Kind::AbsDiff, {}, {}});
}

PartialMetric PartialMetric::hybrid_unit_rule(std::string name, SetDescriptor domain) {
    return PartialMetric(std::move(name), std::move(domain),
                         MetricRule{MetricRule::Kind::HybridUnit, {}, {}});
}

void PartialMetric::require_member(double v, const char* which) const {
    if (!domain_.contains(v)) {
        throw DomainError(std::string(which) + " coordinate " + std::to_string(v) +
                              " is outside the domain of " + name_,
                          v);
    }
}

double PartialMetric::eval_raw(double x, double y) const {
    if (kernel_rule_) return kernels::eval_one(*kernel_rule_, x, y);
    for (const auto& piece : rule_.pieces) {
        if (piece.guard.contains(x) && piece.guard.contains(y)) {
            return piece.expr.eval(x, y);
        }
    }
    if (rule_.fallback.empty()) {
        throw Error("custom metric rule has no piece covering (" +
                    std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    return rule_.fallback.eval(x, y);
}

double PartialMetric::p(double x, double y) const {
    require_member(x, "first");
    require_member(y, "second");
    const double v = eval_raw(x, y);
    if (v < 0.0) {
        throw Error("metric rule of " + name_ + " evaluated negative at (" +
                    std::to_string(x) + ", " + std::to_string(y) +
                    "): " + std::to_string(v));
    }
    return v;
}

double PartialMetric::induced(double x, double y) const {
    return (2.0 * p(x, y) - p(x, x)) - p(y, y);
}

bool PartialMetric::ball_contains(double center, double eps, double y) const {
    if (eps <= 0.0) throw ArgumentError("ball radius must be positive");
    return p(center, y) < p(center, center) + eps;
}

void PartialMetric::p_row(double x, const double* ys, double* out,
                          std::size_t n) const {
    if (kernel_rule_) {
        kernels::active().eval_row(*kernel_rule_, x, ys, out, n);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = eval_raw(x, ys[i]);
}

void PartialMetric::p_pairs(const double* xs, const double* ys, double* out,
                            std::size_t n) const {
    if (kernel_rule_) {
        kernels::active().eval_pairs(*kernel_rule_, xs, ys, out, n);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = eval_raw(xs[i], ys[i]);
}

}  // namespace pmfp
