#pragma once

#include <string>
#include <vector>

#include "pmfp/set_descriptor.hpp"

namespace pmfp {

// One guarded rule of a piecewise map: if x lands in `guard`, the image is
// a*x + b.  Rules are tried in order; the first matching guard wins.
struct MapRule {
    SetDescriptor guard;
    double a = 0.0;
    double b = 0.0;

    double image(double x) const { return a * x + b + 0.0; }  // flushes -0.0
};

// A self-map assembled from guarded affine rules.  Applying the map at a
// point no rule covers raises MapTotalityError.
class PiecewiseMap {
public:
    PiecewiseMap() = default;
    explicit PiecewiseMap(std::string name) : name_(std::move(name)) {}

    PiecewiseMap& add_rule(SetDescriptor guard, double a, double b);
    PiecewiseMap& add_constant(SetDescriptor guard, double value);

    double apply(double x, double tol = kEqTol) const;
    // Applies the map n times.
    double iterate(double x, std::size_t n, double tol = kEqTol) const;

    bool covers(double x, double tol = kEqTol) const;
    const std::string& name() const { return name_; }
    const std::vector<MapRule>& rules() const { return rules_; }
    bool empty() const { return rules_.empty(); }

private:
    std::string name_;
    std::vector<MapRule> rules_;
};

// Parses an affine expression in one variable, e.g. "x/2", "(x-2)/2",
// "0.5*x + 1", "3/2", returning the coefficients of a*x + b.
// Grammar: sums/differences of products/quotients of numbers and 'x',
// with parentheses; division only by constants, products with at most
// one non-constant factor.
struct AffineCoeffs {
    double a = 0.0;
    double b = 0.0;
};
AffineCoeffs parse_affine(const std::string& text);

}  // namespace pmfp
