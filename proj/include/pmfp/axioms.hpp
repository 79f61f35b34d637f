#pragma once

#include <cstddef>
#include <vector>

#include "pmfp/partial_metric.hpp"

namespace pmfp {

enum class Axiom { P1, P2, P3, P4 };

const char* to_string(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::vector<double> witness;  // two points, three for P4
    double lhs;
    double rhs;

    double excess() const { return lhs - rhs; }
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;
    std::size_t sample_size = 0;
    double tol = 0.0;

    // Violation with the largest lhs - rhs excess; first found on ties.
    const AxiomViolation* worst() const;
};

// Exhaustive axiom scan over the sample:
//   P1  p(x,y) = p(y,x) on all unordered pairs
//   P2  contrapositive: p(x,x) = p(x,y) = p(y,y) within tol forces
//       |x - y| <= point_tol
//   P3  p(x,x) <= p(x,y) on all ordered pairs
//   P4  p(x,z) + p(y,y) <= p(x,y) + p(y,z) on all ordered triples; one
//       violation per (x,y) pair is reported, at the worst z
// All comparisons carry a +tol slack. Throws ArgumentError on an empty
// sample or a point outside the space domain.
AxiomReport check_axioms(const PartialMetric& space, const std::vector<double>& sample,
                         double tol, double point_tol = kEqTol);

}  // namespace pmfp
