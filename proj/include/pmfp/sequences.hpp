#pragma once

#include <cstddef>
#include <vector>

#include "pmfp/partial_metric.hpp"

namespace pmfp {

enum class SequenceKind { Converges, Cauchy, ZeroCauchy };

const char* to_string(SequenceKind k);

// Finite-prefix verdicts are "consistent with" statements, never proofs:
// holds is true iff the measured residual on the checked window is <= the
// tolerance passed in.
struct SequenceVerdict {
    SequenceKind kind;
    bool holds;
    double residual;
    std::size_t prefix_length;
};

// Residual = mean of |p(limit,limit) - p(limit, x_n)| over the tail window
// (default: the last quarter of the prefix, at least one term). Requires a
// prefix of length >= 2.
SequenceVerdict check_convergence(const PartialMetric& space,
                                  const std::vector<double>& prefix, double limit,
                                  double tol, double window_fraction = 0.25);

struct CauchyDualReport {
    // Cauchy under p: residual is half the spread of p(x_m,x_n) over tail
    // window pairs, i.e. the distance to the best-fit joint limit.
    SequenceVerdict under_p;
    // Cauchy under the induced metric: residual is max p^s(x_m,x_n).
    SequenceVerdict under_ps;
    // 0-Cauchy: the joint limit forced to zero, residual is max p(x_m,x_n).
    SequenceVerdict zero_cauchy;
};

// Requires a prefix of length >= 4; the tail window holds at least 2 terms.
CauchyDualReport check_cauchy_dual(const PartialMetric& space,
                                   const std::vector<double>& prefix, double tol,
                                   double window_fraction = 0.25);

}  // namespace pmfp
