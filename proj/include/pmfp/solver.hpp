#pragma once

#include <cstddef>
#include <vector>

#include "pmfp/partial_metric.hpp"
#include "pmfp/piecewise_map.hpp"
#include "pmfp/set_descriptor.hpp"

namespace pmfp {

struct SolverConfig {
    double tol = 1e-9;              // step tolerance for convergence
    std::size_t max_iter = 10000;
    std::size_t cycle_window = 16;  // largest period searched
    double tol_eq = kEqTol;         // point equality tolerance
    std::size_t stall_count = 3;    // consecutive small steps to converge
};

// The Picard orbit with per-step measurements. p_step and ps_step have one
// entry per step (iterates length - 1); self_dist has one entry per
// iterate.
struct OrbitTrace {
    std::vector<double> iterates;
    std::vector<double> p_step;    // p(x_n, x_{n+1})
    std::vector<double> ps_step;   // p^s(x_n, x_{n+1})
    std::vector<double> self_dist; // p(x_n, x_n)
};

enum class SolveStatus { Converged, Cycle, Exhausted };

const char* to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Exhausted;
    OrbitTrace trace;

    // Converged only.
    double fixed_point = 0.0;
    double p_uu = 0.0;               // p(u,u), evaluated directly
    double orbital_residual = 0.0;   // |p(Tu,u) - p(Tu,Tu)|

    // Cycle only.
    std::size_t period = 0;
    std::vector<double> cycle_orbit;  // the last detected period, in order

    // Filled by solve_cyclic on Converged.
    bool has_membership = false;
    std::vector<bool> membership;     // u in A_i, with tol_eq slack
    bool in_intersection = false;     // all of the above
};

// Iterates T from x0 until one of:
//   Converged - stall_count consecutive p^s steps below tol
//   Cycle     - some period q in [2, cycle_window] repeats for two full
//               periods within tol_eq
//   Exhausted - max_iter steps without either
// Stall is checked before cycle so slow convergence is never misread as a
// long cycle. Throws DomainEscapeError when an iterate leaves the domain.
SolveResult picard(const PartialMetric& space, const PiecewiseMap& T, double x0,
                   const SolverConfig& config = {});

// picard plus per-set membership of the limit. x0 must lie in some A_i.
SolveResult solve_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                         const CyclicDecomposition& decomp, double x0,
                         const SolverConfig& config = {});

// Least-squares fit of log(ps_step) against the step index over the
// longest consecutive run of steps above tol_eq; rate = exp(slope).
// Throws InsufficientDataError when fewer than 4 steps qualify.
struct RateFit {
    double rate = 0.0;
    double r_squared = 0.0;
    std::size_t steps_used = 0;
};
RateFit rate_fit(const OrbitTrace& trace, double tol_eq = kEqTol);

// delta = min p(x,y) over sampled cross pairs, with the attaining pair.
struct SetDistance {
    double delta = 0.0;
    double x = 0.0;
    double y = 0.0;
};
SetDistance set_distance(const PartialMetric& space, const SetDescriptor& A,
                         const SetDescriptor& B, std::size_t density);

}  // namespace pmfp
