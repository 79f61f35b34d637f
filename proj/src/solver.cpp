#include "pmfp/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pmfp/errors.hpp"
#include "pmfp/kernels.hpp"

namespace pmfp {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::Cycle: return "cycle";
        case SolveStatus::Exhausted: return "exhausted";
    }
    return "?";
}

namespace {

void require_config(const SolverConfig& c) {
    if (!(c.tol > 0.0)) throw ArgumentError("solver tol must be positive");
    if (!(c.tol_eq > 0.0)) throw ArgumentError("solver tol_eq must be positive");
    if (c.max_iter < 1) throw ArgumentError("solver max_iter must be >= 1");
    if (c.cycle_window < 2) throw ArgumentError("solver cycle_window must be >= 2");
    if (c.stall_count < 1) throw ArgumentError("solver stall_count must be >= 1");
}

bool stalled(const std::vector<double>& ps_step, std::size_t count, double tol) {
    if (ps_step.size() < count) return false;
    for (std::size_t i = ps_step.size() - count; i < ps_step.size(); ++i) {
        if (!(ps_step[i] < tol)) return false;
    }
    return true;
}

// Smallest period q in [2, window] whose last two repetitions agree within
// tol_eq, or 0 when there is none.
std::size_t detect_cycle(const std::vector<double>& xs, std::size_t window,
                         double tol_eq) {
    const std::size_t m = xs.size() - 1;
    for (std::size_t q = 2; q <= window; ++q) {
        if (m + 1 < 2 * q) break;
        bool match = true;
        for (std::size_t j = 0; j < q; ++j) {
            if (std::fabs(xs[m - j] - xs[m - j - q]) > tol_eq) {
                match = false;
                break;
            }
        }
        if (match) return q;
    }
    return 0;
}

}  // namespace

SolveResult picard(const PartialMetric& space, const PiecewiseMap& T, double x0,
                   const SolverConfig& config) {
    require_config(config);
    if (!space.domain().contains(x0, config.tol_eq)) {
        throw DomainEscapeError("start point " + std::to_string(x0) +
                                    " is outside the domain of " + space.name(),
                                0, x0);
    }

    SolveResult result;
    OrbitTrace& trace = result.trace;
    trace.iterates.push_back(x0);
    trace.self_dist.push_back(space.p(x0, x0));

    double x = x0;
    for (std::size_t n = 1; n <= config.max_iter; ++n) {
        const double tx = T.apply(x, config.tol_eq);
        if (!space.domain().contains(tx, config.tol_eq)) {
            throw DomainEscapeError("iterate " + std::to_string(n) + " = " +
                                        std::to_string(tx) +
                                        " left the domain of " + space.name(),
                                    n, tx);
        }
        trace.iterates.push_back(tx);
        trace.p_step.push_back(space.p(x, tx));
        trace.ps_step.push_back(space.induced(x, tx));
        trace.self_dist.push_back(space.p(tx, tx));
        x = tx;

        if (stalled(trace.ps_step, config.stall_count, config.tol)) {
            result.status = SolveStatus::Converged;
            result.fixed_point = x;
            result.p_uu = space.p(x, x);
            const double tu = T.apply(x, config.tol_eq);
            result.orbital_residual = std::fabs(space.p(tu, x) - space.p(tu, tu));
            return result;
        }
        if (const std::size_t q =
                detect_cycle(trace.iterates, config.cycle_window, config.tol_eq)) {
            result.status = SolveStatus::Cycle;
            result.period = q;
            result.cycle_orbit.assign(trace.iterates.end() - static_cast<long>(q),
                                      trace.iterates.end());
            return result;
        }
    }
    result.status = SolveStatus::Exhausted;
    return result;
}

SolveResult solve_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                         const CyclicDecomposition& decomp, double x0,
                         const SolverConfig& config) {
    require_config(config);
    if (decomp.size() < 1) {
        throw ArgumentError("cyclic decomposition needs at least one set");
    }
    bool in_some = false;
    for (const auto& set : decomp.sets) {
        if (set.contains(x0, config.tol_eq)) {
            in_some = true;
            break;
        }
    }
    if (!in_some) {
        throw ArgumentError("start point " + std::to_string(x0) +
                            " lies in none of the decomposition sets");
    }

    SolveResult result = picard(space, T, x0, config);
    if (result.status == SolveStatus::Converged) {
        result.has_membership = true;
        result.in_intersection = true;
        for (const auto& set : decomp.sets) {
            const bool member = set.contains(result.fixed_point, config.tol_eq);
            result.membership.push_back(member);
            result.in_intersection = result.in_intersection && member;
        }
    }
    return result;
}

RateFit rate_fit(const OrbitTrace& trace, double tol_eq) {
    // Longest consecutive run of steps strictly above tol_eq.
    std::size_t best_begin = 0, best_len = 0, begin = 0, len = 0;
    for (std::size_t i = 0; i < trace.ps_step.size(); ++i) {
        if (trace.ps_step[i] > tol_eq) {
            if (len == 0) begin = i;
            ++len;
            if (len > best_len) {
                best_len = len;
                best_begin = begin;
            }
        } else {
            len = 0;
        }
    }
    if (best_len < 4) {
        throw InsufficientDataError(
            "rate fit needs at least 4 consecutive steps above tol_eq, found " +
            std::to_string(best_len));
    }

    // Least squares of log(ps_step) against the step index.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    const auto m = static_cast<double>(best_len);
    for (std::size_t i = 0; i < best_len; ++i) {
        const double xi = static_cast<double>(i);
        const double yi = std::log(trace.ps_step[best_begin + i]);
        sx += xi;
        sy += yi;
        sxx += xi * xi;
        sxy += xi * yi;
        syy += yi * yi;
    }
    const double sxx_c = sxx - sx * sx / m;
    const double sxy_c = sxy - sx * sy / m;
    const double syy_c = syy - sy * sy / m;
    const double slope = sxy_c / sxx_c;

    RateFit fit;
    fit.rate = std::exp(slope);
    fit.steps_used = best_len;
    fit.r_squared = syy_c > 0.0 ? (sxy_c * sxy_c) / (sxx_c * syy_c) : 1.0;
    return fit;
}

SetDistance set_distance(const PartialMetric& space, const SetDescriptor& A,
                         const SetDescriptor& B, std::size_t density) {
    const auto xs = sample(A, density);
    const auto ys = sample(B, density);
    if (xs.empty() || ys.empty()) {
        throw ArgumentError("set distance needs nonempty sampled sets");
    }
    const auto& ops = kernels::active();
    std::vector<double> row(ys.size());
    SetDistance best;
    best.delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        space.p_row(xs[i], ys.data(), row.data(), ys.size());
        const auto m = ops.min_index(row.data(), ys.size());
        if (m.index != kernels::npos && m.value < best.delta) {
            best.delta = m.value;
            best.x = xs[i];
            best.y = ys[m.index];
        }
    }
    return best;
}

}  // namespace pmfp
