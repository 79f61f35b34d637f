#include "pmfp/sequences.hpp"

#include <cmath>
#include <limits>

#include "pmfp/errors.hpp"

namespace pmfp {

const char* to_string(SequenceKind k) {
    switch (k) {
        case SequenceKind::Converges: return "converges";
        case SequenceKind::Cauchy: return "cauchy";
        case SequenceKind::ZeroCauchy: return "zero-cauchy";
    }
    return "?";
}

namespace {

std::size_t window_start(std::size_t len, double fraction, std::size_t min_window) {
    auto w = static_cast<std::size_t>(std::llround(static_cast<double>(len) * fraction));
    if (w < min_window) w = min_window;
    if (w > len) w = len;
    return len - w;
}

}  // namespace

SequenceVerdict check_convergence(const PartialMetric& space,
                                  const std::vector<double>& prefix, double limit,
                                  double tol, double window_fraction) {
    if (prefix.size() < 2) {
        throw ArgumentError("convergence check needs a prefix of length >= 2");
    }
    const std::size_t start = window_start(prefix.size(), window_fraction, 1);
    const double p_ll = space.p(limit, limit);
    double sum = 0.0;
    for (std::size_t i = start; i < prefix.size(); ++i) {
        sum += std::fabs(p_ll - space.p(limit, prefix[i]));
    }
    const double residual = sum / static_cast<double>(prefix.size() - start);
    return {SequenceKind::Converges, residual <= tol, residual, prefix.size()};
}

CauchyDualReport check_cauchy_dual(const PartialMetric& space,
                                   const std::vector<double>& prefix, double tol,
                                   double window_fraction) {
    if (prefix.size() < 4) {
        throw ArgumentError("Cauchy check needs a prefix of length >= 4");
    }
    const std::size_t start = window_start(prefix.size(), window_fraction, 2);
    const std::size_t w = prefix.size() - start;

    std::vector<double> m(w * w);
    for (std::size_t i = 0; i < w; ++i) {
        space.p_row(prefix[start + i], prefix.data() + start, m.data() + i * w, w);
    }
    const auto at = [&](std::size_t i, std::size_t j) { return m[i * w + j]; };

    double p_min = std::numeric_limits<double>::infinity();
    double p_max = -std::numeric_limits<double>::infinity();
    double ps_max = 0.0;
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = i; j < w; ++j) {
            const double pij = at(i, j);
            if (pij < p_min) p_min = pij;
            if (pij > p_max) p_max = pij;
            const double ps = (2.0 * pij - at(i, i)) - at(j, j);
            if (ps > ps_max) ps_max = ps;
        }
    }

    CauchyDualReport r;
    const double spread = (p_max - p_min) / 2.0;
    r.under_p = {SequenceKind::Cauchy, spread <= tol, spread, prefix.size()};
    r.under_ps = {SequenceKind::Cauchy, ps_max <= tol, ps_max, prefix.size()};
    r.zero_cauchy = {SequenceKind::ZeroCauchy, p_max <= tol, p_max, prefix.size()};
    return r;
}

}  // namespace pmfp
