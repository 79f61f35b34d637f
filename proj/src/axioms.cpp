#include "pmfp/axioms.hpp"

#include <cmath>
#include <string>

#include "pmfp/errors.hpp"
#include "pmfp/kernels.hpp"

namespace pmfp {

const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::P1: return "P1";
        case Axiom::P2: return "P2";
        case Axiom::P3: return "P3";
        case Axiom::P4: return "P4";
    }
    return "?";
}

const AxiomViolation* AxiomReport::worst() const {
    const AxiomViolation* w = nullptr;
    for (const auto& v : violations) {
        if (!w || v.excess() > w->excess()) w = &v;
    }
    return w;
}

AxiomReport check_axioms(const PartialMetric& space, const std::vector<double>& sample,
                         double tol, double point_tol) {
    if (sample.empty()) throw ArgumentError("axiom check needs a nonempty sample");
    for (double x : sample) {
        if (!space.domain().contains(x)) {
            throw ArgumentError("sample point " + std::to_string(x) +
                                " is outside the domain of " + space.name());
        }
    }

    const std::size_t n = sample.size();
    AxiomReport report;
    report.sample_size = n;
    report.tol = tol;

    // Full distance matrix, one kernel row per sample point.
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        space.p_row(sample[i], sample.data(), m.data() + i * n, n);
    }
    const auto at = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };

    // P1: symmetry on unordered pairs.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double pij = at(i, j);
            const double pji = at(j, i);
            if (std::fabs(pij - pji) > tol) {
                report.violations.push_back(
                    {Axiom::P1, {sample[i], sample[j]}, pij, pji});
            }
        }
    }

    // P2 (contrapositive): equal self- and cross-distances force equal points.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double pii = at(i, i);
            const double pij = at(i, j);
            const double pjj = at(j, j);
            if (std::fabs(pii - pij) <= tol && std::fabs(pjj - pij) <= tol &&
                std::fabs(sample[i] - sample[j]) > point_tol) {
                report.violations.push_back({Axiom::P2,
                                             {sample[i], sample[j]},
                                             std::fabs(sample[i] - sample[j]),
                                             point_tol});
            }
        }
    }

    // P3: small self-distances, ordered pairs.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double pii = at(i, i);
            const double pij = at(i, j);
            if (pii > pij + tol) {
                report.violations.push_back(
                    {Axiom::P3, {sample[i], sample[j]}, pii, pij});
            }
        }
    }

    // P4: triangularity. For fixed (x,y) the worst z maximizes
    // p(x,z) - p(y,z); one violation per pair, reported at that z.
    const auto& ops = kernels::active();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto worst =
                ops.max_diff_index(m.data() + i * n, m.data() + j * n, n);
            if (worst.index == kernels::npos) continue;
            const std::size_t k = worst.index;
            const double lhs = at(i, k) + at(j, j);
            const double rhs = at(i, j) + at(j, k);
            if (lhs > rhs + tol) {
                report.violations.push_back(
                    {Axiom::P4, {sample[i], sample[j], sample[k]}, lhs, rhs});
            }
        }
    }

    report.passed = report.violations.empty();
    return report;
}

}  // namespace pmfp
