#include "pmfp/contraction.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pmfp/errors.hpp"
#include "pmfp/kernels.hpp"

namespace pmfp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Same tie behavior as the pc2_margin kernel.
inline double vmax(double a, double b) { return a > b ? a : b; }

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ArgumentError("alpha must lie in (0,1), got " + std::to_string(alpha));
    }
}

std::vector<double> apply_all(const PiecewiseMap& T, const std::vector<double>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(T.apply(x));
    return out;
}

struct PairScan {
    double margin = kInf;
    std::size_t xi = kernels::npos;
    std::size_t yi = kernels::npos;
    std::size_t checked = 0;
    std::size_t skipped = 0;
};

enum class ScanKind { C2, PC2, Strict };

// Worst-margin scan over xs x ys. alpha is ignored for Strict; for PC2 an
// alpha of 0 drops the alpha term exactly (0*p = 0 never exceeds the
// self-distance terms, which are >= 0).
PairScan scan_pairs(ScanKind kind, const PartialMetric& space, const PiecewiseMap& T,
                    const std::vector<double>& xs, const std::vector<double>& ys,
                    double alpha) {
    PairScan best;
    const std::size_t n = ys.size();
    best.checked = xs.size() * n;
    if (xs.empty() || n == 0) return best;

    const auto& ops = kernels::active();
    const std::vector<double> tys = apply_all(T, ys);
    std::vector<double> y_self(n);
    if (kind == ScanKind::PC2) {
        space.p_pairs(ys.data(), ys.data(), y_self.data(), n);
    }
    std::vector<double> pxy(n), lhs(n), out(n);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double tx = T.apply(x);
        space.p_row(x, ys.data(), pxy.data(), n);
        space.p_row(tx, tys.data(), lhs.data(), n);
        switch (kind) {
            case ScanKind::C2:
                ops.c2_margin(alpha, pxy.data(), lhs.data(), out.data(), n);
                break;
            case ScanKind::PC2:
                ops.pc2_margin(alpha, space.p(x, x), pxy.data(), y_self.data(),
                               lhs.data(), out.data(), n);
                break;
            case ScanKind::Strict:
                best.skipped +=
                    ops.strict_margin(pxy.data(), lhs.data(), kEqTol, out.data(), n);
                break;
        }
        const auto row = ops.min_index(out.data(), n);
        if (row.index != kernels::npos && row.value < best.margin) {
            best.margin = row.value;
            best.xi = i;
            best.yi = row.index;
        }
    }
    return best;
}

// Recomputes lhs/rhs at the winning pair with the same expressions the
// kernels used, so the reported numbers are bit-identical to the scan.
Certificate finish_pair_certificate(Condition condition, ScanKind kind,
                                    const PartialMetric& space, const PiecewiseMap& T,
                                    double alpha, const PairScan& scan, double x,
                                    double y) {
    Certificate cert;
    cert.condition = condition;
    cert.alpha_used = (kind == ScanKind::Strict) ? std::nullopt
                                                 : std::optional<double>(alpha);
    cert.margin = scan.margin;
    cert.pairs_checked = scan.checked;
    cert.pairs_skipped = scan.skipped;
    cert.holds = (kind == ScanKind::Strict) ? scan.margin > 0.0 : scan.margin >= 0.0;
    if (scan.xi != kernels::npos) {
        cert.witness = {x, y};
        cert.witness_lhs = space.p(T.apply(x), T.apply(y));
        switch (kind) {
            case ScanKind::C2:
                cert.witness_rhs = alpha * space.p(x, y);
                break;
            case ScanKind::PC2:
                cert.witness_rhs = vmax(vmax(alpha * space.p(x, y), space.p(x, x)),
                                        space.p(y, y));
                break;
            case ScanKind::Strict:
                cert.witness_rhs = space.p(x, y);
                break;
        }
    }
    return cert;
}

Certificate scan_sets(Condition condition, ScanKind kind, const PartialMetric& space,
                      const PiecewiseMap& T, const CyclicDecomposition& decomp,
                      double alpha, std::size_t density) {
    if (decomp.size() < 1) {
        throw ArgumentError("cyclic decomposition needs at least one set");
    }
    PairScan best;
    best.checked = 0;
    double wx = 0.0, wy = 0.0;
    for (std::size_t s = 0; s < decomp.size(); ++s) {
        const auto xs = sample(decomp.sets[s], density);
        const auto ys = sample(decomp.at_wrapped(s + 1), density);
        PairScan scan = scan_pairs(kind, space, T, xs, ys, alpha);
        best.checked += scan.checked;
        best.skipped += scan.skipped;
        if (scan.xi != kernels::npos && scan.margin < best.margin) {
            best.margin = scan.margin;
            best.xi = scan.xi;
            best.yi = scan.yi;
            wx = xs[scan.xi];
            wy = ys[scan.yi];
        }
    }
    Certificate cert =
        finish_pair_certificate(condition, kind, space, T, alpha, best, wx, wy);
    cert.density = density;
    return cert;
}

}  // namespace

const char* to_string(Condition c) {
    switch (c) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::PC2: return "PC2";
        case Condition::Orbital: return "ORBITAL";
        case Condition::Strict: return "STRICT";
        case Condition::RakoPC2: return "RAKO-PC2";
        case Condition::Pair: return "PAIR";
    }
    return "?";
}

Certificate verify_inclusions(const PiecewiseMap& T, const CyclicDecomposition& decomp,
                              std::size_t density) {
    if (decomp.size() < 1) {
        throw ArgumentError("cyclic decomposition needs at least one set");
    }
    Certificate cert;
    cert.condition = Condition::C1;
    cert.density = density;
    cert.holds = true;
    cert.margin = 1.0;
    for (std::size_t s = 0; s < decomp.size(); ++s) {
        const auto& next = decomp.at_wrapped(s + 1);
        for (double x : sample(decomp.sets[s], density)) {
            ++cert.pairs_checked;
            const double tx = T.apply(x);
            if (!next.contains(tx)) {
                cert.holds = false;
                cert.margin = -1.0;
                cert.witness = {x, tx};
                cert.witness_lhs = tx;
                cert.witness_rhs = 0.0;
                return cert;
            }
        }
    }
    return cert;
}

AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const std::vector<double>& xs,
                             const std::vector<double>& ys) {
    AlphaEstimate est;
    est.alpha_hat = 0.0;
    est.pairs_checked = xs.size() * ys.size();
    if (xs.empty() || ys.empty()) return est;

    const auto& ops = kernels::active();
    const std::size_t n = ys.size();
    const std::vector<double> tys = apply_all(T, ys);
    std::vector<double> num(n), den(n);
    double sup = -kInf;
    std::size_t wxi = kernels::npos, wyi = kernels::npos;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double tx = T.apply(xs[i]);
        space.p_row(tx, tys.data(), num.data(), n);
        space.p_row(xs[i], ys.data(), den.data(), n);
        const auto row = ops.ratio_sup_index(num.data(), den.data(), n, kEqTol);
        if (row.index != kernels::npos && row.value > sup) {
            sup = row.value;
            wxi = i;
            wyi = row.index;
        }
    }
    if (wxi == kernels::npos) return est;  // vacuous: every pair degenerate
    est.alpha_hat = sup;
    est.has_witness = true;
    est.x = xs[wxi];
    est.y = ys[wyi];
    est.num = space.p(T.apply(est.x), T.apply(est.y));
    est.den = space.p(est.x, est.y);
    return est;
}

AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const SetDescriptor& A, const SetDescriptor& B,
                             std::size_t density) {
    return estimate_alpha(space, T, sample(A, density), sample(B, density));
}

AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const CyclicDecomposition& decomp, std::size_t density) {
    if (decomp.size() < 1) {
        throw ArgumentError("cyclic decomposition needs at least one set");
    }
    AlphaEstimate best;
    best.alpha_hat = 0.0;
    for (std::size_t s = 0; s < decomp.size(); ++s) {
        AlphaEstimate est =
            estimate_alpha(space, T, sample(decomp.sets[s], density),
                           sample(decomp.at_wrapped(s + 1), density));
        best.pairs_checked += est.pairs_checked;
        if (est.has_witness && (!best.has_witness || est.alpha_hat > best.alpha_hat)) {
            const std::size_t checked = best.pairs_checked;
            best = est;
            best.pairs_checked = checked;
        }
    }
    return best;
}

Certificate verify_c2(const PartialMetric& space, const PiecewiseMap& T,
                      const SetDescriptor& A, const SetDescriptor& B, double alpha,
                      std::size_t density) {
    require_alpha(alpha);
    return scan_sets(Condition::C2, ScanKind::C2, space, T,
                     CyclicDecomposition{{A, B}}, alpha, density);
}

Certificate verify_c2(const PartialMetric& space, const PiecewiseMap& T,
                      const CyclicDecomposition& decomp, double alpha,
                      std::size_t density) {
    require_alpha(alpha);
    return scan_sets(Condition::C2, ScanKind::C2, space, T, decomp, alpha, density);
}

Certificate verify_partial_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                                  const SetDescriptor& A, const SetDescriptor& B,
                                  double alpha, std::size_t density) {
    require_alpha(alpha);
    return scan_sets(Condition::PC2, ScanKind::PC2, space, T,
                     CyclicDecomposition{{A, B}}, alpha, density);
}

Certificate verify_partial_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                                  const CyclicDecomposition& decomp, double alpha,
                                  std::size_t density) {
    require_alpha(alpha);
    return scan_sets(Condition::PC2, ScanKind::PC2, space, T, decomp, alpha, density);
}

Certificate verify_partial_cyclic_alpha_free(const PartialMetric& space,
                                             const PiecewiseMap& T,
                                             const CyclicDecomposition& decomp,
                                             std::size_t density) {
    Certificate cert =
        scan_sets(Condition::PC2, ScanKind::PC2, space, T, decomp, 0.0, density);
    cert.alpha_used = std::nullopt;
    return cert;
}

Certificate verify_rako(const PartialMetric& space, const PiecewiseMap& T,
                        const std::vector<double>& xs, double alpha) {
    require_alpha(alpha);
    PairScan scan = scan_pairs(ScanKind::PC2, space, T, xs, xs, alpha);
    double wx = 0.0, wy = 0.0;
    if (scan.xi != kernels::npos) {
        wx = xs[scan.xi];
        wy = xs[scan.yi];
    }
    Certificate cert = finish_pair_certificate(Condition::RakoPC2, ScanKind::PC2,
                                               space, T, alpha, scan, wx, wy);
    cert.density = xs.size();
    return cert;
}

Certificate verify_orbital(const PartialMetric& space, const PiecewiseMap& T,
                           const std::vector<double>& xs, double alpha) {
    require_alpha(alpha);
    Certificate cert;
    cert.condition = Condition::Orbital;
    cert.alpha_used = alpha;
    cert.density = xs.size();
    cert.pairs_checked = xs.size();
    cert.margin = kInf;
    cert.holds = true;
    if (xs.empty()) return cert;

    const std::size_t n = xs.size();
    const std::vector<double> txs = apply_all(T, xs);
    const std::vector<double> ttxs = apply_all(T, txs);
    std::vector<double> den(n), lhs(n), out(n);
    space.p_pairs(xs.data(), txs.data(), den.data(), n);
    space.p_pairs(txs.data(), ttxs.data(), lhs.data(), n);
    const auto& ops = kernels::active();
    ops.c2_margin(alpha, den.data(), lhs.data(), out.data(), n);
    const auto worst = ops.min_index(out.data(), n);
    if (worst.index != kernels::npos) {
        cert.margin = worst.value;
        cert.holds = worst.value >= 0.0;
        const double x = xs[worst.index];
        cert.witness = {x};
        cert.witness_lhs = space.p(T.apply(x), T.iterate(x, 2));
        cert.witness_rhs = alpha * space.p(x, T.apply(x));
    }
    return cert;
}

Certificate verify_strict(const PartialMetric& space, const PiecewiseMap& T,
                          const CyclicDecomposition& decomp, std::size_t density) {
    return scan_sets(Condition::Strict, ScanKind::Strict, space, T, decomp, 0.0,
                     density);
}

PiecewiseMap glue_pair(const PiecewiseMap& f, const PiecewiseMap& g,
                       const SetDescriptor& A, const SetDescriptor& B,
                       std::size_t density) {
    for (double x : sample(set_intersect(A, B), density)) {
        const double fx = f.apply(x);
        const double gx = g.apply(x);
        if (std::fabs(fx - gx) > kEqTol) {
            throw GluingError("glued halves disagree at " + std::to_string(x) +
                                  ": f=" + std::to_string(fx) +
                                  ", g=" + std::to_string(gx),
                              x, fx, gx);
        }
    }
    PiecewiseMap glued("glued(" + f.name() + ", " + g.name() + ")");
    for (const auto& rule : f.rules()) {
        SetDescriptor guard = set_intersect(rule.guard, A);
        if (!guard.is_empty()) glued.add_rule(std::move(guard), rule.a, rule.b);
    }
    const SetDescriptor b_only = set_subtract(B, A);
    for (const auto& rule : g.rules()) {
        SetDescriptor guard = set_intersect(rule.guard, b_only);
        if (!guard.is_empty()) glued.add_rule(std::move(guard), rule.a, rule.b);
    }
    return glued;
}

Certificate certify_pair(const PartialMetric& space, const PiecewiseMap& glued,
                         const SetDescriptor& A, const SetDescriptor& B, double alpha,
                         std::size_t density) {
    require_alpha(alpha);
    Certificate cert = scan_sets(Condition::Pair, ScanKind::C2, space, glued,
                                 CyclicDecomposition{{A, B}}, alpha, density);
    return cert;
}

XpResult compute_Xp(const PartialMetric& space, const std::vector<double>& xs) {
    if (xs.empty()) throw ArgumentError("X_p computation needs a nonempty sample");
    const auto& ops = kernels::active();
    const std::size_t n = xs.size();
    std::vector<double> row(n);
    double rho = kInf;
    for (std::size_t i = 0; i < n; ++i) {
        space.p_row(xs[i], xs.data(), row.data(), n);
        const auto m = ops.min_index(row.data(), n);
        if (m.index != kernels::npos && m.value < rho) rho = m.value;
    }
    XpResult r;
    r.rho_p = rho;
    for (double x : xs) {
        if (std::fabs(space.p(x, x) - rho) <= kEqTol) r.xp.push_back(x);
    }
    return r;
}

}  // namespace pmfp
