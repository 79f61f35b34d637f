#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pmfp/partial_metric.hpp"
#include "pmfp/piecewise_map.hpp"
#include "pmfp/set_descriptor.hpp"

namespace pmfp {

enum class Condition { C1, C2, PC2, Orbital, Strict, RakoPC2, Pair };

const char* to_string(Condition c);

// A sample-relative verdict for one contraction hypothesis. holds=true
// means "no violation found at this density", never a proof over the
// continuum. margin is rhs - lhs at the worst scanned case (+inf when the
// scan was vacuous); holds iff margin >= 0, strictly > 0 for Strict.
// Inclusion certificates (C1) carry a sign-only margin of +-1 since
// membership has no natural magnitude.
struct Certificate {
    Condition condition = Condition::C2;
    bool holds = false;
    std::optional<double> alpha_used;
    std::vector<double> witness;  // worst point tuple; empty if vacuous
    double witness_lhs = 0.0;
    double witness_rhs = 0.0;
    double margin = 0.0;
    std::size_t density = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;
};

// Best observed contraction ratio sup p(Tx,Ty)/p(x,y) over sampled cross
// pairs with p(x,y) > tol_eq. Pairs with p(x,y) <= tol_eq but
// p(Tx,Ty) > tol_eq force alpha_hat to +infinity (no finite alpha can
// work); if no pair qualifies at all, alpha_hat is 0 and has_witness is
// false (any alpha works vacuously).
struct AlphaEstimate {
    double alpha_hat = 0.0;
    bool has_witness = false;
    double x = 0.0;
    double y = 0.0;
    double num = 0.0;  // p(Tx,Ty) at the witness
    double den = 0.0;  // p(x,y) at the witness
    std::size_t pairs_checked = 0;
};

// C1: T(A_i) subset of A_{i+1} on sampled points; witness = first failure
// (x, Tx).
Certificate verify_inclusions(const PiecewiseMap& T, const CyclicDecomposition& decomp,
                              std::size_t density);

AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const std::vector<double>& xs,
                             const std::vector<double>& ys);
AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const SetDescriptor& A, const SetDescriptor& B,
                             std::size_t density);
// Max over consecutive set pairs (A_i, A_{i+1}).
AlphaEstimate estimate_alpha(const PartialMetric& space, const PiecewiseMap& T,
                             const CyclicDecomposition& decomp, std::size_t density);

// C2: p(Tx,Ty) <= alpha p(x,y) on sampled cross pairs; requires
// 0 < alpha < 1.
Certificate verify_c2(const PartialMetric& space, const PiecewiseMap& T,
                      const SetDescriptor& A, const SetDescriptor& B, double alpha,
                      std::size_t density);
Certificate verify_c2(const PartialMetric& space, const PiecewiseMap& T,
                      const CyclicDecomposition& decomp, double alpha,
                      std::size_t density);

// PC2: p(Tx,Ty) <= max{alpha p(x,y), p(x,x), p(y,y)}; requires
// 0 < alpha < 1.
Certificate verify_partial_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                                  const SetDescriptor& A, const SetDescriptor& B,
                                  double alpha, std::size_t density);
Certificate verify_partial_cyclic(const PartialMetric& space, const PiecewiseMap& T,
                                  const CyclicDecomposition& decomp, double alpha,
                                  std::size_t density);

// PC2 with the alpha term dropped: p(Tx,Ty) <= max{p(x,x), p(y,y)}.
// Stronger than PC2 for every alpha, so a pass here certifies PC2
// independently of the constant.
Certificate verify_partial_cyclic_alpha_free(const PartialMetric& space,
                                             const PiecewiseMap& T,
                                             const CyclicDecomposition& decomp,
                                             std::size_t density);

// The one-set specialization A = B = X of PC2.
Certificate verify_rako(const PartialMetric& space, const PiecewiseMap& T,
                        const std::vector<double>& xs, double alpha);

// Orbital condition: p(Tx, T^2 x) <= alpha p(x, Tx) for each sampled x.
Certificate verify_orbital(const PartialMetric& space, const PiecewiseMap& T,
                           const std::vector<double>& xs, double alpha);

// Strict (Edelstein) condition: p(Tx,Ty) < p(x,y) on sampled cross pairs
// with p(x,y) > tol_eq. Pairs at p(x,y) <= tol_eq cannot satisfy a strict
// inequality and cannot refute it either; they are skipped and counted.
Certificate verify_strict(const PartialMetric& space, const PiecewiseMap& T,
                          const CyclicDecomposition& decomp, std::size_t density);

// Glues f on A with g on B into one self-map of A u B after verifying
// |f - g| <= tol_eq on the sampled intersection; throws GluingError with
// the first disagreeing point otherwise.
PiecewiseMap glue_pair(const PiecewiseMap& f, const PiecewiseMap& g,
                       const SetDescriptor& A, const SetDescriptor& B,
                       std::size_t density);

// C2 scan of an already-glued pair map, labeled Pair.
Certificate certify_pair(const PartialMetric& space, const PiecewiseMap& glued,
                         const SetDescriptor& A, const SetDescriptor& B, double alpha,
                         std::size_t density);

// rho_p = min p over sampled pairs; Xp = sampled points whose self-distance
// attains it within tol_eq.
struct XpResult {
    double rho_p = 0.0;
    std::vector<double> xp;
};
XpResult compute_Xp(const PartialMetric& space, const std::vector<double>& xs);

}  // namespace pmfp
