#pragma once

// Data-parallel inner loops for the pair/triple scans over sample grids.
//
// Every kernel exists twice: a scalar reference implementation and an AVX2
// variant selected at runtime. The two backends are equivalence-tested and
// must produce bit-identical results, so all kernels stick to exact IEEE
// operations (compare, blend, min/max, add/sub/mul/div) and break index
// ties toward the lowest index. Kernel translation units are compiled with
// -ffp-contract=off so the scalar path cannot fuse into FMA.

#include <cmath>
#include <cstddef>
#include <limits>

namespace pmfp::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Vectorizable built-in metric rules. Piecewise custom rules evaluate
/// through the generic scalar path in partial_metric.cpp instead.
enum class Rule {
    Max,         // p(x,y) = max(x,y)
    AbsDiff,     // p(x,y) = |x-y|
    HybridUnit,  // p(x,y) = |x-y| if both x,y < 1, else max(x,y)
};

/// Single-pair reference evaluation. Batch kernels and the domain-checked
/// front end both bottom out here, so results stay bit-identical. max
/// mirrors VMAXPD (returns the second operand on ties), fabs mirrors the
/// sign-mask andnot; neither expression can contract into an FMA.
inline double eval_one(Rule rule, double x, double y) noexcept {
    const double mx = x > y ? x : y;
    switch (rule) {
        case Rule::Max:
            return mx;
        case Rule::AbsDiff:
            return std::fabs(x - y);
        case Rule::HybridUnit:
            return (x < 1.0 && y < 1.0) ? std::fabs(x - y) : mx;
    }
    return 0.0;  // unreachable
}

struct IndexedValue {
    double value;
    // Lowest index attaining value. npos when n == 0 or when no element
    // strictly beats the sentinel (min over all +inf, max over all -inf),
    // which is the "vacuous scan" signal.
    std::size_t index;
};

struct RatioSup {
    // Supremum of num[i]/den[i] over indices with den[i] > tol. Indices with
    // den[i] <= tol but num[i] > tol force the sup to +infinity. When no
    // index qualifies at all, value is -infinity and index is npos.
    double value;
    std::size_t index;
};

struct Ops {
    const char* name;

    // out[i] = p(x, ys[i]) under `rule`.
    void (*eval_row)(Rule rule, double x, const double* ys, double* out, std::size_t n);

    // out[i] = p(xs[i], ys[i]) under `rule`.
    void (*eval_pairs)(Rule rule, const double* xs, const double* ys, double* out,
                       std::size_t n);

    IndexedValue (*min_index)(const double* a, std::size_t n);
    IndexedValue (*max_index)(const double* a, std::size_t n);

    // max over i of a[i] - b[i], with the lowest attaining index.
    IndexedValue (*max_diff_index)(const double* a, const double* b, std::size_t n);

    RatioSup (*ratio_sup_index)(const double* num, const double* den, std::size_t n,
                                double tol);

    // out[i] = alpha * pxy[i] - lhs[i]
    void (*c2_margin)(double alpha, const double* pxy, const double* lhs, double* out,
                      std::size_t n);

    // out[i] = max(alpha * pxy[i], x_self, y_self[i]) - lhs[i]
    void (*pc2_margin)(double alpha, double x_self, const double* pxy,
                       const double* y_self, const double* lhs, double* out,
                       std::size_t n);

    // out[i] = pxy[i] - lhs[i] where pxy[i] > tol, +infinity otherwise.
    // Returns the number of skipped (pxy <= tol) entries.
    std::size_t (*strict_margin)(const double* pxy, const double* lhs, double tol,
                                 double* out, std::size_t n);
};

namespace scalar {
extern const Ops ops;
}

#if defined(__x86_64__) || defined(_M_X64)
#define PMFP_HAVE_AVX2_BACKEND 1
namespace avx2 {
extern const Ops ops;  // call only when cpu_has_avx2()
}
bool cpu_has_avx2() noexcept;
#endif

/// Active backend: AVX2 when the CPU supports it, unless PMFP_KERNELS=scalar
/// is set in the environment or a test override is installed.
const Ops& active() noexcept;

/// Test hook: force a specific backend (nullptr restores automatic choice).
void force_backend(const Ops* ops) noexcept;

}  // namespace pmfp::kernels
