// AVX2 variants of the scan kernels. Compiled with -mavx2 -ffp-contract=off
// and dispatched only when the CPU supports AVX2. Must match the scalar
// reference bit-for-bit: identical operation order per element, identical
// first-index tie-breaks (see test_kernels.cpp).

#include "pmfp/kernels.hpp"

#if defined(PMFP_HAVE_AVX2_BACKEND)

#include <immintrin.h>

#include <cmath>

namespace pmfp::kernels::avx2 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double vmax1(double a, double b) { return a > b ? a : b; }

inline __m256d vabs(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline __m256d eval_vec(Rule rule, __m256d vx, __m256d vy) {
    switch (rule) {
        case Rule::Max:
            return _mm256_max_pd(vx, vy);
        case Rule::AbsDiff:
            return vabs(_mm256_sub_pd(vx, vy));
        case Rule::HybridUnit: {
            const __m256d one = _mm256_set1_pd(1.0);
            const __m256d both_lt =
                _mm256_and_pd(_mm256_cmp_pd(vx, one, _CMP_LT_OQ),
                              _mm256_cmp_pd(vy, one, _CMP_LT_OQ));
            const __m256d mx = _mm256_max_pd(vx, vy);
            const __m256d ad = vabs(_mm256_sub_pd(vx, vy));
            return _mm256_blendv_pd(mx, ad, both_lt);
        }
    }
    return _mm256_setzero_pd();
}

void eval_row(Rule rule, double x, const double* ys, double* out, std::size_t n) {
    const __m256d vx = _mm256_set1_pd(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, eval_vec(rule, vx, _mm256_loadu_pd(ys + i)));
    }
    for (; i < n; ++i) out[i] = eval_one(rule, x, ys[i]);
}

void eval_pairs(Rule rule, const double* xs, const double* ys, double* out,
                std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(
            out + i,
            eval_vec(rule, _mm256_loadu_pd(xs + i), _mm256_loadu_pd(ys + i)));
    }
    for (; i < n; ++i) out[i] = eval_one(rule, xs[i], ys[i]);
}

// Lane-wise argmin/argmax scaffolding. Per lane a strict compare keeps the
// first occurrence; the fold prefers the lowest index on value ties, which
// restores global first-occurrence order across interleaved lanes.
struct LaneReducer {
    __m256d best;
    __m256i best_idx;
    __m256i cur_idx;

    explicit LaneReducer(double sentinel)
        : best(_mm256_set1_pd(sentinel)),
          best_idx(_mm256_setzero_si256()),
          cur_idx(_mm256_setr_epi64x(0, 1, 2, 3)) {}

    inline void step(__m256d v, __m256d better_mask) {
        best = _mm256_blendv_pd(best, v, better_mask);
        best_idx = _mm256_castpd_si256(_mm256_blendv_pd(
            _mm256_castsi256_pd(best_idx), _mm256_castsi256_pd(cur_idx),
            better_mask));
        cur_idx = _mm256_add_epi64(cur_idx, _mm256_set1_epi64x(4));
    }

    IndexedValue fold(double sentinel) const {
        alignas(32) double vals[4];
        alignas(32) long long idxs[4];
        _mm256_store_pd(vals, best);
        _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), best_idx);
        IndexedValue r{sentinel, npos};
        for (int lane = 0; lane < 4; ++lane) {
            if (vals[lane] == sentinel) continue;  // lane never updated
            const auto idx = static_cast<std::size_t>(idxs[lane]);
            const bool better = (sentinel < 0.0) ? vals[lane] > r.value
                                                 : vals[lane] < r.value;
            if (r.index == npos || better ||
                (vals[lane] == r.value && idx < r.index)) {
                r = {vals[lane], idx};
            }
        }
        return r;
    }
};

IndexedValue min_index(const double* a, std::size_t n) {
    LaneReducer red(kInf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        red.step(v, _mm256_cmp_pd(v, red.best, _CMP_LT_OQ));
    }
    IndexedValue best = red.fold(kInf);
    for (; i < n; ++i) {
        if (a[i] < best.value) best = {a[i], i};
    }
    return best;
}

IndexedValue max_index(const double* a, std::size_t n) {
    LaneReducer red(-kInf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        red.step(v, _mm256_cmp_pd(v, red.best, _CMP_GT_OQ));
    }
    IndexedValue best = red.fold(-kInf);
    for (; i < n; ++i) {
        if (a[i] > best.value) best = {a[i], i};
    }
    return best;
}

IndexedValue max_diff_index(const double* a, const double* b, std::size_t n) {
    LaneReducer red(-kInf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v =
            _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        red.step(v, _mm256_cmp_pd(v, red.best, _CMP_GT_OQ));
    }
    IndexedValue best = red.fold(-kInf);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        if (d > best.value) best = {d, i};
    }
    return best;
}

RatioSup ratio_sup_index(const double* num, const double* den, std::size_t n,
                         double tol) {
    const __m256d vtol = _mm256_set1_pd(tol);
    const __m256d vpinf = _mm256_set1_pd(kInf);
    const __m256d vninf = _mm256_set1_pd(-kInf);
    LaneReducer red(-kInf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vnum = _mm256_loadu_pd(num + i);
        const __m256d vden = _mm256_loadu_pd(den + i);
        const __m256d den_ok = _mm256_cmp_pd(vden, vtol, _CMP_GT_OQ);
        const __m256d num_ok = _mm256_cmp_pd(vnum, vtol, _CMP_GT_OQ);
        // NaN/inf from the raw division is blended away in skipped lanes.
        const __m256d raw = _mm256_div_pd(vnum, vden);
        const __m256d fallback = _mm256_blendv_pd(vninf, vpinf, num_ok);
        const __m256d v = _mm256_blendv_pd(fallback, raw, den_ok);
        red.step(v, _mm256_cmp_pd(v, red.best, _CMP_GT_OQ));
    }
    IndexedValue best = red.fold(-kInf);
    for (; i < n; ++i) {
        double v;
        if (den[i] > tol) {
            v = num[i] / den[i];
        } else if (num[i] > tol) {
            v = kInf;
        } else {
            v = -kInf;
        }
        if (v > best.value) best = {v, i};
    }
    if (best.value == -kInf) best.index = npos;
    return {best.value, best.index};
}

void c2_margin(double alpha, const double* pxy, const double* lhs, double* out,
               std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d rhs = _mm256_mul_pd(va, _mm256_loadu_pd(pxy + i));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(rhs, _mm256_loadu_pd(lhs + i)));
    }
    for (; i < n; ++i) out[i] = alpha * pxy[i] - lhs[i];
}

void pc2_margin(double alpha, double x_self, const double* pxy, const double* y_self,
                const double* lhs, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vxs = _mm256_set1_pd(x_self);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d rhs = _mm256_mul_pd(va, _mm256_loadu_pd(pxy + i));
        rhs = _mm256_max_pd(rhs, vxs);
        rhs = _mm256_max_pd(rhs, _mm256_loadu_pd(y_self + i));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(rhs, _mm256_loadu_pd(lhs + i)));
    }
    for (; i < n; ++i) {
        const double rhs = vmax1(vmax1(alpha * pxy[i], x_self), y_self[i]);
        out[i] = rhs - lhs[i];
    }
}

std::size_t strict_margin(const double* pxy, const double* lhs, double tol,
                          double* out, std::size_t n) {
    const __m256d vtol = _mm256_set1_pd(tol);
    const __m256d vinf = _mm256_set1_pd(kInf);
    std::size_t skipped = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vp = _mm256_loadu_pd(pxy + i);
        const __m256d keep = _mm256_cmp_pd(vp, vtol, _CMP_GT_OQ);
        const __m256d diff = _mm256_sub_pd(vp, _mm256_loadu_pd(lhs + i));
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(vinf, diff, keep));
        skipped += 4 - static_cast<unsigned>(
                           __builtin_popcount(_mm256_movemask_pd(keep)));
    }
    for (; i < n; ++i) {
        if (pxy[i] > tol) {
            out[i] = pxy[i] - lhs[i];
        } else {
            out[i] = kInf;
            ++skipped;
        }
    }
    return skipped;
}

}  // namespace

const Ops ops{
    "avx2",       eval_row,  eval_pairs, min_index,  max_index,
    max_diff_index, ratio_sup_index, c2_margin, pc2_margin, strict_margin,
};

}  // namespace pmfp::kernels::avx2

namespace pmfp::kernels {

bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2"); }

}  // namespace pmfp::kernels

#endif  // PMFP_HAVE_AVX2_BACKEND
