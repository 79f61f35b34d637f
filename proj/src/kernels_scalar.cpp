// Scalar reference kernels. These define the semantics the AVX2 variants
// must reproduce bit-for-bit; keep every operation a plain IEEE op and
// every tie-break toward the lowest index.

#include "pmfp/kernels.hpp"

#include <cmath>

namespace pmfp::kernels::scalar {

namespace {

// Mirrors VMAXPD: returns b when the operands compare equal.
inline double vmax(double a, double b) { return a > b ? a : b; }

void eval_row(Rule rule, double x, const double* ys, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = eval_one(rule, x, ys[i]);
}

void eval_pairs(Rule rule, const double* xs, const double* ys, double* out,
                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = eval_one(rule, xs[i], ys[i]);
}

IndexedValue min_index(const double* a, std::size_t n) {
    IndexedValue best{std::numeric_limits<double>::infinity(), npos};
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < best.value) best = {a[i], i};
    }
    return best;
}

IndexedValue max_index(const double* a, std::size_t n) {
    IndexedValue best{-std::numeric_limits<double>::infinity(), npos};
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > best.value) best = {a[i], i};
    }
    return best;
}

IndexedValue max_diff_index(const double* a, const double* b, std::size_t n) {
    IndexedValue best{-std::numeric_limits<double>::infinity(), npos};
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        if (d > best.value) best = {d, i};
    }
    return best;
}

RatioSup ratio_sup_index(const double* num, const double* den, std::size_t n,
                         double tol) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    RatioSup best{-inf, npos};
    for (std::size_t i = 0; i < n; ++i) {
        double v;
        if (den[i] > tol) {
            v = num[i] / den[i];
        } else if (num[i] > tol) {
            v = inf;
        } else {
            v = -inf;  // degenerate pair, never wins
        }
        if (v > best.value) best = {v, i};
    }
    if (best.value == -inf) best.index = npos;
    return best;
}

void c2_margin(double alpha, const double* pxy, const double* lhs, double* out,
               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * pxy[i] - lhs[i];
}

void pc2_margin(double alpha, double x_self, const double* pxy, const double* y_self,
                const double* lhs, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double rhs = vmax(vmax(alpha * pxy[i], x_self), y_self[i]);
        out[i] = rhs - lhs[i];
    }
}

std::size_t strict_margin(const double* pxy, const double* lhs, double tol, double* out,
                          std::size_t n) {
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pxy[i] > tol) {
            out[i] = pxy[i] - lhs[i];
        } else {
            out[i] = std::numeric_limits<double>::infinity();
            ++skipped;
        }
    }
    return skipped;
}

}  // namespace

const Ops ops{
    "scalar",     eval_row,  eval_pairs, min_index,  max_index,
    max_diff_index, ratio_sup_index, c2_margin, pc2_margin, strict_margin,
};

}  // namespace pmfp::kernels::scalar
