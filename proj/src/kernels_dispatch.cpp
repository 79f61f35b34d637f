#include "pmfp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace pmfp::kernels {

namespace {

std::atomic<const Ops*> g_forced{nullptr};

const Ops* pick_auto() {
    if (const char* env = std::getenv("PMFP_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar::ops;
    }
#if defined(PMFP_HAVE_AVX2_BACKEND)
    if (cpu_has_avx2()) return &avx2::ops;
#endif
    return &scalar::ops;
}

}  // namespace

const Ops& active() noexcept {
    if (const Ops* forced = g_forced.load(std::memory_order_relaxed)) return *forced;
    static const Ops* auto_choice = pick_auto();
    return *auto_choice;
}

void force_backend(const Ops* ops) noexcept {
    g_forced.store(ops, std::memory_order_relaxed);
}

}  // namespace pmfp::kernels
