#include "fairdiv/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace fairdiv::kernels {

namespace scalar {

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double sum_abs_diff(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += std::fabs(a[i] - b[i]);
    }
    return s;
}

void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb) {
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += a[i] * b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
    }
    ab = sab;
    aa = saa;
    bb = sbb;
}

} // namespace scalar

namespace {

constexpr Ops kScalarOps{
    &scalar::sum_squared_diff,
    &scalar::sum_abs_diff,
    &scalar::dot_and_sqnorms,
    Level::scalar,
};

#if defined(FAIRDIV_WITH_AVX2)
constexpr Ops kAvx2Ops{
    &avx2::sum_squared_diff,
    &avx2::sum_abs_diff,
    &avx2::dot_and_sqnorms,
    Level::avx2,
};
#endif

#if defined(FAIRDIV_WITH_NEON)
constexpr Ops kNeonOps{
    &neon::sum_squared_diff,
    &neon::sum_abs_diff,
    &neon::dot_and_sqnorms,
    Level::neon,
};
#endif

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const char* level_name(Level level) {
    switch (level) {
        case Level::scalar: return "scalar";
        case Level::avx2: return "avx2";
        case Level::neon: return "neon";
    }
    return "unknown";
}

bool is_supported(Level level) {
    switch (level) {
        case Level::scalar:
            return true;
        case Level::avx2:
#if defined(FAIRDIV_WITH_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Level::neon:
#if defined(FAIRDIV_WITH_NEON)
            return true; // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

Level best_supported() {
    if (is_supported(Level::avx2)) return Level::avx2;
    if (is_supported(Level::neon)) return Level::neon;
    return Level::scalar;
}

const Ops& ops_for(Level level) {
    if (!is_supported(level)) {
        throw std::invalid_argument(std::string("kernel level not supported: ") + level_name(level));
    }
    switch (level) {
#if defined(FAIRDIV_WITH_AVX2)
        case Level::avx2: return kAvx2Ops;
#endif
#if defined(FAIRDIV_WITH_NEON)
        case Level::neon: return kNeonOps;
#endif
        default: return kScalarOps;
    }
}

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (ops == nullptr) {
        ops = &ops_for(best_supported());
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force_level(Level level) {
    g_active.store(&ops_for(level), std::memory_order_release);
}

} // namespace fairdiv::kernels
