// NEON variants of the distance kernels (aarch64 float64x2_t, part of
// the baseline ISA there, so no extra compile flags needed).

#include "fairdiv/kernels.hpp"

#include <arm_neon.h>

namespace fairdiv::kernels::neon {

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, d, d);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double sum_abs_diff(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vaddq_f64(acc, vabsq_f64(d));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d < 0.0 ? -d : d;
    }
    return s;
}

void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb) {
    float64x2_t acc_ab = vdupq_n_f64(0.0);
    float64x2_t acc_aa = vdupq_n_f64(0.0);
    float64x2_t acc_bb = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a + i);
        const float64x2_t vb = vld1q_f64(b + i);
        acc_ab = vfmaq_f64(acc_ab, va, vb);
        acc_aa = vfmaq_f64(acc_aa, va, va);
        acc_bb = vfmaq_f64(acc_bb, vb, vb);
    }
    double sab = vaddvq_f64(acc_ab);
    double saa = vaddvq_f64(acc_aa);
    double sbb = vaddvq_f64(acc_bb);
    for (; i < n; ++i) {
        sab += a[i] * b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
    }
    ab = sab;
    aa = saa;
    bb = sbb;
}

} // namespace fairdiv::kernels::neon
