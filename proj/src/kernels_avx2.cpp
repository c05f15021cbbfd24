// AVX2 + FMA variants of the distance kernels. Compiled as a separate
// translation unit with -mavx2 -mfma; callers must gate on runtime CPU
// support (see kernels.cpp).

#include "fairdiv/kernels.hpp"

#include <immintrin.h>

namespace fairdiv::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

} // namespace

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double sum_abs_diff(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, abs_pd(d));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d < 0.0 ? -d : d;
    }
    return s;
}

void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb) {
    __m256d acc_ab = _mm256_setzero_pd();
    __m256d acc_aa = _mm256_setzero_pd();
    __m256d acc_bb = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc_ab = _mm256_fmadd_pd(va, vb, acc_ab);
        acc_aa = _mm256_fmadd_pd(va, va, acc_aa);
        acc_bb = _mm256_fmadd_pd(vb, vb, acc_bb);
    }
    double sab = hsum(acc_ab);
    double saa = hsum(acc_aa);
    double sbb = hsum(acc_bb);
    for (; i < n; ++i) {
        sab += a[i] * b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
    }
    ab = sab;
    aa = saa;
    bb = sbb;
}

} // namespace fairdiv::kernels::avx2
