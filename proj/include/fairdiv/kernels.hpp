#pragma once

#include <cstddef>

// Distance inner loops. Scalar reference kernels plus SIMD variants
// selected at runtime; all variants compute the same quantities and are
// equivalence-tested against the scalar reference.

namespace fairdiv::kernels {

enum class Level {
    scalar,
    avx2,
    neon,
};

const char* level_name(Level level);

// Kernel bundle. sum_squared_diff and sum_abs_diff back the Euclidean
// and Manhattan metrics; dot_and_sqnorms computes <a,b>, <a,a>, <b,b>
// in one pass for the angular metric.
struct Ops {
    double (*sum_squared_diff)(const double* a, const double* b, std::size_t n);
    double (*sum_abs_diff)(const double* a, const double* b, std::size_t n);
    void (*dot_and_sqnorms)(const double* a, const double* b, std::size_t n,
                            double& ab, double& aa, double& bb);
    Level level;
};

// The bundle in use. Picks the best supported level on first call.
const Ops& active();

// Highest level this binary + CPU supports.
Level best_supported();
bool is_supported(Level level);

// Overrides the dispatch, e.g. to force the scalar reference path.
// Throws std::invalid_argument if the level is not supported here.
void force_level(Level level);

const Ops& ops_for(Level level);

namespace scalar {
double sum_squared_diff(const double* a, const double* b, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb);
} // namespace scalar

#if defined(FAIRDIV_WITH_AVX2)
namespace avx2 {
double sum_squared_diff(const double* a, const double* b, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb);
} // namespace avx2
#endif

#if defined(FAIRDIV_WITH_NEON)
namespace neon {
double sum_squared_diff(const double* a, const double* b, std::size_t n);
double sum_abs_diff(const double* a, const double* b, std::size_t n);
void dot_and_sqnorms(const double* a, const double* b, std::size_t n,
                     double& ab, double& aa, double& bb);
} // namespace neon
#endif

} // namespace fairdiv::kernels
