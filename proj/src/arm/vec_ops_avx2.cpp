// AVX2 kernel, compiled with -mavx2 in its own translation unit. Callers go
// through the runtime dispatcher in vec_ops.cpp; this function must only be
// reached when the CPU reports AVX2.
#if defined(ODSL_HAVE_AVX2)

#include <immintrin.h>

#include "odsl/arm/vec_ops.hpp"

namespace odsl::arm::vecops {

float dot_avx2(const float* a, const float* b, std::size_t n) {
    __m256 acc = _mm256_setzero_ps();
    const std::size_t vec_end = n - n % 8;
    for (std::size_t i = 0; i < vec_end; i += 8) {
        const __m256 va = _mm256_loadu_ps(a + i);
        const __m256 vb = _mm256_loadu_ps(b + i);
        acc = _mm256_add_ps(acc, _mm256_mul_ps(va, vb));
    }

    // Horizontal sum of the 8 lanes.
    __m128 lo = _mm256_castps256_ps128(acc);
    __m128 hi = _mm256_extractf128_ps(acc, 1);
    lo = _mm_add_ps(lo, hi);
    lo = _mm_hadd_ps(lo, lo);
    lo = _mm_hadd_ps(lo, lo);
    float total = _mm_cvtss_f32(lo);

    for (std::size_t i = vec_end; i < n; ++i) total += a[i] * b[i];
    return total;
}

}  // namespace odsl::arm::vecops

#endif  // ODSL_HAVE_AVX2
