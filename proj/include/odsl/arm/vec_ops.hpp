#pragma once

#include <cstddef>

namespace odsl::arm::vecops {

// Dot product of two float vectors. Dispatches once, at first use, to the
// best kernel the CPU supports; the scalar kernel is the reference the SIMD
// variants are equivalence-tested against.
float dot(const float* a, const float* b, std::size_t n);

float dot_scalar(const float* a, const float* b, std::size_t n);

#if defined(ODSL_HAVE_AVX2)
float dot_avx2(const float* a, const float* b, std::size_t n);
#endif

// Name of the kernel `dot` dispatches to ("avx2" or "scalar").
const char* active_kernel();

}  // namespace odsl::arm::vecops
